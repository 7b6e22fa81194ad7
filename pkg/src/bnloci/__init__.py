"""Exact-arithmetic engine for Brill-Noether loci of small slope.

Classifies the loci W^{k-1}_{n,d} (stable) and their semistable analogues
for 0 <= d <= n on a genus-g curve, verifies the supporting inequality
machinery by exhaustive search over bounded grids, and renders the
geography map of the (k/n, d/n) plane as SVG.
"""

from .classify import (
    Classification,
    Governing,
    Model,
    Status,
    StripRow,
    classify_semistable,
    classify_stable,
    scan_strip,
    singular_locus,
    trivial_region_fact,
)
from .core import (
    BNPoint,
    SlopeCoords,
    brill_noether_number,
    clifford_bound,
    grass_dim,
    h1_dual,
    moduli_dim,
    nonstable_param_bound,
    rho_tilde,
    slope_coords,
)
from .errors import (
    EmptyLocus,
    InvalidK,
    InvalidQuotientRank,
    OutOfStrip,
    RankOne,
    SlopeOutOfRange,
    ThresholdViolated,
)
from .extensions import (
    ExtensionTuple,
    InequalityStatus,
    admissible_tuples,
    codim_bound,
    corner_point,
    inequality_status,
    margin_at_corner,
    nonemptiness_criterion,
    param_count,
)
from .geography import (
    MapDocument,
    Parallelogram,
    RegionReport,
    TeixidorCheck,
    mu_on_tangent,
    region_report,
    render_map,
    tangent_line,
    validate_teixidor,
)
from .verify import (
    SweepBounds,
    VerificationReport,
    sweep_identities,
    sweep_inequality_implication,
    sweep_threshold_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "BNPoint",
    "Classification",
    "EmptyLocus",
    "ExtensionTuple",
    "Governing",
    "InequalityStatus",
    "InvalidK",
    "InvalidQuotientRank",
    "MapDocument",
    "Model",
    "OutOfStrip",
    "Parallelogram",
    "RankOne",
    "RegionReport",
    "SlopeCoords",
    "SlopeOutOfRange",
    "Status",
    "StripRow",
    "SweepBounds",
    "TeixidorCheck",
    "ThresholdViolated",
    "VerificationReport",
    "admissible_tuples",
    "brill_noether_number",
    "classify_semistable",
    "classify_stable",
    "clifford_bound",
    "codim_bound",
    "corner_point",
    "grass_dim",
    "h1_dual",
    "inequality_status",
    "margin_at_corner",
    "moduli_dim",
    "mu_on_tangent",
    "nonemptiness_criterion",
    "nonstable_param_bound",
    "param_count",
    "region_report",
    "render_map",
    "rho_tilde",
    "scan_strip",
    "singular_locus",
    "slope_coords",
    "sweep_identities",
    "sweep_inequality_implication",
    "sweep_threshold_consistency",
    "tangent_line",
    "trivial_region_fact",
    "validate_teixidor",
]
