"""Emptiness, dimension and irreducibility verdicts on the strip 0 <= d <= n.

The stable locus W^{k-1}_{n,d} is non-empty exactly when

    d > 0,   n <= d + (n-k)g,   (n,d,k) != (n,n,n),

and the semistable locus additionally picks up the whole d = 0 column for
k <= n.  Non-empty loci are irreducible of dimension rho, singular exactly
along the next locus W^k_{n,d}, except for two boundary families with their
own models: degree 0 (trivial factor plus a smaller moduli space) and
degree = rank with all sections (symmetric power of the curve).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import BNPoint, brill_noether_number, moduli_dim
from .errors import EmptyLocus, OutOfStrip, RankOne


class Status(str, Enum):
    NON_EMPTY = "NonEmpty"
    EMPTY = "Empty"


class Model(str, Enum):
    NONE = "None"
    TRIVIAL_FACTOR = "SemistableTrivialFactor"
    SYMMETRIC_POWER = "SymmetricPower"


class Governing(str, Enum):
    """Which result decided the verdict (diagnostic metadata)."""

    STABLE_THRESHOLD = "stable-threshold"
    SEMISTABLE_THRESHOLD = "semistable-threshold"
    DEGREE_ZERO_STABLE = "degree-zero-stable"
    DEGREE_ZERO_TRIVIAL_FACTOR = "degree-zero-trivial-factor"
    SLOPE_ONE_STABLE = "slope-one-stable"
    SLOPE_ONE_SYMMETRIC_POWER = "slope-one-symmetric-power"
    REGION_FACT = "region-fact"


@dataclass(frozen=True)
class Classification:
    """Verdict for one locus.

    dimension and singular_locus are present only on non-empty loci;
    singular_locus points at the locus demanding one more section.
    """

    status: Status
    governing: Governing
    dimension: Optional[int] = None
    irreducible: Optional[bool] = None
    singular_locus: Optional[BNPoint] = None
    model: Model = Model.NONE

    def __post_init__(self) -> None:
        if self.status is Status.EMPTY:
            if self.dimension is not None:
                raise ValueError("empty locus cannot carry a dimension")
            if self.singular_locus is not None:
                raise ValueError("empty locus cannot carry a singular locus")

    @property
    def non_empty(self) -> bool:
        return self.status is Status.NON_EMPTY


def _check_strip(p: BNPoint) -> None:
    if p.n == 1:
        raise RankOne("n must be ≥ 2 for strip classification")
    if p.d < 0 or p.d > p.n:
        raise OutOfStrip(f"d={p.d} outside strip [0, {p.n}]; use region facts instead")


def meets_section_threshold(p: BNPoint) -> bool:
    """n <= d + (n-k)g, the extension-count condition for existence."""
    return p.n <= p.d + (p.n - p.k) * p.g


def classify_stable(p: BNPoint) -> Classification:
    """Classify the stable locus of p inside the strip 0 <= d <= n."""
    _check_strip(p)
    g, n, d, k = p.g, p.n, p.d, p.k
    if d == 0:
        # a section of a degree-0 stable bundle would split off a trivial factor
        return Classification(Status.EMPTY, Governing.DEGREE_ZERO_STABLE)
    governing = Governing.SLOPE_ONE_STABLE if d == n else Governing.STABLE_THRESHOLD
    if d == n and k == n:
        return Classification(Status.EMPTY, governing)
    if not meets_section_threshold(p):
        return Classification(Status.EMPTY, governing)
    return Classification(
        Status.NON_EMPTY,
        governing,
        dimension=brill_noether_number(p),
        irreducible=True,
        singular_locus=BNPoint(g, n, d, k + 1),
    )


def classify_semistable(p: BNPoint) -> Classification:
    """Classify the semistable locus of p inside the strip 0 <= d <= n."""
    _check_strip(p)
    g, n, d, k = p.g, p.n, p.d, p.k
    if d == 0:
        if k > n:
            return Classification(Status.EMPTY, Governing.SEMISTABLE_THRESHOLD)
        # every class splits as O^k + (rank n-k, degree 0); the locus is a
        # copy of the smaller semistable moduli space
        return Classification(
            Status.NON_EMPTY,
            Governing.DEGREE_ZERO_TRIVIAL_FACTOR,
            dimension=moduli_dim(n - k, g),
            irreducible=True,
            model=Model.TRIVIAL_FACTOR,
        )
    if d == n and k == n:
        # classes O(x_1) + ... + O(x_n): the n-th symmetric power of the curve
        return Classification(
            Status.NON_EMPTY,
            Governing.SLOPE_ONE_SYMMETRIC_POWER,
            dimension=n,
            irreducible=True,
            model=Model.SYMMETRIC_POWER,
        )
    if not meets_section_threshold(p):
        return Classification(Status.EMPTY, Governing.SEMISTABLE_THRESHOLD)
    return Classification(
        Status.NON_EMPTY,
        Governing.SEMISTABLE_THRESHOLD,
        dimension=brill_noether_number(p),
        irreducible=True,
    )


def singular_locus(p: BNPoint) -> Classification:
    """Classification of the singular set of a non-empty stable locus.

    The singular set is the locus with one more section; this returns its
    own full classification (often Empty, i.e. the locus is smooth).
    """
    cls = classify_stable(p)
    if not cls.non_empty:
        raise EmptyLocus(f"{p.label()} is empty; it has no singular locus")
    return classify_stable(BNPoint(p.g, p.n, p.d, p.k + 1))


def trivial_region_fact(g: int, n: int, d: int, k: int) -> Classification:
    """k <= 0 asks for no sections at all: the locus is the whole moduli space."""
    if k > 0:
        raise ValueError("region fact applies only to k ≤ 0")
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if n < 1:
        raise ValueError("n must be ≥ 1")
    return Classification(
        Status.NON_EMPTY,
        Governing.REGION_FACT,
        dimension=moduli_dim(n, g),
        irreducible=True,
    )


@dataclass(frozen=True)
class StripRow:
    point: BNPoint
    stable: Classification
    semistable: Classification
    rho: int


def scan_strip(g: int, n: int) -> list[StripRow]:
    """Tabulate both classifications over d = 0..n, k = 1..n.

    Rows come out in lexicographic (d, k) order, (n+1)*n of them.
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if n < 2:
        raise ValueError("n must be ≥ 2")
    rows = []
    for d in range(0, n + 1):
        for k in range(1, n + 1):
            p = BNPoint(g, n, d, k)
            rows.append(
                StripRow(
                    point=p,
                    stable=classify_stable(p),
                    semistable=classify_semistable(p),
                    rho=brill_noether_number(p),
                )
            )
    return rows


STRIP_CSV_HEADER = "g,n,d,k,rho,stable_status,stable_dim,semistable_status,semistable_dim,model"


def strip_row_record(row: StripRow) -> dict:
    """Flat record with the CSV/JSONL field names."""
    p = row.point
    return {
        "g": p.g,
        "n": p.n,
        "d": p.d,
        "k": p.k,
        "rho": row.rho,
        "stable_status": row.stable.status.value,
        "stable_dim": row.stable.dimension,
        "semistable_status": row.semistable.status.value,
        "semistable_dim": row.semistable.dimension,
        "model": row.semistable.model.value,
    }


def strip_row_csv(row: StripRow) -> str:
    rec = strip_row_record(row)
    cells = [
        "" if rec[name] is None else str(rec[name])
        for name in STRIP_CSV_HEADER.split(",")
    ]
    return ",".join(cells)


def strip_row_jsonl(row: StripRow) -> str:
    return json.dumps(strip_row_record(row), separators=(",", ":"))
