"""Exact closed-form invariants of Brill-Noether loci.

Everything here is integer or exact-rational arithmetic.  The engine never
rounds: every downstream verdict (emptiness, dimension, sweep verification)
is an exact (in)equality, so a single floating-point operation anywhere in
the pipeline would make the whole exercise pointless.  Floats appear only
when the geography module serializes SVG coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidQuotientRank, SlopeOutOfRange, ThresholdViolated


@dataclass(frozen=True)
class BNPoint:
    """A Brill-Noether locus W^{k-1}_{n,d} on a genus-g curve.

    g: genus of the curve (>= 2)
    n: rank of the bundles (>= 1)
    d: degree of the bundles
    k: number of independent sections required (>= 1)
    """

    g: int
    n: int
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError("g must be ≥ 2")
        if self.n < 1:
            raise ValueError("n must be ≥ 1")
        if self.k < 1:
            raise ValueError("k must be ≥ 1")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.d, self.n)

    def label(self) -> str:
        """Conventional name of the locus, e.g. W^0_{2,1}."""
        return f"W^{self.k - 1}_{{{self.n},{self.d}}}"


@dataclass(frozen=True)
class SlopeCoords:
    """Coordinates (lambda, mu) = (k/n, d/n) of a locus on the geography map.

    lambda >= 0 is required; points derived from a BNPoint always have
    lambda > 0 since k >= 1 there.
    """

    lam: Fraction
    mu: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.lam < 0:
            raise ValueError("lambda must be ≥ 0")


def slope_coords(p: BNPoint) -> SlopeCoords:
    """Map a locus to its geography coordinates (k/n, d/n)."""
    return SlopeCoords(Fraction(p.k, p.n), Fraction(p.d, p.n))


def brill_noether_number(p: BNPoint) -> int:
    """rho = n^2(g-1) + 1 - k(k - d + n(g-1)), the expected dimension.

    May be negative.  A positive value does not imply the locus is
    non-empty; emptiness is decided by the classification module.
    """
    g, n, d, k = p.g, p.n, p.d, p.k
    return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1))


def rho_tilde(g: int, c: SlopeCoords) -> Fraction:
    """Normalized expected dimension (g-1) - lambda(lambda - mu + g - 1).

    Equals (rho - 1)/n^2 when (lambda, mu) come from a BNPoint; its zero set
    is the hyperbola branch bounding the expected-finite region of the map.
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    return (g - 1) - c.lam * (c.lam - c.mu + (g - 1))


def clifford_bound(g: int, n: int, d: int) -> Fraction:
    """Section-count bound n + d/2 for semistable bundles, 0 <= d/n <= 2g-2."""
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if n < 1:
        raise ValueError("n must be ≥ 1")
    mu = Fraction(d, n)
    if mu < 0 or mu > 2 * g - 2:
        raise SlopeOutOfRange(f"slope {mu} outside [0, {2 * g - 2}]")
    return n + Fraction(d, 2)


def h1_dual(p: BNPoint) -> int:
    """d + (n-k)(g-1): classes available to build a rank-n bundle from a
    rank-(n-k) quotient of degree d with no sections on the dual."""
    if p.k >= p.n:
        raise InvalidQuotientRank(f"k={p.k} must be < n={p.n}")
    if p.d < 0:
        raise ValueError("d must be ≥ 0")
    return p.d + (p.n - p.k) * (p.g - 1)


def moduli_dim(n: int, g: int) -> int:
    """Dimension n^2(g-1) + 1 of the rank-n degree-d moduli space.

    n = 1 gives g (the Jacobian; the general formula agrees).  n = 0 is
    defined as 0: the only "bundle" is the zero bundle, a single point,
    which the degree-0 classification needs for its k = n row.
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if n < 0:
        raise ValueError("n must be ≥ 0")
    if n == 0:
        return 0
    return n * n * (g - 1) + 1


def grass_dim(p: BNPoint) -> int:
    """k(d + (n-k)g - n): dimension of the Grassmannian of extension classes
    classifying the trivial-subbundle extensions up to automorphism."""
    g, n, d, k = p.g, p.n, p.d, p.k
    if k >= n:
        raise InvalidQuotientRank(f"k={k} must be < n={n}")
    if d < 0:
        raise ValueError("d must be ≥ 0")
    if n > d + (n - k) * g:
        raise ThresholdViolated(
            f"n={n} > d+(n-k)g={d + (n - k) * g}: no extensions with independent classes"
        )
    return k * (d + (n - k) * g - n)


def nonstable_param_bound(n: int, g: int) -> int:
    """n^2(g-1): parameter-count ceiling for any bounded family of
    non-stable rank-n bundles (one less than the stable moduli count)."""
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if n < 1:
        raise ValueError("n must be ≥ 1")
    return n * n * (g - 1)
