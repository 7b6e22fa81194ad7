"""Numerical destabilization data for extensions of the form

    0 -> O^k -> E -> F -> 0        (rank n, degree d, 0 < d < n)

A destabilizing stable quotient H of E, of rank s and degree d', induces a
3x3 commutative ladder whose remaining ranks are determined by two integers
m = rk(H_1) and l = rk(G_1), with l + m = n - k.  Whether such data can
exist is governed by four inequalities in (s, d', m, l):

    (a)  s*d - n*d' >= 0                 slope condition on H
    (b)  (l+m)*d' - m*d > 0              stability of F
    (c)  d' - s + m*g >= 0               H is stable with sections
    (d)  m(n-s-l) - d'(l+s) + s(d+lg-n+s) > 0

When (d) holds strictly for every admissible choice, a general extension is
stable and the locus is non-empty.  The fact that (a), (b), (c) already
force (d) is the content the verification sweeps nail down on dense grids;
the corner point computed here is the pivot of the convexity argument.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import BNPoint, moduli_dim
from .errors import InvalidK, OutOfStrip


@dataclass(frozen=True)
class ExtensionTuple:
    """One candidate (s, d', m, l) attached to a base locus.

    Rank constraints are enforced up front; the degree d' is deliberately
    unconstrained so inequality evaluation stays total on rank-valid data.
    Enumerated admissible tuples always come out with 0 <= d' < d.
    """

    base: BNPoint
    s: int
    d_prime: int
    m: int
    l: int

    def __post_init__(self) -> None:
        n, k = self.base.n, self.base.k
        if self.m < 1:
            raise ValueError("m must be ≥ 1")
        if self.l < 1:
            raise ValueError("l must be ≥ 1")
        if self.l + self.m != n - k:
            raise ValueError(f"l+m must equal n-k={n - k}")
        if self.m > self.s - 1:
            raise ValueError("m must be ≤ s-1 (the trivial part of H is non-zero)")
        if self.s > n - self.l:
            raise ValueError("s must be ≤ n-l")
        if self.s > n - 1:
            raise ValueError("s must be ≤ n-1 (H is a proper quotient)")


@dataclass(frozen=True)
class InequalityStatus:
    """Exact truth values of (a)-(d) plus the derived quotient-rank bound."""

    a: bool
    b: bool
    c: bool
    d: bool
    quotient_rank_bound: bool
    lhs_d: int


def inequality_status(t: ExtensionTuple) -> InequalityStatus:
    """Evaluate all five inequalities for one tuple, exactly."""
    g, n, d = t.base.g, t.base.n, t.base.d
    s, dp, m, l = t.s, t.d_prime, t.m, t.l
    lhs = m * (n - s - l) - dp * (l + s) + s * (d + l * g - n + s)
    return InequalityStatus(
        a=s * d - n * dp >= 0,
        b=(l + m) * dp - m * d > 0,
        c=dp - s + m * g >= 0,
        d=lhs > 0,
        quotient_rank_bound=(n - d) * s >= n * (n - d - l * g),
        lhs_d=lhs,
    )


def corner_point(g: int, n: int, d: int, s: int) -> tuple[Fraction, Fraction]:
    """The (m, d') vertex where the slope line of (a) meets the line of (c).

    Solving s*d - n*d' = 0 and d' - s + m*g = 0 simultaneously gives
    (m, d') = (s(n-d)/(ng), sd/n).  The admissible region lies on one side
    of every line through this vertex, which is why the strictness of (d)
    needs checking only here.
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if not 0 < d < n:
        raise OutOfStrip(f"d={d} must satisfy 0 < d < n={n}")
    if not 1 <= s <= n - 1:
        raise ValueError(f"s={s} must satisfy 1 ≤ s ≤ n-1")
    return Fraction(s * (n - d), n * g), Fraction(s * d, n)


def margin_at_corner(g: int, n: int, d: int, s: int, l: int) -> Fraction:
    """Value of the (d) left-hand side at the corner point, factored form:

        s(g-1)/(ng) * [s(n-d) - n(n-d-lg) + l(n-d)]

    Must agree exactly with evaluating the (d) left-hand side directly at
    the corner coordinates; the identity suite checks that on full grids.
    s = 0 is allowed and gives 0 (the whole expression carries a factor s).
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if not 0 < d < n:
        raise OutOfStrip(f"d={d} must satisfy 0 < d < n={n}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"s={s} must satisfy 0 ≤ s ≤ n-1")
    if l < 1:
        raise ValueError("l must be ≥ 1")
    bracket = s * (n - d) - n * (n - d - l * g) + l * (n - d)
    return Fraction(s * (g - 1), n * g) * bracket


def lhs_d_at(g: int, n: int, d: int, s: int, l: int, m: Fraction, dp: Fraction) -> Fraction:
    """The (d) left-hand side at rational (m, d'), for cross-checking."""
    return m * (n - s - l) - dp * (l + s) + s * (d + l * g - n + s)


def admissible_tuples(p: BNPoint) -> list[ExtensionTuple]:
    """Enumerate every integer tuple the destabilization ladder permits.

    Ranges: l + m = n - k with m, l >= 1, m <= s - 1, s <= n - l, and
    0 <= d' with (a), (b), (c) all satisfied.  (a) bounds d' above by
    sd/n < d, so the enumeration is finite.  Output is in lexicographic
    (s, m, d') order.
    """
    g, n, d, k = p.g, p.n, p.d, p.k
    if d <= 0 or d >= n:
        raise OutOfStrip(f"d={d} must satisfy 0 < d < n={n}")
    if k < 1 or k >= n:
        raise InvalidK(f"k={k} must satisfy 1 ≤ k < n={n}")
    i = n - k
    out = []
    for s in range(2, n):
        for m in range(1, min(s - 1, i - 1) + 1):
            l = i - m
            if s > n - l:
                continue
            for dp in range(0, (s * d) // n + 1):
                if (l + m) * dp - m * d <= 0:
                    continue
                if dp - s + m * g < 0:
                    continue
                t = ExtensionTuple(base=p, s=s, d_prime=dp, m=m, l=l)
                assert t.d_prime < d
                out.append(t)
    return out


def nonemptiness_criterion(p: BNPoint) -> tuple[bool, Optional[ExtensionTuple]]:
    """True when (d) is strict on every admissible tuple (vacuously on none).

    A general extension is then stable, so the stable locus is non-empty.
    Returns the first violating tuple as a witness otherwise.
    """
    for t in admissible_tuples(p):
        if inequality_status(t).lhs_d <= 0:
            return False, t
    return True, None


def codim_bound(t: ExtensionTuple) -> int:
    """(s-m)(d-d'+lg-n+s): lower bound for the codimension of the locus of
    extension classes degenerate enough to admit this quotient data."""
    g, n, d = t.base.g, t.base.n, t.base.d
    return (t.s - t.m) * (d - t.d_prime + t.l * g - n + t.s)


def param_count(t: ExtensionTuple) -> int:
    """Parameters available to quotients with this data:
    dim M(n-k, d) + ld' - m(d-d') - lm(g-1)."""
    g, n, d, k = t.base.g, t.base.n, t.base.d, t.base.k
    return (
        moduli_dim(n - k, g)
        + t.l * t.d_prime
        - t.m * (d - t.d_prime)
        - t.l * t.m * (g - 1)
    )


def tuple_record(t: ExtensionTuple) -> dict:
    """Flat JSONL record for one tuple, inequality flags included."""
    st = inequality_status(t)
    p = t.base
    return {
        "g": p.g,
        "n": p.n,
        "d": p.d,
        "k": p.k,
        "s": t.s,
        "d_prime": t.d_prime,
        "m": t.m,
        "l": t.l,
        "a": st.a,
        "b": st.b,
        "c": st.c,
        "d_flag": st.d,
        "lhs_d": st.lhs_d,
    }


def tuple_jsonl(t: ExtensionTuple) -> str:
    return json.dumps(tuple_record(t), separators=(",", ":"))
