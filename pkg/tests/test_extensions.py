"""Destabilization inequality machinery.

The reference values are hand evaluations of the five closed forms; the
corner identity and the derived quotient-rank bound get independent
re-derivations here (pure Fraction arithmetic, blind box enumeration)
rather than reusing the library's analytic ranges.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bnloci import (
    BNPoint,
    ExtensionTuple,
    InvalidK,
    OutOfStrip,
    admissible_tuples,
    codim_bound,
    corner_point,
    inequality_status,
    margin_at_corner,
    nonemptiness_criterion,
    param_count,
)
from bnloci.extensions import lhs_d_at, tuple_jsonl, tuple_record


def T(g, n, d, k, s, dp, m, l):
    return ExtensionTuple(base=BNPoint(g, n, d, k), s=s, d_prime=dp, m=m, l=l)


def test_inequality_status_all_hold():
    st_ = inequality_status(T(2, 4, 2, 1, s=2, dp=1, m=1, l=2))
    assert st_.a and st_.b and st_.c and st_.d
    assert st_.lhs_d == 4  # 0 - 4 + 8
    assert st_.quotient_rank_bound  # 4 >= -8


def test_inequality_status_a_fails():
    st_ = inequality_status(T(2, 3, 2, 1, s=2, dp=2, m=1, l=1))
    assert not st_.a  # 4 - 6 < 0


def test_lhs_d_independent_of_m_when_s_plus_l_is_n():
    # the m coefficient is n-s-l, so s = n-l kills it
    a = inequality_status(T(2, 6, 3, 2, s=3, dp=1, m=1, l=3))
    b = inequality_status(T(2, 6, 3, 1, s=3, dp=1, m=2, l=3))
    assert a.lhs_d == b.lhs_d


def test_corner_point():
    assert corner_point(2, 4, 2, 2) == (Fraction(1, 2), Fraction(1))
    # the corner satisfies (a) with equality and lies on (n-d)d' = d*m*g
    for g, n, d, s in [(2, 4, 2, 2), (3, 7, 3, 5), (4, 9, 4, 6)]:
        m_c, dp_c = corner_point(g, n, d, s)
        assert s * d - n * dp_c == 0
        assert (n - d) * dp_c == d * m_c * g


def test_margin_at_corner():
    assert margin_at_corner(2, 4, 2, 2, 2) == 4
    # agrees with direct evaluation at the corner
    m_c, dp_c = corner_point(2, 4, 2, 2)
    assert lhs_d_at(2, 4, 2, 2, 2, m_c, dp_c) == 4
    assert margin_at_corner(2, 4, 2, 0, 2) == 0  # overall factor s
    with pytest.raises(ValueError):
        margin_at_corner(1, 4, 2, 2, 2)


@given(
    st.integers(min_value=2, max_value=8),
    st.integers(min_value=2, max_value=20),
    st.data(),
)
def test_corner_identity(g, n, data):
    d = data.draw(st.integers(min_value=1, max_value=n - 1))
    s = data.draw(st.integers(min_value=1, max_value=n - 1))
    l = data.draw(st.integers(min_value=1, max_value=n))
    m_c, dp_c = corner_point(g, n, d, s)
    assert lhs_d_at(g, n, d, s, l, m_c, dp_c) == margin_at_corner(g, n, d, s, l)


def test_admissible_tuples_enumeration():
    tuples = admissible_tuples(BNPoint(2, 4, 2, 1))
    assert [(t.s, t.d_prime, t.m, t.l) for t in tuples] == [(2, 1, 1, 2)]
    assert admissible_tuples(BNPoint(2, 3, 2, 1)) == []
    assert admissible_tuples(BNPoint(2, 2, 1, 1)) == []  # l+m = 1 cannot split


def test_admissible_tuples_respect_invariants():
    for g, n, d, k in [(2, 8, 5, 3), (3, 9, 4, 2), (4, 10, 7, 5)]:
        p = BNPoint(g, n, d, k)
        tuples = admissible_tuples(p)
        keys = [(t.s, t.m, t.d_prime) for t in tuples]
        assert keys == sorted(keys)  # lexicographic (s, m, d')
        for t in tuples:
            st_ = inequality_status(t)
            assert st_.a and st_.b and st_.c
            assert 0 <= t.d_prime < d
            assert t.l + t.m == n - k and t.m <= t.s - 1 and t.s <= n - t.l


def test_admissible_tuples_errors():
    with pytest.raises(OutOfStrip):
        admissible_tuples(BNPoint(2, 4, 0, 1))
    with pytest.raises(OutOfStrip):
        admissible_tuples(BNPoint(2, 4, 4, 1))
    with pytest.raises(InvalidK):
        admissible_tuples(BNPoint(2, 4, 2, 4))


def test_nonemptiness_criterion():
    assert nonemptiness_criterion(BNPoint(2, 4, 2, 1)) == (True, None)
    assert nonemptiness_criterion(BNPoint(2, 3, 2, 1)) == (True, None)  # vacuous
    assert nonemptiness_criterion(BNPoint(3, 7, 3, 4)) == (True, None)


def test_codim_bound():
    assert codim_bound(T(2, 4, 2, 1, s=2, dp=1, m=1, l=2)) == 3
    assert codim_bound(T(3, 5, 3, 3, s=3, dp=1, m=1, l=1)) == 6
    # zero factor when d' = d + lg - n + s and s-m = 1
    assert codim_bound(T(2, 6, 3, 2, s=2, dp=3, m=1, l=3)) == (2 - 1) * (3 - 3 + 6 - 6 + 2)


def test_param_count():
    assert param_count(T(2, 4, 2, 1, s=2, dp=1, m=1, l=2)) == 9  # 10 + 2 - 1 - 2
    assert param_count(T(2, 3, 2, 1, s=2, dp=1, m=1, l=1)) == 4  # 5 + 1 - 1 - 1


def test_tuple_type_invariants():
    with pytest.raises(ValueError):
        T(2, 4, 2, 1, s=2, dp=1, m=2, l=1)  # m > s-1
    with pytest.raises(ValueError):
        T(2, 4, 2, 1, s=3, dp=1, m=1, l=2)  # s > n-l
    with pytest.raises(ValueError):
        T(2, 4, 2, 2, s=2, dp=1, m=1, l=2)  # l+m != n-k


def test_tuple_record_schema():
    t = T(2, 4, 2, 1, s=2, dp=1, m=1, l=2)
    rec = tuple_record(t)
    assert list(rec) == [
        "g", "n", "d", "k", "s", "d_prime", "m", "l", "a", "b", "c", "d_flag", "lhs_d",
    ]
    assert tuple_jsonl(t) == (
        '{"g":2,"n":4,"d":2,"k":1,"s":2,"d_prime":1,"m":1,"l":2,'
        '"a":true,"b":true,"c":true,"d_flag":true,"lhs_d":4}'
    )


def _blind_hypothesis_region(g, n, d, s, l):
    """Blind Fraction-arithmetic box scan of the (m, d') integer lattice.

    Deliberately ignores the analytic range reductions used by the sweep:
    scans m and d' up to n^2 and d, filtering by the raw inequalities.
    """
    for m in range(1, n * n + 1):
        for dp in range(0, d + 1):
            if s * d - n * dp < 0:
                continue
            if (l + m) * dp - m * d <= 0:
                continue
            if dp - s + m * g < 0:
                continue
            yield m, Fraction(dp)


def test_quotient_rank_bound_implication():
    # wherever the hypothesis region contains a lattice point, the derived
    # bound (n-d)s >= n(n-d-lg) must hold
    for g in (2, 3, 5):
        for n in range(2, 9):
            for d in range(1, n):
                for s in range(1, n):
                    for l in range(1, n - s + 1):
                        occupied = False
                        for m, dp in _blind_hypothesis_region(g, n, d, s, l):
                            occupied = True
                            lhs = lhs_d_at(g, n, d, s, l, Fraction(m), dp)
                            assert lhs > 0, (g, n, d, s, l, m, dp)
                        if occupied:
                            assert (n - d) * s >= n * (n - d - l * g), (g, n, d, s, l)
