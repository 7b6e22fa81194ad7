"""Verification campaigns: zero-counterexample runs, the reporter path,
determinism under parallelism, and a blind brute-force cross-check of the
sweep's enumeration."""

import json

import pytest

from bnloci.verify import (
    SweepBounds,
    sweep_identities,
    sweep_inequality_implication,
    sweep_threshold_consistency,
)


def test_small_bounds_all_verified():
    bounds = SweepBounds(g_min=2, g_max=3, n_max=8)
    for sweep in (
        sweep_inequality_implication,
        sweep_identities,
        sweep_threshold_consistency,
    ):
        report = sweep(bounds)
        assert report.verified
        assert report.counterexamples == []
        assert report.tuples_checked > 0


def test_midsize_integer_grid():
    report = sweep_inequality_implication(SweepBounds(g_min=2, g_max=4, n_max=12))
    assert report.verified


def test_negated_predicate_exercises_reporter():
    # flipping the pass predicate on a correct implementation turns every
    # hypothesis-satisfying tuple into a counterexample
    bounds = SweepBounds(g_min=2, g_max=2, n_max=5)
    report = sweep_inequality_implication(bounds, _negate_d=True)
    assert not report.verified
    assert len(report.counterexamples) == report.tuples_checked > 0
    rec = report.counterexamples[0]
    assert list(rec) == ["g", "n", "d", "s", "l", "m", "d_prime", "lhs_d"]
    keys = [
        (r["g"], r["n"], r["d"], r["s"], r["l"]) for r in report.counterexamples
    ]
    assert keys == sorted(keys)


def test_near_empty_hypothesis_set_at_rank_two():
    # n = 2 leaves only (s, l) = (1, 1), and (a) caps d' at sd/n = 1/2:
    # no integer grid point at all, one half-integer point per genus
    report = sweep_inequality_implication(SweepBounds(g_min=2, g_max=2, n_max=2))
    assert report.tuples_checked == 0
    assert report.verified
    report = sweep_inequality_implication(
        SweepBounds(g_min=2, g_max=2, n_max=2, rational_denominator=2)
    )
    assert report.tuples_checked == 1
    assert report.verified


def test_monotone_coverage():
    small = sweep_inequality_implication(SweepBounds(2, 3, 8))
    wider = sweep_inequality_implication(SweepBounds(2, 4, 10))
    denser = sweep_inequality_implication(SweepBounds(2, 3, 8, rational_denominator=2))
    assert small.tuples_checked <= wider.tuples_checked
    assert small.tuples_checked <= denser.tuples_checked

    small_i = sweep_identities(SweepBounds(2, 3, 8))
    wider_i = sweep_identities(SweepBounds(2, 4, 10))
    assert small_i.tuples_checked <= wider_i.tuples_checked


def test_determinism_across_jobs():
    seq = sweep_inequality_implication(SweepBounds(2, 3, 10, rational_denominator=2, jobs=1))
    par = sweep_inequality_implication(SweepBounds(2, 3, 10, rational_denominator=2, jobs=2))
    d1, d2 = seq.to_dict(), par.to_dict()
    d1.pop("meta")
    d2.pop("meta")
    assert json.dumps(d1) == json.dumps(d2)


def test_report_json_shape_and_roundtrip():
    report = sweep_threshold_consistency(SweepBounds(2, 2, 6, jobs=3))
    doc = json.loads(report.to_json())
    assert list(doc) == [
        "campaign", "bounds", "tuples_checked", "counterexamples", "verified", "meta",
    ]
    assert doc["campaign"] == "thmb"
    assert list(doc["bounds"]) == ["g_min", "g_max", "n_max", "denominator", "m_cap_factor"]
    assert set(doc["meta"]) == {"elapsed_ms", "jobs"}
    assert doc["meta"]["jobs"] == 3
    assert json.dumps(doc, separators=(",", ":")) == report.to_json()


def test_bounds_validation():
    with pytest.raises(ValueError):
        SweepBounds(g_min=1)
    with pytest.raises(ValueError):
        SweepBounds(g_min=3, g_max=2)
    with pytest.raises(ValueError):
        SweepBounds(rational_denominator=0)
    with pytest.raises(ValueError):
        SweepBounds(jobs=0)


def _brute_force_count(g_min, g_max, n_max, D, cap_factor=4):
    """Blind box scan of the hypothesis region, ignoring every analytic
    range reduction the sweep uses.  m = a/D runs to the configured cap,
    d' = b/D to d; inequalities are checked from their raw definitions
    with denominators cleared."""
    count = 0
    for g in range(g_min, g_max + 1):
        for n in range(2, n_max + 1):
            for d in range(1, n):
                for s in range(1, n):
                    for l in range(1, n - s + 1):
                        for a in range(1, D * cap_factor * n + 1):
                            for b in range(0, D * d + 1):
                                if s * d * D - n * b < 0:
                                    continue
                                if (l * D + a) * b <= a * d * D:
                                    continue
                                if b - s * D + a * g < 0:
                                    continue
                                count += 1
    return count


@pytest.mark.parametrize("denominator", [1, 2])
def test_brute_force_cross_check(denominator):
    bounds = SweepBounds(2, 3, 7, rational_denominator=denominator)
    report = sweep_inequality_implication(bounds)
    assert report.tuples_checked == _brute_force_count(2, 3, 7, denominator)
    assert report.verified
