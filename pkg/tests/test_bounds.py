import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from johnson_hoffman.bose_mesner import ProfileMatrixSpec
from johnson_hoffman.bounds import (
    DegenerateGraphError,
    HoffmanError,
    hoffman_bound,
    transitivity_bound,
    verify_theorem,
)
from johnson_hoffman.combinatorics import JohnsonParams, binomial
from johnson_hoffman.extremal import max_independent_set


def delta(n, k, s):
    return ProfileMatrixSpec.delta(n, k, s)


@pytest.mark.parametrize("n,k,N,d,lam,bound", [
    (7, 3, 35, 18, -3, 5),
    (13, 4, 715, 336, -28, 55),
    (3, 2, 3, 2, -1, 1),
])
def test_hoffman_examples(n, k, N, d, lam, bound):
    rep = hoffman_bound(delta(n, k, 1))
    assert (rep.N, rep.d, rep.lambda_min, rep.bound, rep.bound_floor) == (N, d, lam, bound, bound)
    assert rep.bound == F(N * -lam, d - lam)


def test_hoffman_closed_form_matches_dense_7_3():
    closed = hoffman_bound(delta(7, 3, 1))
    dense = hoffman_bound(delta(7, 3, 1), method="dense")
    assert (closed.N, closed.d, closed.lambda_min, closed.bound, closed.bound_floor) == \
        (dense.N, dense.d, dense.lambda_min, dense.bound, dense.bound_floor)


def test_hoffman_preconditions():
    with pytest.raises(HoffmanError):
        hoffman_bound(ProfileMatrixSpec(7, 3, (0, 1, 0, 1)))  # diagonal
    with pytest.raises(HoffmanError):
        hoffman_bound(ProfileMatrixSpec(7, 3, (0, 1, -1, 0)))  # negative entry
    with pytest.raises(DegenerateGraphError):
        hoffman_bound(ProfileMatrixSpec(7, 3, (0, 0, 0, 0)))
    with pytest.raises(DegenerateGraphError):
        hoffman_bound(delta(3, 2, 0))  # two 2-subsets of [3] are never disjoint
    with pytest.raises(ValueError):
        hoffman_bound(delta(7, 3, 1), method="sdp")


@settings(max_examples=50, deadline=None)
@given(st.fractions(min_value=F(1, 50), max_value=100, max_denominator=50))
def test_hoffman_scale_invariant(c):
    base = hoffman_bound(ProfileMatrixSpec(9, 3, (1, F(1, 2), 0, 0)))
    scaled = hoffman_bound(ProfileMatrixSpec(9, 3, (c, c / 2, 0, 0)))
    assert scaled.bound == base.bound


@pytest.mark.parametrize("n,k,t", [(3, 2, 1), (7, 3, 1), (7, 3, 0), (7, 3, 2), (6, 3, 1), (8, 3, 1), (9, 3, 0), (6, 2, 0)])
def test_hoffman_sound_against_exact_alpha(n, k, t):
    res = max_independent_set(JohnsonParams(n, k, t))
    assert res.optimal
    assert res.size <= hoffman_bound(delta(n, k, t)).bound_floor


def test_report_json_shape():
    data = json.loads(json.dumps(hoffman_bound(delta(7, 3, 1)).to_json()))
    assert data == {"N": 35, "d": "18/1", "lambda_min": "-3/1", "bound": "5/1",
                    "bound_floor": 5, "method": "closed-form"}


def test_verify_theorem_k3():
    rep = verify_theorem(3)
    assert (rep.lambda0, rep.lambda1, rep.lambda2, rep.lambda3) == (18, -3, -3, 3)
    assert rep.hoffman_value == 5 == binomial(5, 1)
    assert rep.verdict


def test_verify_theorem_k4():
    rep = verify_theorem(4)
    assert (rep.lambda0, rep.lambda1, rep.lambda2) == (336, -28, -28)
    # (2k^2-3k-3)/(k^2-3k+2) * C(6,1) = 17/6 * 6
    assert rep.lambda3 == F(32 - 12 - 3, 16 - 12 + 2) * 6 == 17
    assert rep.hoffman_value == 55 and rep.verdict


def test_verify_theorem_k2_dense():
    rep = verify_theorem(2)
    assert rep.method == "dense"
    assert rep.lambda2 is None and rep.lambda3 is None
    assert rep.hoffman_value == 1 == binomial(1, 0)
    assert rep.verdict


def test_verify_theorem_range():
    for k in range(3, 51):
        rep = verify_theorem(k)
        assert rep.verdict, (k, rep.failures)
        assert rep.tail_inequality_ok
        n = k * k - k + 1
        assert rep.hoffman_value / binomial(n, k) == F(1, n)
        assert rep.lambda1 == rep.lambda2 == F(-binomial(n - k, k - 1), k - 1)


def test_verify_theorem_rejects_k1():
    with pytest.raises(ValueError):
        verify_theorem(1)


def test_transitivity_bound():
    assert transitivity_bound(7, 35) == 5
    assert transitivity_bound(13, 715) == 55
    assert transitivity_bound(1, 99) == 99
    with pytest.raises(ValueError):
        transitivity_bound(0, 10)
    with pytest.raises(ValueError):
        transitivity_bound(11, 10)


def test_transitivity_equals_hoffman_identity():
    for k in range(2, 30):
        n = k * k - k + 1
        assert transitivity_bound(n, binomial(n, k)) == binomial(n - 2, k - 2)
