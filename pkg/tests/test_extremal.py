import itertools as it
import json

import pytest

from johnson_hoffman.combinatorics import JohnsonParams, KSubset, all_subsets, binomial
from johnson_hoffman.extremal import (
    Family,
    canonical_family,
    classify,
    enumerate_maximum_independent_sets,
    is_independent,
    max_independent_set,
    sporadic_family_k3,
)


def test_canonical_family_examples():
    fam = canonical_family(7, 3, 0, 1)
    assert fam.as_lists() == [[0, 1, x] for x in range(2, 7)]
    assert len(canonical_family(13, 4, 0, 1)) == 55
    assert canonical_family(3, 2, 2, 0).as_lists() == [[0, 2]]


@pytest.mark.parametrize("n,k", [(7, 3), (13, 4), (10, 3), (9, 5), (21, 5)])
def test_canonical_family_size_and_independence(n, k):
    fam = canonical_family(n, k, 3, 1)
    assert len(fam) == binomial(n - 2, k - 2)
    assert is_independent(fam, 1) == (True, None)
    assert all({1, 3} <= set(s) for s in fam.members)


def test_canonical_family_domain():
    with pytest.raises(ValueError):
        canonical_family(7, 3, 2, 2)
    with pytest.raises(ValueError):
        canonical_family(7, 3, 0, 7)


def test_sporadic_family():
    fam = sporadic_family_k3()
    assert len(fam) == 5
    assert fam.as_lists(one_indexed=True) == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [5, 6, 7]]
    assert is_independent(fam, 1) == (True, None)
    assert classify(fam) == "sporadic"


def test_is_independent_reports_pair():
    fam = Family.from_sets([(0, 1, 2), (2, 3, 4)], 7, 3)
    ok, pair = is_independent(fam, 1)
    assert not ok
    assert {p.elements for p in pair} == {(0, 1, 2), (2, 3, 4)}


def test_family_validation_and_json():
    with pytest.raises(ValueError):
        Family(frozenset([KSubset((0, 1), 7)]), 7, 3)
    with pytest.raises(ValueError):
        Family(frozenset(), 7, 3, "mystery")
    data = json.loads(json.dumps(sporadic_family_k3().to_json(one_indexed=True)))
    assert data["one_indexed"] and data["members"][-1] == [5, 6, 7]


def _brute_alpha(n, k, t):
    subs = [set(s) for s in all_subsets(n, k)]
    best = 0
    for size in range(1, len(subs) + 1):
        if not any(all(len(a & b) != t for a, b in it.combinations(c, 2))
                   for c in it.combinations(subs, size)):
            break
        best = size
    return best


@pytest.mark.parametrize("n,k,t", [(3, 2, 1), (4, 2, 1), (5, 2, 0), (5, 2, 1), (6, 3, 1), (6, 2, 0)])
def test_mis_against_brute_force(n, k, t):
    res = max_independent_set(JohnsonParams(n, k, t))
    assert res.optimal and not res.budget_exhausted
    assert res.size == _brute_alpha(n, k, t)
    assert is_independent(res.witness, t)[0]


@pytest.mark.parametrize("n,k,t,alpha", [(3, 2, 1, 1), (7, 3, 1, 5), (7, 3, 0, 15)])
def test_mis_examples(n, k, t, alpha):
    res = max_independent_set(JohnsonParams(n, k, t))
    assert res.optimal and res.size == alpha
    assert is_independent(res.witness, t)[0]


def test_mis_budget_exhaustion():
    res = max_independent_set(JohnsonParams(13, 4, 1), budget=5)
    assert res.budget_exhausted and not res.optimal
    assert res.size == 55  # seeded incumbent
    assert is_independent(res.witness, 1)[0]


def test_mis_deterministic():
    a = max_independent_set(JohnsonParams(7, 3, 0))
    b = max_independent_set(JohnsonParams(7, 3, 0))
    assert a.witness.ranks() == b.witness.ranks()
    assert a.nodes_explored == b.nodes_explored


def test_mis_k4_best_effort():
    res = max_independent_set(JohnsonParams(13, 4, 1), budget=200_000)
    assert res.size == 55
    assert is_independent(res.witness, 1)[0]


def _brute_count_independent(n, k, t, size):
    masks = [sum(1 << e for e in s) for s in all_subsets(n, k)]
    bad = {(a, b) for a, b in it.combinations(range(len(masks)), 2) if (masks[a] & masks[b]).bit_count() == t}
    return sum(1 for c in it.combinations(range(len(masks)), size)
               if not any(p in bad for p in it.combinations(c, 2)))


def test_enumeration_7_3_1_size_5():
    census = enumerate_maximum_independent_sets(JohnsonParams(7, 3, 1), 5)
    # frozen from the brute-force count over all C(35,5) quintuples
    assert len(census.families) == 56
    assert census.counts == {"pair-junta": 21, "sporadic": 35}
    found = {frozenset(f.members) for f in census.families}
    for a, b in it.combinations(range(7), 2):
        assert frozenset(canonical_family(7, 3, a, b).members) in found
    assert frozenset(sporadic_family_k3().members) in found


def test_enumeration_count_brute_force():
    assert _brute_count_independent(7, 3, 1, 5) == 56


def test_enumeration_small_cases():
    assert enumerate_maximum_independent_sets(JohnsonParams(7, 3, 1), 6).families == []
    census = enumerate_maximum_independent_sets(JohnsonParams(3, 2, 1), 1)
    assert len(census.families) == 3 and census.counts == {"pair-junta": 3}
    census = enumerate_maximum_independent_sets(JohnsonParams(6, 3, 1), 4)
    assert len(census.families) == _brute_count_independent(6, 3, 1, 4)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_maximum_independent_sets(JohnsonParams(9, 4, 1), 3)


def test_classify_other():
    fam = Family.from_sets([(0, 1, 2), (3, 4, 5)], 7, 3)
    assert classify(fam) == "other"
