"""Independent families in J(n, k, t): constructions, exact search, enumeration."""

from __future__ import annotations

import itertools as it
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import (
    GRAPH_CAP,
    JohnsonGraph,
    JohnsonParams,
    KSubset,
    binomial,
    build_johnson_graph,
    rank,
)

PROVENANCES = ("canonical-pair", "sporadic-k3", "solver", "user")
ENUMERATION_CAP = 100


@dataclass(frozen=True)
class Family:
    members: frozenset[KSubset]
    n: int
    k: int
    provenance: str = "user"

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        for s in self.members:
            if (s.n, s.k) != (self.n, self.k):
                raise ValueError(f"member {s.elements} is not a {self.k}-subset of [{self.n}]")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: int, k: int, provenance: str = "user",
                  one_indexed: bool = False) -> "Family":
        shift = 1 if one_indexed else 0
        return cls(frozenset(KSubset.of((e - shift for e in s), n) for s in sets), n, k, provenance)

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[KSubset]:
        return sorted(self.members, key=rank)

    def ranks(self) -> list[int]:
        return sorted(rank(s) for s in self.members)

    def as_lists(self, one_indexed: bool = False) -> list[list[int]]:
        shift = 1 if one_indexed else 0
        return [[e + shift for e in s.elements] for s in self.sorted_members()]

    def to_json(self, one_indexed: bool = False) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "provenance": self.provenance,
            "one_indexed": one_indexed,
            "members": self.as_lists(one_indexed),
        }


def canonical_family_size(n: int, k: int) -> int:
    return binomial(n - 2, k - 2)


def canonical_family(n: int, k: int, a: int = 0, b: int = 1) -> Family:
    """All k-subsets of [n] containing both a and b."""
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"need distinct a, b in [0, {n}), got {a}, {b}")
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    rest = [e for e in range(n) if e not in (a, b)]
    members = frozenset(KSubset.of((a, b) + c, n) for c in it.combinations(rest, k - 2))
    return Family(members, n, k, "canonical-pair")


def sporadic_family_k3() -> Family:
    """Four triples inside a 4-set plus the complementary triple, over [7]."""
    sets = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (5, 6, 7)]
    return Family.from_sets(sets, 7, 3, "sporadic-k3", one_indexed=True)


def is_independent(fam: Family, t: int) -> tuple[bool, tuple[KSubset, KSubset] | None]:
    """True iff no two distinct members meet in exactly t elements; else the first such pair."""
    members = fam.sorted_members()
    masks = [s.mask for s in members]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if (masks[i] & masks[j]).bit_count() == t:
                return False, (members[i], members[j])
    return True, None


@dataclass
class MisResult:
    size: int
    witness: Family
    optimal: bool
    nodes_explored: int
    budget_exhausted: bool

    def to_json(self, one_indexed: bool = False) -> dict:
        return {
            "size": self.size,
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
            "budget_exhausted": self.budget_exhausted,
            "witness": self.witness.to_json(one_indexed),
        }


class _BudgetExhausted(Exception):
    pass


def _clique_cover(P: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy partition of P into cliques of G, lowest rank first.

    Returns vertices and their cumulative class numbers; any independent set
    inside the first i vertices has size at most colors[i].
    """
    order, colors = [], []
    U, color = P, 0
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            U &= ~low
            Q &= adj[v]
            Q &= ~low
    return order, colors


class _Search:
    def __init__(self, graph: JohnsonGraph, budget: int | None):
        self.adj = graph.adj
        self.budget = budget
        self.nodes = 0
        self.best: list[int] = []

    def expand(self, R: list[int], P: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        order, colors = _clique_cover(P, self.adj)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colors[i] <= len(self.best):
                return
            v = order[i]
            bit = 1 << v
            R.append(v)
            newP = P & ~self.adj[v] & ~bit
            if newP:
                self.expand(R, newP)
            elif len(R) > len(self.best):
                self.best = list(R)
            R.pop()
            P &= ~bit


def max_independent_set(p: JohnsonParams, budget: int | None = None, cap: int = GRAPH_CAP) -> MisResult:
    """Exact alpha(J(n,k,t)) by branch-and-bound with clique-cover bounds.

    The incumbent is seeded with the pair family when it is independent.
    With a node budget the best set found so far is returned, flagged non-optimal.
    """
    graph = build_johnson_graph(p, cap=cap)
    search = _Search(graph, budget)
    if p.k >= 2 and p.n >= 2:
        seed = canonical_family(p.n, p.k, 0, 1)
        if is_independent(seed, p.t)[0]:
            search.best = seed.ranks()
    exhausted = False
    try:
        search.expand([], (1 << graph.order) - 1)
    except _BudgetExhausted:
        exhausted = True
    witness = Family(frozenset(graph.vertices[v] for v in search.best), p.n, p.k, "solver")
    return MisResult(len(witness), witness, not exhausted, search.nodes, exhausted)


def classify(fam: Family) -> str:
    """'pair-junta', 'sporadic', or 'other'."""
    members = fam.sorted_members()
    if not members:
        return "other"
    common = members[0].mask
    for s in members[1:]:
        common &= s.mask
    if common.bit_count() >= 2:
        return "pair-junta"
    k = fam.k
    union = 0
    for s in members:
        union |= s.mask
    # all k-subsets of some (k+1)-set S, every other member disjoint from S
    for S in it.combinations(range(fam.n), k + 1):
        smask = sum(1 << e for e in S)
        inside = [s for s in members if s.mask & smask == s.mask]
        if len(inside) != k + 1:
            continue
        if all(s.mask & smask == 0 for s in members if s.mask & smask != s.mask):
            return "sporadic"
    return "other"


@dataclass
class Census:
    params: JohnsonParams
    target_size: int
    families: list[Family]
    counts: dict[str, int] = field(default_factory=dict)

    def to_json(self, one_indexed: bool = False) -> dict:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "t": self.params.t,
            "target_size": self.target_size,
            "total": len(self.families),
            "counts": dict(sorted(self.counts.items())),
            "families": [
                {"type": classify(f), "members": f.as_lists(one_indexed)} for f in self.families
            ],
        }


def enumerate_maximum_independent_sets(p: JohnsonParams, target_size: int,
                                       cap: int = ENUMERATION_CAP) -> Census:
    """Every independent set of exactly target_size, in lexicographic rank order."""
    graph = build_johnson_graph(p, cap=cap)
    adj = graph.adj
    found: list[list[int]] = []

    def extend(R: list[int], P: int) -> None:
        if len(R) == target_size:
            found.append(list(R))
            return
        if P.bit_count() < target_size - len(R):
            return
        _, colors = _clique_cover(P, adj)
        if len(R) + (colors[-1] if colors else 0) < target_size:
            return
        Q = P
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q ^= low
            # candidates above v only, so each set is produced once
            higher = P & ~((low << 1) - 1)
            R.append(v)
            extend(R, higher & ~adj[v])
            R.pop()

    if target_size >= 0:
        extend([], (1 << graph.order) - 1)
    families = [
        Family(frozenset(graph.vertices[v] for v in R), p.n, p.k, "solver") for R in found
    ]
    counts = Counter(classify(f) for f in families)
    return Census(p, target_size, families, dict(counts))
