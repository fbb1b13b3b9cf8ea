"""Exact combinatorial primitives for the Johnson scheme.

Vertices of J(n, k, t) are k-subsets of {0, ..., n-1}, indexed by their
colexicographic combinadic rank.  Adjacency rows are stored as Python
integers used as bitsets.
"""

from __future__ import annotations

import itertools as it
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

GRAPH_CAP = 5000
AXIOM_CAP = 300


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n.  Negative n is an error."""
    if n < 0:
        raise ValueError(f"binomial: negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, order=True)
class KSubset:
    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.n <= 0:
            raise ValueError(f"ambient size must be positive, got {self.n}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els and (els[0] < 0 or els[-1] >= self.n):
            raise ValueError(f"elements out of range [0, {self.n}): {els}")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "KSubset":
        return cls(tuple(sorted(elements)), n)

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class JohnsonParams:
    n: int
    k: int
    t: int

    def __post_init__(self):
        if self.n <= 0 or self.k <= 0:
            raise ValueError(f"n and k must be positive: n={self.n}, k={self.k}")
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        if not 0 <= self.t <= self.k - 1:
            raise ValueError(f"t={self.t} outside [0, {self.k - 1}]")

    @property
    def order(self) -> int:
        return binomial(self.n, self.k)

    @property
    def degree(self) -> int:
        return binomial(self.k, self.t) * binomial(self.n - self.k, self.k - self.t)


def rank(s: KSubset) -> int:
    """Colex rank: sum of C(c_j, j+1) over the sorted elements c_j."""
    return sum(math.comb(c, j + 1) for j, c in enumerate(s.elements))


def unrank(r: int, n: int, k: int) -> KSubset:
    total = binomial(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total})")
    out = [0] * k
    m = n
    while k > 0:
        m -= 1
        c = math.comb(m, k)
        if r >= c:
            r -= c
            k -= 1
            out[k] = m
    return KSubset(tuple(out), n)


def all_subsets(n: int, k: int) -> list[KSubset]:
    """Every k-subset of [n], in colex (rank) order."""
    subs = [KSubset.of(c, n) for c in it.combinations(range(n), k)]
    subs.sort(key=lambda s: tuple(reversed(s.elements)))
    return subs


def intersection_size(x: KSubset, y: KSubset) -> int:
    if x.n != y.n or x.k != y.k:
        raise ValueError(f"mismatched subsets: (n={x.n}, k={x.k}) vs (n={y.n}, k={y.k})")
    return (x.mask & y.mask).bit_count()


@dataclass
class JohnsonGraph:
    params: JohnsonParams
    vertices: list[KSubset]
    adj: list[int]  # bitset rows indexed by rank

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        row, out = self.adj[v], []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def _neighbor_sets(x: Sequence[int], n: int, t: int) -> Iterator[tuple[int, ...]]:
    inside = set(x)
    outside = [e for e in range(n) if e not in inside]
    for keep in it.combinations(x, t):
        for add in it.combinations(outside, len(x) - t):
            yield tuple(sorted(keep + add))


def build_johnson_graph(p: JohnsonParams, cap: int = GRAPH_CAP) -> JohnsonGraph:
    N = p.order
    if N > cap:
        raise ValueError(f"J({p.n},{p.k},{p.t}) has {N} vertices, cap is {cap}")
    vertices = all_subsets(p.n, p.k)
    adj = []
    for x in vertices:
        row = 0
        for y in _neighbor_sets(x.elements, p.n, p.t):
            row |= 1 << rank(KSubset(y, p.n))
        adj.append(row)
    return JohnsonGraph(p, vertices, adj)


@lru_cache(maxsize=8)
def intersection_matrix(n: int, k: int) -> np.ndarray:
    """N x N integer array of |x & y| over rank-ordered vertices (read-only)."""
    subs = all_subsets(n, k)
    incidence = np.zeros((len(subs), n))
    for r, s in enumerate(subs):
        incidence[r, list(s.elements)] = 1.0
    # float64 BLAS is exact here: entries are at most k
    out = (incidence @ incidence.T).round().astype(np.int64)
    out.flags.writeable = False
    return out


@dataclass
class AxiomReport:
    n: int
    k: int
    relations: list[int]  # relation indices i with R_i non-empty
    valencies: dict[int, int]
    partition: bool
    diagonal: bool
    symmetric: bool
    constant_intersection_numbers: bool
    # intersection_numbers[(i, j, l)] = #{v : (u,v) in R_i, (v,w) in R_j} for (u,w) in R_l
    intersection_numbers: dict[tuple[int, int, int], int]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return self.partition and self.diagonal and self.symmetric and self.constant_intersection_numbers


def verify_scheme_axioms(n: int, k: int, cap: int = AXIOM_CAP) -> AxiomReport:
    """Check the four association-scheme axioms for the Johnson scheme by enumeration.

    Relation R_i holds the pairs (x, y) with |x & y| = k - i.
    """
    N = binomial(n, k)
    if N > cap:
        raise ValueError(f"C({n},{k}) = {N} exceeds axiom-check cap {cap}")
    inter = intersection_matrix(n, k)
    rel = k - inter
    mats = {i: (rel == i).astype(np.int64) for i in range(k + 1)}
    mats = {i: m for i, m in mats.items() if m.any()}
    violations = []

    cover = sum(mats.values())
    partition = bool((cover == 1).all())
    if not partition:
        violations.append("relations do not partition V x V")

    diagonal = 0 in mats and bool((mats[0] == np.eye(N, dtype=np.int64)).all())
    if not diagonal:
        violations.append("R_0 is not the diagonal")

    symmetric = True
    for i, m in mats.items():
        if not (m == m.T).all():
            symmetric = False
            violations.append(f"R_{i} not closed under transposition")

    constant = True
    table = {}
    for i, mi in mats.items():
        for j, mj in mats.items():
            counts = mi @ mj
            for l, ml in mats.items():
                vals = np.unique(counts[ml.astype(bool)])
                if len(vals) != 1:
                    constant = False
                    violations.append(f"p^{l}_{{{i},{j}}} takes values {vals.tolist()}")
                    continue
                table[(i, j, l)] = int(vals[0])

    return AxiomReport(
        n=n,
        k=k,
        relations=sorted(mats),
        valencies={i: int(m[0].sum()) for i, m in mats.items()},
        partition=partition,
        diagonal=diagonal,
        symmetric=symmetric,
        constant_intersection_numbers=constant,
        intersection_numbers=table,
        violations=violations,
    )
