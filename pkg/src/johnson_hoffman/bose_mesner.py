"""Bose-Mesner algebra of the Johnson scheme J(n, k).

A profile f : {0..k} -> Q defines the matrix A(x, y) = f(|x & y|).  Every
such matrix is a combination sum_i b_i B_i of the standard basis
B_i(x, y) = C(|x \\ y|, i), whose eigenvalue on the j-th common eigenspace is

    mu_j^(i) = (-1)^j C(k-j, i-j) C(n-i-j, k-j).

Everything here is exact (Fraction / int).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import (
    JohnsonParams,
    KSubset,
    all_subsets,
    binomial,
    build_johnson_graph,
    intersection_matrix,
    rank,
)
from . import exactmat

DENSE_CAP = 500


@dataclass(frozen=True)
class ProfileMatrixSpec:
    n: int
    k: int
    f: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n <= 0 or self.k <= 0 or self.k > self.n:
            raise ValueError(f"need 0 < k <= n, got n={self.n}, k={self.k}")
        f = tuple(Fraction(x) for x in self.f)
        if len(f) != self.k + 1:
            raise ValueError(f"profile needs {self.k + 1} values, got {len(f)}")
        object.__setattr__(self, "f", f)

    @classmethod
    def delta(cls, n: int, k: int, s: int) -> "ProfileMatrixSpec":
        """Indicator profile of intersection size s (adjacency of J(n,k,s))."""
        if not 0 <= s <= k:
            raise ValueError(f"intersection size {s} outside [0, {k}]")
        return cls(n, k, tuple(int(i == s) for i in range(k + 1)))

    @classmethod
    def ones(cls, n: int, k: int) -> "ProfileMatrixSpec":
        return cls(n, k, (1,) * (k + 1))

    @property
    def order(self) -> int:
        return binomial(self.n, self.k)

    @property
    def classes(self) -> int:
        """Number of non-trivial classes m = min(k, n-k)."""
        return min(self.k, self.n - self.k)

    def __call__(self, s: int) -> Fraction:
        return self.f[s]

    def scaled(self, c) -> "ProfileMatrixSpec":
        return ProfileMatrixSpec(self.n, self.k, tuple(c * x for x in self.f))

    def __add__(self, other: "ProfileMatrixSpec") -> "ProfileMatrixSpec":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("profiles over different schemes")
        return ProfileMatrixSpec(self.n, self.k, tuple(a + b for a, b in zip(self.f, other.f)))

    def complement(self) -> "ProfileMatrixSpec":
        """The same matrix seen on complements: a profile over J(n, n-k)."""
        shift = 2 * self.k - self.n
        return ProfileMatrixSpec(
            self.n, self.n - self.k, tuple(self.f[s + shift] for s in range(self.n - self.k + 1))
        )


@dataclass(frozen=True)
class BasisCoefficients:
    b: tuple[Fraction, ...]

    def reconstruct(self) -> tuple[Fraction, ...]:
        """Recover f from b: f(k - d) = sum_i b_i C(d, i)."""
        k = len(self.b) - 1
        f = [Fraction(0)] * (k + 1)
        for d in range(k + 1):
            f[k - d] = sum((bi * binomial(d, i) for i, bi in enumerate(self.b)), Fraction(0))
        return tuple(f)


@dataclass(frozen=True)
class Spectrum:
    n: int
    k: int
    profile: tuple[Fraction, ...]
    lambdas: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]
    method: str = "closed-form"

    @property
    def lambda_min(self) -> Fraction:
        return min(self.lambdas)

    def distinct(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for lam, m in zip(self.lambdas, self.multiplicities):
            out[lam] = out.get(lam, 0) + m
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "profile": [fraction_str(x) for x in self.profile],
            "lambdas": [fraction_str(x) for x in self.lambdas],
            "multiplicities": list(self.multiplicities),
        }


def fraction_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s.strip())


def decompose(spec: ProfileMatrixSpec) -> BasisCoefficients:
    """Coefficients b with A = sum_i b_i B_i, by binomial inversion."""
    k = spec.k
    b = []
    for i in range(k + 1):
        b.append(sum(
            ((-1) ** (i - d) * binomial(i, d) * spec.f[k - d] for d in range(i + 1)),
            Fraction(0),
        ))
    return BasisCoefficients(tuple(b))


def basis_eigenvalue(i: int, j: int, n: int, k: int) -> int:
    """Eigenvalue of B_i on the j-th eigenspace of J(n, k); requires n >= 2k."""
    if n < 2 * k:
        raise ValueError(f"closed form needs n >= 2k, got n={n}, k={k}")
    if not 0 <= i <= k:
        raise ValueError(f"basis index i={i} outside [0, {k}]")
    if not 0 <= j <= k:
        raise ValueError(f"eigenspace index j={j} outside [0, {k}]")
    return (-1) ** j * binomial(k - j, i - j) * binomial(n - i - j, k - j)


def multiplicity(n: int, j: int) -> int:
    return binomial(n, j) - (binomial(n, j - 1) if j >= 1 else 0)


def spectrum(spec: ProfileMatrixSpec) -> Spectrum:
    if spec.n == spec.k:
        return Spectrum(spec.n, spec.k, spec.f, (spec.f[spec.k],), (1,), "single-vertex")
    if spec.n < 2 * spec.k:
        inner = spectrum(spec.complement())
        return Spectrum(spec.n, spec.k, spec.f, inner.lambdas, inner.multiplicities, "complement")
    n, k = spec.n, spec.k
    b = decompose(spec).b
    lambdas = tuple(
        sum((bi * basis_eigenvalue(i, j, n, k) for i, bi in enumerate(b) if bi), Fraction(0))
        for j in range(k + 1)
    )
    mults = tuple(multiplicity(n, j) for j in range(k + 1))
    return Spectrum(n, k, spec.f, lambdas, mults)


def row_sum(spec: ProfileMatrixSpec) -> Fraction:
    """Constant row sum of A, counted directly from the intersection sizes."""
    n, k = spec.n, spec.k
    return sum(
        (spec.f[s] * binomial(k, s) * binomial(n - k, k - s) for s in range(k + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class DenseSymmetricMatrix:
    order: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.order or any(len(r) != self.order for r in self.entries):
            raise ValueError("entries must be order x order")
        for i in range(self.order):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"not symmetric at ({i}, {j})")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self.entries]


def integer_profile_matrix(spec: ProfileMatrixSpec, cap: int = DENSE_CAP):
    """(M, L) with the literal matrix A = M / L; M an int64 array in rank order."""
    N = spec.order
    if N > cap:
        raise ValueError(f"C({spec.n},{spec.k}) = {N} exceeds dense cap {cap}")
    L = math.lcm(*(x.denominator for x in spec.f))
    scaled = exactmat.as_int_array([[int(x * L) for x in spec.f]])[0]
    return scaled[intersection_matrix(spec.n, spec.k)], L


def dense_profile_matrix(spec: ProfileMatrixSpec, cap: int = DENSE_CAP) -> DenseSymmetricMatrix:
    N = spec.order
    if N > cap:
        raise ValueError(f"C({spec.n},{spec.k}) = {N} exceeds dense cap {cap}")
    masks = [s.mask for s in all_subsets(spec.n, spec.k)]
    f = spec.f
    entries = tuple(tuple(f[(a & b).bit_count()] for b in masks) for a in masks)
    return DenseSymmetricMatrix(N, entries)


@dataclass
class DenseCheckReport:
    n: int
    k: int
    order: int
    annihilation: bool
    traces: dict[int, bool]
    multiplicities_solve: bool
    row_sum: bool
    notes: list[str]

    @property
    def ok(self) -> bool:
        return self.annihilation and all(self.traces.values()) and self.multiplicities_solve and self.row_sum


def _solve_exact(A: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Q; None if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(A, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                a = M[i][c]
                M[i] = [x - a * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def verify_spectrum_dense(spec: ProfileMatrixSpec, cap: int = DENSE_CAP) -> DenseCheckReport:
    """Check the closed-form spectrum against the literal matrix, exactly.

    (a) prod over distinct lambda of (A - lambda I) == 0;
    (b) sum_j m_j lambda_j^p == trace(A^p) for p = 0, 1, 2;
    (c) the multiplicities are the unique solution of the Vandermonde system
        built from trace(A^p), p = 0..m.
    """
    spec_result = spectrum(spec)
    M, L = integer_profile_matrix(spec, cap)
    distinct = spec_result.distinct()
    scaled = {lam * L: mult for lam, mult in distinct.items()}
    notes = []
    if any(v.denominator != 1 for v in scaled):
        notes.append("scaled eigenvalue not integral")
        return DenseCheckReport(spec.n, spec.k, len(M), False, {}, False, False, notes)
    scaled = {int(v): m for v, m in scaled.items()}

    annihilation = exactmat.product_is_zero([exactmat.shifted(M, lam) for lam in scaled])

    pmax = max(2, len(spec_result.lambdas) - 1)
    traces = exactmat.power_traces(M, pmax)
    predicted = [sum(m * lam ** p for lam, m in scaled.items()) for p in range(pmax + 1)]
    trace_ok = {p: predicted[p] == traces[p] for p in range(3)}

    values = sorted(scaled)
    r = len(values)
    vander = [[Fraction(v) ** p for v in values] for p in range(r)]
    sol = _solve_exact(vander, [Fraction(t) for t in traces[:r]])
    solve_ok = sol is not None and sol == [scaled[v] for v in values]
    if solve_ok:
        # remaining power sums must agree with the unique solution
        solve_ok = all(
            sum(m * Fraction(v) ** p for v, m in zip(values, sol)) == traces[p]
            for p in range(r, pmax + 1)
        )
    if not solve_ok:
        notes.append(f"Vandermonde solution {sol} != multiplicities {[scaled[v] for v in values]}")

    rows_ok = all(Fraction(int(rs), L) == spec_result.lambdas[0] for rs in M.sum(axis=1))
    if not rows_ok:
        notes.append("row sums differ from lambda_0")
    if not annihilation:
        notes.append("product of (A - lambda I) is nonzero")
    return DenseCheckReport(spec.n, spec.k, len(M), annihilation, trace_ok, solve_ok, rows_ok, notes)


def dense_spectrum(spec: ProfileMatrixSpec, cap: int = DENSE_CAP) -> Spectrum:
    """Spectrum from the literal matrix alone (certified exact eigenvalues).

    Eigenvalues are listed in decreasing order; no closed form is used.
    """
    M, L = integer_profile_matrix(spec, cap)
    found = exactmat.certified_eigenvalues(M)
    lams = sorted(found, reverse=True)
    return Spectrum(
        spec.n,
        spec.k,
        spec.f,
        tuple(Fraction(v, L) for v in lams),
        tuple(found[v] for v in lams),
        "dense",
    )


@dataclass(frozen=True)
class EigenspaceProfile:
    n: int
    k: int
    size: int
    norms: tuple[Fraction, ...]

    def support(self) -> list[int]:
        return [j for j, v in enumerate(self.norms) if v != 0]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "size": self.size,
            "norms": [fraction_str(v) for v in self.norms],
            "support": self.support(),
        }


def distance_one_eigenvalue(n: int, k: int, j: int) -> int:
    return (k - j) * (n - k - j) - j


def eigenspace_profile(family: Iterable[KSubset], n: int, k: int, cap: int = DENSE_CAP) -> EigenspaceProfile:
    """Squared norms of the projections of the family's indicator onto each eigenspace.

    Projectors are Lagrange interpolants in the distance-one adjacency
    matrix A1:  E_j = prod_{l != j} (A1 - theta_l I) / (theta_j - theta_l).
    """
    N = binomial(n, k)
    if N > cap:
        raise ValueError(f"C({n},{k}) = {N} exceeds cap {cap}")
    members = sorted({rank(s) for s in family})
    for s in family:
        if (s.n, s.k) != (n, k):
            raise ValueError(f"member {s.elements} is not a {k}-subset of [{n}]")
    m = min(k, n - k)
    thetas = [distance_one_eigenvalue(n, k, j) for j in range(m + 1)]
    if len(set(thetas)) != len(thetas):
        raise ValueError(f"distance-one eigenvalues coincide for J({n},{k}): {thetas}")
    if m == 0:
        return EigenspaceProfile(n, k, len(members), (Fraction(len(members)),))

    nbrs = build_johnson_graph(JohnsonParams(n, k, k - 1), cap=cap)
    adj = [nbrs.neighbors(v) for v in range(N)]

    def apply(vec: list[int], theta: int) -> list[int]:
        return [sum(vec[u] for u in adj[v]) - theta * vec[v] for v in range(N)]

    chi = [0] * N
    for v in members:
        chi[v] = 1
    norms = []
    for j in range(m + 1):
        w = chi
        denom = 1
        for l in range(m + 1):
            if l != j:
                w = apply(w, thetas[l])
                denom *= thetas[j] - thetas[l]
        norms.append(Fraction(sum(w[v] for v in members), denom))
    return EigenspaceProfile(n, k, len(members), tuple(norms))
