"""Desarguesian projective planes PG(2, q) and the Bruck-Ryser criterion."""

from __future__ import annotations

import itertools as it
import math
from dataclasses import dataclass

from .combinatorics import KSubset
from .extremal import Family

MAX_FIELD = 256


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, m) with q = p**m, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


# polynomials over GF(p) are coefficient tuples, lowest degree first

def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    m = len(mod) - 1
    for top in range(len(a) - 1, m - 1, -1):
        c = a[top] % p
        if c:
            for i in range(m + 1):
                a[top - m + i] = (a[top - m + i] - c * mod[i]) % p
    return [x % p for x in a[:m]] + [0] * (m - len(a[:m]))


def _divides(d: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    return not any(_poly_mod(list(f), d, p))


def _monic(degree: int, p: int):
    """Monic polynomials of the given degree in lexicographic order of (a_{m-1}, ..., a_0)."""
    for high_first in it.product(range(p), repeat=degree):
        yield tuple(reversed(high_first)) + (1,)


def is_irreducible(f: tuple[int, ...], p: int) -> bool:
    m = len(f) - 1
    return not any(_divides(d, f, p) for deg in range(1, m // 2 + 1) for d in _monic(deg, p))


def least_irreducible(m: int, p: int) -> tuple[int, ...]:
    return next(f for f in _monic(m, p) if is_irreducible(f, p))


@dataclass(frozen=True)
class FiniteField:
    """GF(p**m); element x encodes the polynomial with base-p digits of x."""

    p: int
    m: int
    modulus: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul[a].index(1)


def _digits(x: int, p: int, m: int) -> list[int]:
    return [x // p ** i % p for i in range(m)]


def _undigits(ds, p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(ds))


def make_field(q: int) -> FiniteField:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    if q > MAX_FIELD:
        raise ValueError(f"q = {q} exceeds {MAX_FIELD}")
    p, m = pm
    modulus = least_irreducible(m, p) if m > 1 else (0, 1)
    digits = [_digits(x, p, m) for x in range(q)]
    add = tuple(
        tuple(_undigits([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q))
        for x in range(q)
    )
    mul = []
    for x in range(q):
        row = []
        for y in range(q):
            prod = [0] * (2 * m - 1)
            for i, a in enumerate(digits[x]):
                if a:
                    for j, b in enumerate(digits[y]):
                        prod[i + j] += a * b
            row.append(_undigits(_poly_mod(prod, modulus, p), p))
        mul.append(tuple(row))
    return FiniteField(p, m, modulus, add, tuple(mul))


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, ...], ...]  # sorted point ids per line

    @property
    def n_points(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"q": self.q, "points": self.n_points, "lines": [list(l) for l in self.lines]}


def _normalized_triples(F: FiniteField) -> list[tuple[int, int, int]]:
    """Nonzero triples with first nonzero coordinate 1, in lexicographic order."""
    q = F.q
    return [v for v in it.product(range(q), repeat=3) if any(v) and next(c for c in v if c) == 1]


def build_plane(q: int) -> ProjectivePlane:
    F = make_field(q)
    points = _normalized_triples(F)
    add, mul = F.add, F.mul
    lines = []
    for a in points:  # linear form a.x, same normalization
        on = []
        for pid, x in enumerate(points):
            s = 0
            for ai, xi in zip(a, x):
                s = add[s][mul[ai][xi]]
            if s == 0:
                on.append(pid)
        lines.append(tuple(on))
    plane = ProjectivePlane(q, tuple(points), tuple(lines))
    problems = plane_axiom_violations(plane)
    if problems:
        raise RuntimeError(f"PG(2,{q}) failed plane axioms: {problems[:3]}")
    return plane


def plane_axiom_violations(plane: ProjectivePlane) -> list[str]:
    q, N = plane.q, plane.n_points
    out = []
    if N != q * q + q + 1 or len(plane.lines) != N:
        out.append(f"expected {q * q + q + 1} points and lines, got {N} and {len(plane.lines)}")
    sets = [set(l) for l in plane.lines]
    for i, l in enumerate(sets):
        if len(l) != q + 1:
            out.append(f"line {i} has {len(l)} points")
    for i, j in it.combinations(range(len(sets)), 2):
        if len(sets[i] & sets[j]) != 1:
            out.append(f"lines {i}, {j} meet in {len(sets[i] & sets[j])} points")
    on_count = [0] * N
    pair_count: dict[tuple[int, int], int] = {}
    for l in plane.lines:
        for x in l:
            on_count[x] += 1
        for pair in it.combinations(l, 2):
            pair_count[pair] = pair_count.get(pair, 0) + 1
    for x, c in enumerate(on_count):
        if c != q + 1:
            out.append(f"point {x} on {c} lines")
    if len(pair_count) != N * (N - 1) // 2 or any(c != 1 for c in pair_count.values()):
        out.append("some pair of points is not on exactly one line")
    return out


@dataclass
class CliqueCertificate:
    q: int
    n: int
    k: int
    size: int
    pairs_checked: int
    ok: bool


def plane_clique(q: int) -> tuple[Family, CliqueCertificate]:
    """Lines of PG(2, q) as a clique in J(q^2+q+1, q+1, 1)."""
    plane = build_plane(q)
    n, k = plane.n_points, q + 1
    members = [KSubset.of(l, n) for l in plane.lines]
    masks = [s.mask for s in members]
    pairs = ok = 0
    for a, b in it.combinations(masks, 2):
        pairs += 1
        ok += (a & b).bit_count() == 1
    fam = Family(frozenset(members), n, k, "user")
    return fam, CliqueCertificate(q, n, k, len(members), pairs, ok == pairs and len(fam) == n)


def is_sum_of_two_squares(n: int) -> tuple[int, int] | None:
    for a in range(math.isqrt(n) + 1):
        b = math.isqrt(n - a * a)
        if a * a + b * b == n:
            return a, b
    return None


@dataclass(frozen=True)
class BruckRyserVerdict:
    order: int
    excluded: bool
    reason: str

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "verdict": "Excluded" if self.excluded else "NotExcluded",
            "reason": self.reason,
        }


def bruck_ryser_excludes(order: int) -> BruckRyserVerdict:
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    r = order % 4
    if r not in (1, 2):
        return BruckRyserVerdict(order, False, f"{order} = {r} (mod 4); criterion does not apply")
    sq = is_sum_of_two_squares(order)
    if sq:
        a, b = sq
        return BruckRyserVerdict(order, False, f"{order} = {a}^2 + {b}^2")
    return BruckRyserVerdict(order, True, f"{order} = {r} (mod 4) and not a sum of two squares")
