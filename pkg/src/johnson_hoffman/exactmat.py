"""Exact integer matrix arithmetic for the dense oracle path.

Products are computed modulo several primes with float64 BLAS (exact while
N * p**2 < 2**53) and lifted back with an a-priori magnitude bound, so every
answer is an exact integer statement, never a floating-point guess.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

_PRIME_CEILING = 1 << 21
MAX_ORDER = 1000  # keeps N * p**2 below 2**53 for p < 2**21


@lru_cache(maxsize=None)
def _primes_below(ceiling: int, count: int) -> tuple[int, ...]:
    out = []
    c = ceiling - 1
    while len(out) < count:
        if c % 2 and all(c % d for d in range(3, math.isqrt(c) + 1, 2)):
            out.append(c)
        c -= 1
    return tuple(out)


def primes_for_bound(bound: int) -> tuple[int, ...]:
    """Enough primes that their product exceeds 2 * bound."""
    count, prod = 0, 1
    while prod <= 2 * bound:
        count += 1
        prod = math.prod(_primes_below(_PRIME_CEILING, count))
    return _primes_below(_PRIME_CEILING, max(count, 1))


_ENTRY_LIMIT = 1 << 40


def integerize(rows: Sequence[Sequence[Fraction]]) -> tuple[np.ndarray, int]:
    """Return (M, L) with rows == M / L, M an int64 array."""
    L = 1
    for row in rows:
        for x in row:
            L = math.lcm(L, Fraction(x).denominator)
    return as_int_array([[int(Fraction(x) * L) for x in row] for row in rows]), L


def as_int_array(M) -> np.ndarray:
    big = max((abs(int(x)) for row in M for x in row), default=0)
    if big >= _ENTRY_LIMIT:
        raise ValueError(f"matrix entry {big} too large for the dense oracle")
    return np.array(M, dtype=np.int64).reshape(len(M), -1)


def inf_norm(M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return max(int(r) for r in np.abs(M).sum(axis=1))


def _reduce(M, p: int) -> np.ndarray:
    return np.mod(np.asarray(M, dtype=np.int64), p).astype(np.float64)


def _mulmod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return np.fmod(A @ B, p)


def _check_order(N: int) -> None:
    if N > MAX_ORDER:
        raise ValueError(f"matrix order {N} exceeds exact dense limit {MAX_ORDER}")


def shifted(M, shift: int) -> np.ndarray:
    """M - shift * I."""
    M = np.asarray(M, dtype=np.int64)
    if abs(shift) >= _ENTRY_LIMIT:
        raise ValueError(f"shift {shift} too large for the dense oracle")
    return M - shift * np.eye(len(M), dtype=np.int64)


def product_is_zero(factors: Sequence[Sequence[Sequence[int]]]) -> bool:
    """Exactly decide whether the product of integer matrices vanishes."""
    if not factors:
        return False
    N = len(factors[0])
    _check_order(N)
    if N == 0:
        return True
    bound = math.prod(inf_norm(F) for F in factors)
    for p in primes_for_bound(bound):
        acc = _reduce(factors[0], p)
        for F in factors[1:]:
            acc = _mulmod(acc, _reduce(F, p), p)
        if acc.any():
            return False
    return True


def power_traces(M, pmax: int) -> list[int]:
    """[trace(M**p) for p in 0..pmax], exact, for symmetric integer M.

    trace(M**(a+b)) = sum(M**a * M**b) elementwise, so only powers up to
    ceil(pmax / 2) are formed.
    """
    N = len(M)
    _check_order(N)
    norm = max(inf_norm(M), 1)
    bound = N * norm ** max(pmax, 1)
    primes = primes_for_bound(bound)
    residues = []
    for p in primes:
        base = _reduce(M, p)
        powers = [np.eye(N), base]
        while len(powers) <= (pmax + 1) // 2:
            powers.append(_mulmod(powers[-1], base, p))
        ints = [P.astype(np.int64) for P in powers]
        traces = []
        for power in range(pmax + 1):
            a = power // 2
            # residues < 2**21, so each product < 2**42 and N**2 of them fit in int64
            traces.append(int((ints[a] * ints[power - a]).sum()) % p)
        residues.append(traces)
    modulus = math.prod(primes)
    out = []
    for power in range(pmax + 1):
        x = 0
        for p, res in zip(primes, residues):
            q = modulus // p
            x += res[power] * q * pow(q, -1, p)
        x %= modulus
        if x > modulus // 2:
            x -= modulus
        out.append(x)
    return out


def exact_rank(M) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    A = [[int(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        for i in range(r + 1, rows):
            a = A[i][c]
            Ai, Ar = A[i], A[r]
            for j in range(c + 1, cols):
                Ai[j] = (pv * Ai[j] - a * Ar[j]) // prev
            Ai[c] = 0
        prev = pv
        r += 1
        if r == rows:
            break
    return r


def certified_eigenvalues(M: Sequence[Sequence[int]]) -> dict[int, int]:
    """Distinct eigenvalues and multiplicities of a symmetric integer matrix.

    Floating-point eigenvalues serve only as candidates; each candidate is
    certified by an exact nullity, and the nullities must sum to N.  Raises
    ValueError when the spectrum is not integral (irrational eigenvalues).
    """
    N = len(M)
    arr = np.array(M, dtype=np.float64)
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not symmetric")
    guesses = sorted({int(round(v)) for v in np.linalg.eigvalsh(arr)})
    found = {}
    for lam in guesses:
        nullity = N - exact_rank(shifted(M, lam))
        if nullity:
            found[lam] = nullity
    if sum(found.values()) != N:
        raise ValueError("spectrum is not integral; cannot certify exactly")
    return found
