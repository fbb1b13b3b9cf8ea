from fractions import Fraction
import random

import numpy as np
import pytest

from johnson_hoffman import exactmat


def _rank_fractions(M):
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    for c in range(len(A[0])):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def test_exact_rank_matches_fraction_elimination():
    rng = random.Random(7)
    for _ in range(40):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        base = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rng.randint(1, 3))]
        M = [[sum(rng.randint(-2, 2) * b[j] for b in base) for j in range(cols)] for _ in range(rows)]
        assert exactmat.exact_rank(M) == _rank_fractions(M)


def test_product_is_zero_detects_large_entries():
    # entries of the product far exceed 2**53
    big = 3 ** 20
    A = np.array([[big, 0], [0, 0]], dtype=np.int64)
    B = np.array([[0, 0], [0, big]], dtype=np.int64)
    assert exactmat.product_is_zero([A, B])
    assert not exactmat.product_is_zero([A, A])
    C = np.array([[big, 1], [0, 0]], dtype=np.int64)
    assert not exactmat.product_is_zero([C, B])


def test_power_traces_against_python_ints():
    rng = random.Random(3)
    for N in (1, 2, 5, 9):
        M = [[0] * N for _ in range(N)]
        for i in range(N):
            for j in range(i, N):
                M[i][j] = M[j][i] = rng.randint(-40, 40)
        expect, P = [], [[int(i == j) for j in range(N)] for i in range(N)]
        for p in range(6):
            expect.append(sum(P[i][i] for i in range(N)))
            P = [[sum(P[i][l] * M[l][j] for l in range(N)) for j in range(N)] for i in range(N)]
        assert exactmat.power_traces(np.array(M), 5) == expect


def test_certified_eigenvalues():
    K3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert exactmat.certified_eigenvalues(K3) == {2: 1, -1: 2}
    with pytest.raises(ValueError):
        exactmat.certified_eigenvalues([[0, 1], [1, 1]])  # golden-ratio eigenvalues


def test_integerize():
    M, L = exactmat.integerize([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 3), 0]])
    assert L == 6 and M.tolist() == [[3, 2], [2, 0]]


def test_primes_cover_bound():
    import math
    for bound in (1, 10 ** 6, 10 ** 30):
        primes = exactmat.primes_for_bound(bound)
        assert math.prod(primes) > 2 * bound
