import random
from fractions import Fraction
from math import gcd

import pytest

from cryarr.errors import SingularMatrixError
from cryarr.linalg import (
    dual_basis,
    invert,
    kernel_vector,
    matrix_rank,
    smith_normal_form,
    vol,
)
from oracles import det_cofactor, snf_divisors_minors


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_snf_matches_minor_gcd_oracle():
    rng = random.Random(20240613)
    for _ in range(200):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = random_matrix(rng, rows, cols)
        assert smith_normal_form(m) == snf_divisors_minors(m)


def test_snf_divisibility_chain():
    rng = random.Random(7)
    for _ in range(100):
        m = random_matrix(rng, 3, 3)
        d = smith_normal_form(m)
        for a, b in zip(d, d[1:]):
            if b != 0:
                assert a != 0 and b % a == 0


def test_vol_full_rank_is_abs_det():
    rng = random.Random(99)
    for _ in range(100):
        m = random_matrix(rng, 3, 3)
        assert vol(3, m) == abs(det_cofactor(m))


def test_vol_m1_is_gcd():
    assert vol(1, [(4, 6, 10)]) == 2
    assert vol(1, [(0, 0, 0)]) == 0
    assert vol(1, [(3, 5, 0)]) == 1


def test_vol_examples():
    assert vol(2, [(1, 0, 0), (0, 1, 0)]) == 1
    assert vol(2, [(2, 0, 0), (0, 3, 0)]) == 6
    assert vol(2, [(1, 2, 0), (2, 4, 0)]) == 0  # parallel columns


def test_invert_round_trip():
    rng = random.Random(5)
    done = 0
    while done < 50:
        m = random_matrix(rng, 3, 3)
        if det_cofactor(m) == 0:
            continue
        done += 1
        inv = invert(m)
        prod = [
            [sum(Fraction(m[i][k]) * inv[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        assert prod == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        invert([[1, 2], [2, 4]])


def test_kernel_vector():
    v = kernel_vector([(1, 0, 0), (0, 1, 0)], 3)
    assert v is not None and v[0] == 0 and v[1] == 0 and v[2] != 0
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    assert g == 1
    # nullity 2: no unique kernel line
    assert kernel_vector([(1, 0, 0)], 3) is None


def test_dual_basis():
    b = dual_basis([(1, 0), (1, 1)])
    assert b == ((Fraction(1), Fraction(-1)), (Fraction(0), Fraction(1)))


def test_matrix_rank():
    assert matrix_rank([(1, 2), (2, 4)]) == 1
    assert matrix_rank([(1, 0), (0, 1)]) == 2
