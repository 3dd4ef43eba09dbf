import random
from fractions import Fraction

import pytest

from hochord.exact import Field, Matrix, QQ, mat_mul, nullspace, rank, solve


def test_field_parse_and_primality():
    assert Field.parse("Q").is_rationals
    assert Field.parse("F(7)").p == 7
    assert Field.parse("F7").p == 7
    with pytest.raises(ValueError):
        Field.parse("F(6)")
    with pytest.raises(ValueError):
        Field.parse("R")


def test_scalar_canonical_forms():
    f = Field(7)
    assert f.of(Fraction(1, 2)) == 4  # 1/2 = 4 mod 7
    assert f.of(-1) == 6
    assert QQ.of(2) == Fraction(2)


def test_mat_mul_identity_and_zero():
    m = Matrix.from_rows([[1, 2], [3, 4], [5, 6]])
    assert mat_mul(Matrix.identity(3), m) == m
    z = Matrix.zero(2, 2)
    assert mat_mul(z, Matrix.from_rows([[1, 2], [3, 4]])).is_zero()


def test_mat_mul_fractions():
    a = Matrix.from_rows([[Fraction(1, 2)]])
    b = Matrix.from_rows([[Fraction(2, 3)]])
    assert mat_mul(a, b) == Matrix.from_rows([[Fraction(1, 3)]])


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(Matrix.zero(2, 3), Matrix.zero(2, 2))


def test_rank_examples():
    assert rank(Matrix.zero(4, 5)) == 0
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def _random_matrix(rng, rows, cols, field, density=0.6, span=5):
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                entries[(r, c)] = field.of(rng.randint(-span, span))
    return Matrix(rows, cols, field, entries)


def test_rank_equals_rank_of_transpose():
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), QQ)
        assert rank(m) == rank(m.transpose())


def test_rank_rationals_matches_large_prime_field():
    p = 1_000_003
    fp = Field(p)
    rng = random.Random(11)
    for _ in range(20):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        ints = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        mq = Matrix.from_rows(ints, QQ)
        mp = Matrix.from_rows(ints, fp)
        assert rank(mq) == rank(mp)


def test_mat_mul_associativity():
    rng = random.Random(3)
    for _ in range(15):
        a = _random_matrix(rng, rng.randint(1, 4), 3, QQ)
        b = _random_matrix(rng, 3, rng.randint(1, 4), QQ)
        c = _random_matrix(rng, b.cols, rng.randint(1, 4), QQ)
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_nullspace_and_solve():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        col = Matrix(3, 1, QQ, {(i, 0): x for i, x in enumerate(v)})
        assert mat_mul(m, col).is_zero()
    a = Matrix.from_rows([[1, 1], [0, 1]])
    b = Matrix.from_rows([[3], [2]])
    x = solve(a, b)
    assert mat_mul(a, x) == b
    with pytest.raises(ValueError):
        solve(Matrix.from_rows([[1], [1]]), Matrix.from_rows([[1], [2]]))


def test_rank_over_small_prime_field_differs_where_expected():
    # 2x2 with determinant 5: invertible over Q, singular over F_5
    m = [[1, 2], [3, 11]]
    assert rank(Matrix.from_rows(m, QQ)) == 2
    assert rank(Matrix.from_rows(m, Field(5))) == 1


def test_matrix_structural_equality_and_triplets():
    a = Matrix.from_rows([[0, 1], [2, 0]])
    b = Matrix(2, 2, QQ, {(0, 1): 1, (1, 0): 2, (1, 1): 0})
    assert a == b
    assert a.to_triplets() == [(0, 1, "1"), (1, 0, "2")]
