import random
from fractions import Fraction

import pytest

from sixpoint.exact import RationalMatrix, integer_vector, parse_rational, span_dimension


def veronese_rows():
    # degree-2 monomials x^2, xy, xz, y^2, yz, z^2 at (1 : t : t^2); the six
    # points sit on the conic y^2 = xz, so exactly one quadric vanishes
    rows = []
    for t in range(6):
        x, y, z = 1, t, t * t
        rows.append([x * x, x * y, x * z, y * y, y * z, z * z])
    return rows


def test_rank_identity():
    eye = RationalMatrix.from_rows([[int(i == j) for j in range(3)] for i in range(3)])
    assert eye.rank() == 3


def test_rank_zero_matrix():
    assert RationalMatrix(4, 5, [0] * 20).rank() == 0


def test_rank_veronese_conic_matrix():
    assert RationalMatrix.from_rows(veronese_rows()).rank() == 5


def test_kernel_full_rank_is_empty():
    eye = RationalMatrix.from_rows([[1, 0], [0, 1]])
    assert eye.kernel_basis() == []


def test_kernel_of_sum_functional():
    basis = RationalMatrix.from_rows([[1, 1, 1]]).kernel_basis()
    assert len(basis) == 2
    assert all(sum(v) == 0 for v in basis)
    assert basis == [(1, -1, 0), (1, 0, -1)]


def test_kernel_veronese_is_the_conic():
    basis = RationalMatrix.from_rows(veronese_rows()).kernel_basis()
    # canonical form of the quadric y^2 - xz
    assert basis == [(0, 0, 1, -1, 0, 0)]


def test_span_dimension_examples():
    assert span_dimension([(1, 0, 0)]) == 0
    assert span_dimension([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 1
    assert span_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 2


def test_span_dimension_rejects_zero_vector():
    with pytest.raises(ValueError):
        span_dimension([(1, 0, 0), (0, 0, 0)])


def test_entry_count_validated():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, [1, 2, 3])


def test_integer_vector_canonicalization():
    assert integer_vector([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert integer_vector([Fraction(-2), Fraction(4)]) == (1, -2)
    assert integer_vector([0, 0]) == (0, 0)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-9/2") == Fraction(-9, 2)
    assert parse_rational(" 5 ") == 5
    with pytest.raises(ValueError):
        parse_rational("x/y")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def random_matrix(rng, rows, cols):
    return RationalMatrix(
        rows,
        cols,
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rows * cols)],
    )


def test_rank_kernel_duality_on_random_matrices():
    rng = random.Random(2024)
    for _ in range(100):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = random_matrix(rng, rows, cols)
        kernel = m.kernel_basis()
        assert m.rank() + len(kernel) == cols
        for vec in kernel:
            image = [
                sum(m.at(i, j) * vec[j] for j in range(cols)) for i in range(rows)
            ]
            assert all(x == 0 for x in image)


def test_rank_invariant_under_permutation_and_scaling():
    rng = random.Random(7)
    for _ in range(60):
        rows, cols = rng.randint(2, 5), rng.randint(2, 5)
        m = random_matrix(rng, rows, cols)
        r = m.rank()

        row_order = list(range(rows))
        col_order = list(range(cols))
        rng.shuffle(row_order)
        rng.shuffle(col_order)
        shuffled = RationalMatrix.from_rows(
            [[m.at(i, j) for j in col_order] for i in row_order]
        )
        assert shuffled.rank() == r

        scale_row = rng.randrange(rows)
        factor = Fraction(rng.choice([1, 2, 3, -1, -5]), rng.randint(1, 4))
        scaled = RationalMatrix.from_rows(
            [
                [factor * m.at(i, j) if i == scale_row else m.at(i, j) for j in range(cols)]
                for i in range(rows)
            ]
        )
        assert scaled.rank() == r


def test_deterministic_results():
    rng = random.Random(99)
    m = random_matrix(rng, 4, 6)
    assert m.rank() == m.rank()
    assert m.kernel_basis() == m.kernel_basis()


def test_inverse_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        while True:
            m = RationalMatrix(3, 3, [rng.randint(-5, 5) for _ in range(9)])
            if m.rank() == 3:
                break
        inv = m.inverse()
        product = [
            [sum(inv.at(i, k) * m.at(k, j) for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        assert product == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_inverse_rejects_singular():
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [2, 4]]).inverse()
