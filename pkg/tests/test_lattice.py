from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smoothpoly.lattice import (
    Chart,
    det,
    hermite_normal_form,
    identity,
    integer_kernel,
    is_hermite_normal_form,
    matmul,
    primitive_vector,
    rank,
    rational_inverse,
    segment_lattice_length,
    solve_rational,
    unimodular_inverse,
)

from oracles import leibniz_det

small = st.integers(-5, 5)


def matrices(n, m=None):
    return st.lists(st.lists(small, min_size=m or n, max_size=m or n), min_size=n, max_size=n)


@pytest.mark.parametrize(
    "v, expected",
    [((4, 6), (2, 3)), ((0, 0, 5), (0, 0, 1)), ((-2, -4), (-1, -2))],
)
def test_primitive_vector(v, expected):
    assert primitive_vector(v) == expected


def test_primitive_zero():
    with pytest.raises(ValueError, match="zero has no direction"):
        primitive_vector((0, 0))


@given(st.lists(small, min_size=1, max_size=4).filter(any))
def test_primitive_idempotent(v):
    p = primitive_vector(v)
    assert primitive_vector(p) == p
    assert all(x * p[i] >= 0 for i, x in enumerate(v))


@pytest.mark.parametrize(
    "m, expected",
    [(identity(3), 1), (((1, 0, 0), (0, 1, 0), (1, 1, 5)), 5), (((1, 0), (1, 2)), 2)],
)
def test_det_examples(m, expected):
    assert det(m) == expected


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(((1, 2, 3), (4, 5, 6)))


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(matrices(n), matrices(n))))
def test_det_multiplicative(pair):
    a, b = pair
    assert det(matmul(a, b)) == det(a) * det(b)
    assert det(a) == leibniz_det(a)


@pytest.mark.parametrize(
    "m, inv",
    [
        (identity(2), identity(2)),
        (((1, 1), (0, 1)), ((1, -1), (0, 1))),
        (((0, 1), (1, 0)), ((0, 1), (1, 0))),
    ],
)
def test_unimodular_inverse_examples(m, inv):
    assert unimodular_inverse(m) == inv


def test_unimodular_inverse_rejects():
    with pytest.raises(ValueError, match="not unimodular"):
        unimodular_inverse(((2, 0), (0, 1)))


@given(st.integers(2, 3).flatmap(matrices))
def test_unimodular_inverse_roundtrip(m):
    # make a unimodular matrix from m's HNF transform
    _, u = hermite_normal_form(m)
    assert matmul(u, unimodular_inverse(u)) == identity(len(u))


@pytest.mark.parametrize(
    "a, b, n",
    [((0, 0), (6, 4), 2), ((0, 0, 0), (7, 0, 0), 7), ((1, 1), (1, 1), 0)],
)
def test_segment_lattice_length(a, b, n):
    assert segment_lattice_length(a, b) == n


@given(st.lists(small, min_size=2, max_size=3), st.lists(small, min_size=2, max_size=3))
def test_segment_length_by_scan(a, b):
    b = (b + [0, 0, 0])[: len(a)]
    diff = [y - x for x, y in zip(a, b)]
    den = max(1, max(abs(x) for x in diff))
    # every lattice point of [a, b] sits at a parameter t = i / den with den the largest coordinate gap
    count = 0
    for i in range(den + 1):
        t = Fraction(i, den)
        if all((x + t * d).denominator == 1 for x, d in zip(a, diff)):
            count += 1
    if not any(diff):
        count = 1
    assert segment_lattice_length(a, b) + 1 == count


@pytest.mark.parametrize(
    "m, h",
    [
        (identity(2), identity(2)),
        (((2, 4), (1, 1)), ((1, 1), (0, 2))),
        (((0, 0),), ((0, 0),)),
    ],
)
def test_hnf_examples(m, h):
    got, u = hermite_normal_form(m)
    assert got == h
    assert matmul(u, m) == got


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_hnf_properties(m):
    h, u = hermite_normal_form(m)
    assert matmul(u, m) == h
    assert abs(det(u)) == 1
    assert is_hermite_normal_form(h)


@given(st.integers(1, 3).flatmap(lambda r: matrices(r, 3)))
def test_integer_kernel(rows):
    ker = integer_kernel(rows, 3)
    assert len(ker) == 3 - rank(rows)
    for k in ker:
        assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)
    if ker:
        # saturated: the kernel basis extends to a lattice basis, so its maximal minors are coprime
        if len(ker) == 1:
            assert gcd(*ker[0]) == 1


@given(st.integers(2, 3).flatmap(matrices))
def test_rational_inverse_and_solve(m):
    if det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            rational_inverse(m)
        return
    inv = rational_inverse(m)
    n = len(m)
    prod = [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    x = solve_rational(m, [1] * n)
    assert [sum(a * b for a, b in zip(r, x)) for r in m] == [1] * n


def test_solve_inconsistent():
    assert solve_rational(((1, 1), (2, 2)), (1, 3)) is None


def test_chart_of_a_lattice_plane():
    pts = [(0, 0, 0), (2, 0, 2), (0, 3, 3)]
    ch = Chart(pts)
    assert ch.dim == 2 and ch.codim == 1
    for p in pts:
        assert ch.to_ambient(ch.to_local(p)) == p
    assert ch.contains((1, 1, 2))
    with pytest.raises(ValueError):
        ch.to_local((1, 0, 0))
