import pytest

from smoothpoly.cones import gorenstein_data, is_smooth, is_very_ample, polytope_multiplicity
from smoothpoly.fixtures import (
    bruns_polytope,
    fibonacci,
    fibonacci_chain,
    fibonacci_identities,
    fibonacci_polygon,
    hirzebruch_trapezoid,
    reeve_simplex,
)
from smoothpoly.polytope import dilate, normalized_volume, tangent_cone


def test_reeve():
    p = reeve_simplex(1)
    assert normalized_volume(p) == 1 and is_smooth(p)
    p = reeve_simplex(2)
    assert len(p.lattice_points) == 4 and not is_very_ample(p)
    assert len(dilate(reeve_simplex(5), 2).lattice_points) == 14


def test_bruns():
    for k in range(1, 6):
        q = bruns_polytope(k)
        assert len(q.lattice_points) == 8
        assert polytope_multiplicity(q) == k + 1
    for k in range(2, 6):
        assert gorenstein_data(tangent_cone(bruns_polytope(k), (0, 1, 0))) is None


@pytest.mark.parametrize("fn", [reeve_simplex, bruns_polytope, fibonacci_chain, fibonacci_polygon])
def test_rejects_nonpositive(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_fibonacci_numbers():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [fibonacci(-n) for n in range(1, 6)] == [1, -1, 2, -3, 5]
    for n in range(-10, 10):
        assert fibonacci(n + 2) == fibonacci(n + 1) + fibonacci(n)


def test_chain_k5():
    chain = fibonacci_chain(5)
    assert chain.edge_vectors == (
        (1, 0), (3, 1), (8, 3), (21, 8), (55, 21), (34, 13), (13, 5), (5, 2), (2, 1), (1, 1), (0, 1)
    )


@pytest.mark.parametrize("k", range(1, 7))
def test_chain_turns_and_identities(k):
    chain = fibonacci_chain(k)
    assert fibonacci_identities(k) == (-1, 1, -1, 1)
    # every pair of consecutive edges is a lattice basis turning the same way
    assert chain.turns() == [1] * (len(chain.edge_vectors) - 1)


@pytest.mark.parametrize("k", range(1, 6))
def test_fibonacci_polygon_shape(k):
    p = fibonacci_polygon(k)
    assert is_smooth(p)
    assert len(p.vertices) == 8 * k
    lengths = p.edge_lengths()
    assert sorted(set(lengths)) == [1, 2] and lengths.count(2) == 4


def test_fibonacci_polygon_width():
    xs = [x for x, _ in fibonacci_polygon(5).vertices]
    assert max(xs) - min(xs) == 286


def test_hirzebruch():
    p, marked = hirzebruch_trapezoid(3)
    assert len(p.lattice_points) == 7 and len(marked) == 6
    assert all(p.contains(m) for m in marked)
    p, marked = hirzebruch_trapezoid(0)
    assert sorted(p.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)] and len(marked) == 4
    assert len(hirzebruch_trapezoid(1)[1]) == 5
    assert all(is_smooth(hirzebruch_trapezoid(a)[0]) for a in range(0, 12))
    with pytest.raises(ValueError):
        hirzebruch_trapezoid(-1)
