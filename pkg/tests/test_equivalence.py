import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smoothpoly.appendix import appendix_polygons, appendix_polytopes3
from smoothpoly.equivalence import (
    are_equivalent,
    canonical_form,
    canonical_form_general,
    canonical_form_smooth,
    dedup_classes,
)
from smoothpoly.fixtures import bruns_polytope, reeve_simplex
from smoothpoly.lattice import det
from smoothpoly.polytope import LatticePolytope, affine_image, dilate, translate

from oracles import cube

SQUARE = LatticePolytope(cube(2))


def random_unimodular(rng, d, steps=6):
    m = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        i, j = rng.sample(range(d), 2)
        c = rng.choice((-2, -1, 1, 2))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i] = [-a for a in m[i]]
    assert abs(det(m)) == 1
    return m


def random_image(p, rng):
    d = p.ambient_dim
    return affine_image(p, random_unimodular(rng, d), [rng.randint(-9, 9) for _ in range(d)])


def test_square_image():
    img = affine_image(SQUARE, [[2, 1], [1, 1]], [7, -3])
    assert canonical_form_smooth(img) == canonical_form_smooth(SQUARE)
    assert canonical_form(img).vertices == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_appendix_forms_distinct():
    assert len({canonical_form_smooth(p).key for p in appendix_polygons()}) == 41
    assert len({canonical_form_smooth(p).key for p in appendix_polytopes3()}) == 33


@pytest.mark.parametrize("p", appendix_polygons() + appendix_polytopes3(), ids=str)
def test_general_form_agrees_on_smooth(p):
    assert canonical_form_general(p).vertices == canonical_form_smooth(p).vertices


def test_smooth_form_rejects_singular():
    with pytest.raises(ValueError, match="not smooth"):
        canonical_form_smooth(reeve_simplex(3))


def test_are_equivalent_examples():
    p = appendix_polygons()[7]
    assert are_equivalent(p, translate(p, (5, 5)))
    assert not are_equivalent(reeve_simplex(2), reeve_simplex(3))
    assert not are_equivalent(SQUARE, LatticePolytope([(0, 0), (1, 0), (0, 1)]))


@pytest.mark.parametrize("seed", range(8))
def test_random_images_equivalent(seed):
    rng = random.Random(seed)
    pool = list(appendix_polygons() + appendix_polytopes3()) + [reeve_simplex(3), bruns_polytope(2)]
    p = rng.choice(pool)
    q = random_image(p, rng)
    assert are_equivalent(p, q)
    assert canonical_form(p) == canonical_form(q)


@given(st.integers(0, 10**6))
def test_non_smooth_images_share_general_form(seed):
    rng = random.Random(seed)
    p = rng.choice([reeve_simplex(rng.randint(2, 6)), bruns_polytope(rng.randint(1, 4))])
    q = random_image(p, rng)
    assert canonical_form_general(p) == canonical_form_general(q)


def test_equivalence_agrees_with_forms_on_appendix():
    polys = appendix_polytopes3()[:12]
    for i, p in enumerate(polys):
        for q in polys[i:]:
            assert are_equivalent(p, q) == (canonical_form(p) == canonical_form(q))


def test_dedup():
    rng = random.Random(11)
    polys = list(appendix_polygons())
    images = [random_image(rng.choice(polys), rng) for _ in range(100)]
    classes = dedup_classes(polys + images)
    assert len(classes) == 41
    keys = [(len(rep.lattice_points), len(rep.vertices), form.vertices) for form, rep in classes]
    assert keys == sorted(keys)
    assert dedup_classes([]) == []
    assert len(dedup_classes([SQUARE, dilate(SQUARE, 2)])) == 2
