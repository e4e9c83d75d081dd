"""Vertex lists of the smooth lattice polygons and smooth 3-polytopes with at
most 12 lattice points, one entry per integral equivalence class, in the order
they are tabulated in the classification appendix."""

from functools import lru_cache

POLYGON_VERTICES = (
    ((1, 0), (0, 0), (0, 1), (1, 1)),
    ((0, 0), (0, 1), (2, 0), (2, 1)),
    ((0, 0), (0, 1), (3, 0), (3, 1)),
    ((0, 0), (0, 1), (4, 0), (4, 1)),
    ((0, 0), (0, 1), (5, 0), (5, 1)),
    ((2, 0), (0, 0), (0, 2), (2, 2)),
    ((0, 2), (0, 0), (3, 0), (3, 2)),
    ((1, 0), (0, 0), (0, 1), (3, 1)),
    ((0, 0), (0, 1), (2, 0), (4, 1)),
    ((0, 0), (0, 1), (3, 0), (5, 1)),
    ((0, 0), (0, 1), (4, 0), (6, 1)),
    ((0, 0), (1, 0), (5, 2), (0, 2)),
    ((1, 0), (0, 0), (0, 1), (4, 1)),
    ((0, 0), (0, 1), (2, 0), (5, 1)),
    ((0, 0), (0, 1), (3, 0), (6, 1)),
    ((1, 0), (0, 0), (0, 1), (5, 1)),
    ((0, 0), (0, 1), (2, 0), (6, 1)),
    ((0, 0), (0, 1), (3, 0), (7, 1)),
    ((1, 0), (0, 0), (0, 1), (6, 1)),
    ((0, 0), (0, 1), (2, 0), (7, 1)),
    ((1, 0), (0, 0), (0, 1), (7, 1)),
    ((0, 0), (0, 1), (2, 0), (8, 1)),
    ((1, 0), (0, 0), (0, 1), (8, 1)),
    ((1, 0), (0, 0), (0, 1), (9, 1)),
    ((0, 1), (1, 0), (0, 0)),
    ((0, 0), (2, 0), (0, 2)),
    ((0, 0), (3, 0), (0, 3)),
    ((1, 0), (0, 1), (0, 2), (2, 0)),
    ((2, 0), (0, 2), (0, 3), (3, 0)),
    ((1, 0), (0, 1), (0, 3), (3, 0)),
    ((1, 1), (3, 0), (0, 2), (0, 4), (4, 0)),
    ((4, 1), (0, 3), (0, 2), (3, 0), (1, 1), (4, 0), (1, 3), (3, 2)),
    ((0, 3), (0, 2), (3, 0), (1, 1), (4, 0), (1, 3)),
    ((2, 0), (0, 1), (1, 0), (0, 3), (2, 1)),
    ((2, 0), (0, 1), (1, 0), (0, 4), (2, 2)),
    ((0, 2), (1, 0), (0, 1), (2, 0), (2, 1), (1, 2)),
    ((0, 3), (2, 0), (0, 2), (3, 0), (3, 1), (1, 3)),
    ((0, 3), (1, 0), (0, 1), (3, 0), (3, 1), (1, 3)),
    ((0, 0), (1, 0), (0, 4), (1, 3)),
    ((2, 0), (0, 0), (0, 4), (2, 2)),
    ((0, 0), (1, 0), (0, 5), (1, 4)),
)

POLYTOPE3_VERTICES = (
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (7, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (6, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (6, 0, 0), (2, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (5, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (5, 0, 0), (2, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (5, 0, 0), (3, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (5, 0, 0), (2, 1, 0), (2, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (2, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (3, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (4, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (3, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (2, 1, 0), (2, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (3, 0, 0), (2, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (4, 0, 0), (3, 1, 0), (2, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (3, 0, 0), (3, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (2, 1, 0), (1, 0, 1)),
    ((0, 0, 0), (0, 1, 0), (0, 0, 1), (3, 0, 0), (3, 1, 0), (2, 0, 1)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 0, 0)),
    ((0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)),
    ((1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (0, 2, 0), (2, 0, 0)),
    ((2, 0, 0), (0, 2, 0), (2, 0, 1), (0, 2, 1), (0, 3, 0), (3, 0, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1)),
    ((0, 0, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0), (2, 0, 1), (0, 2, 1)),
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 2), (1, 0, 2), (0, 1, 2)),
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 3), (1, 0, 3), (0, 1, 3)),
    ((0, 0, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)),
    ((0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (3, 0, 0), (3, 1, 0), (1, 0, 1), (1, 1, 1)),
    ((0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (2, 0, 0), (3, 1, 0), (1, 0, 1), (2, 1, 1)),
    ((0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (2, 0, 0), (2, 1, 0), (1, 0, 1), (1, 1, 1)),
    ((0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 2, 1), (2, 0, 0), (2, 1, 0), (1, 0, 1), (1, 2, 1)),
    ((1, 1, 0), (0, 1, 0), (0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)),
    ((0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (2, 0, 0), (2, 1, 0), (2, 0, 1), (2, 1, 1)),
)



@lru_cache(maxsize=None)
def appendix_polygons():
    from .polytope import LatticePolytope

    return tuple(LatticePolytope(v) for v in POLYGON_VERTICES)


@lru_cache(maxsize=None)
def appendix_polytopes3():
    from .polytope import LatticePolytope

    return tuple(LatticePolytope(v) for v in POLYTOPE3_VERTICES)


@lru_cache(maxsize=None)
def appendix_fans():
    """Normal fans of the tabulated 3-polytopes, one per lattice-equivalence class of fans."""
    from .cones import fan_key
    from .polytope import normal_fan

    seen = {}
    for p in appendix_polytopes3():
        f = normal_fan(p)
        seen.setdefault(fan_key(f), f)
    return tuple(seen[k] for k in sorted(seen))
