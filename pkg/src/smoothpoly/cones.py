"""Rational polyhedral cones and fans.

A cone is stored by its extreme rays. All geometry is done in lattice
coordinates on the linear span of the cone, so lower-dimensional cones behave
exactly like full-dimensional ones of smaller dimension.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import lcm

from .hull import angular_key
from .lattice import (
    Chart,
    Vector,
    adjugate,
    as_vector,
    cross,
    det,
    dot,
    primitive_vector,
    rank,
    solve_rational,
    sub,
    unimodular_inverse,
    vecmat,
)
from .polytope import LatticePolytope, normal_fan, tangent_cone


def _cone_facets(gens, k):
    """Inward primitive facet normals of the cone spanned by ``gens`` in Z^k (full-dimensional)."""
    if k == 1:
        signs = {1 if g[0] > 0 else -1 for g in gens}
        return [(s,) for s in signs] if len(signs) == 1 else []
    if k == 2:
        cands = {primitive_vector((-g[1], g[0])) for g in gens}
    else:
        cands = set()
        for a, b in combinations(gens, 2):
            n = cross(a, b)
            if any(n):
                cands.add(primitive_vector(n))
    cands |= {tuple(-x for x in n) for n in cands}
    return sorted(n for n in cands if all(dot(n, g) >= 0 for g in gens) and any(dot(n, g) for g in gens))


class RationalCone:
    """Cone generated by integer vectors.

    ``generators`` holds the primitive extreme rays (lexicographically
    sorted) when the cone is pointed; otherwise the deduplicated primitive
    input generators are kept and ``pointed`` is False.
    """

    def __init__(self, generators):
        gens = sorted({primitive_vector(as_vector(g)) for g in generators})
        if not gens:
            raise ValueError("a cone needs at least one nonzero generator")
        self.ambient_dim = len(gens[0])
        self.chart = Chart(gens, origin=(0,) * self.ambient_dim)
        self.dim = self.chart.dim
        local = [self.chart.to_local(g) for g in gens]
        facets = _cone_facets(local, self.dim)
        self.pointed = rank(facets) == self.dim if facets else False
        if self.pointed:
            keep = [
                i for i, y in enumerate(local)
                if rank([n for n in facets if dot(n, y) == 0]) == self.dim - 1
            ]
            gens = [gens[i] for i in keep]
            local = [local[i] for i in keep]
        self.generators: tuple[Vector, ...] = tuple(gens)
        self.local_generators = tuple(local)
        self.local_facets = tuple(facets)

    def __repr__(self):
        return f"RationalCone({[list(g) for g in self.generators]})"

    def __eq__(self, other):
        return isinstance(other, RationalCone) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def contains(self, x) -> bool:
        x = as_vector(x)
        if not self.chart.contains(x):
            return False
        y = self.chart.to_local(x)
        if not self.local_facets:
            return True
        return all(dot(n, y) >= 0 for n in self.local_facets)

    def local_contains(self, y) -> bool:
        return all(dot(n, y) >= 0 for n in self.local_facets)

    def facet_rays(self):
        """For each facet, the indices of the generators lying on it."""
        return [
            frozenset(i for i, y in enumerate(self.local_generators) if dot(n, y) == 0)
            for n in self.local_facets
        ]


@dataclass(frozen=True)
class GorensteinData:
    height: tuple[Fraction, ...]
    index: int
    is_gorenstein: bool


def is_simplicial(c: RationalCone) -> bool:
    return len(c.generators) == c.dim


def is_unimodular(c: RationalCone) -> bool:
    return is_simplicial(c) and c.dim == c.ambient_dim and abs(det(c.generators)) == 1


def gorenstein_data(c: RationalCone) -> GorensteinData | None:
    """Height functional of a Q-Gorenstein cone, or None if the cone is not Q-Gorenstein."""
    h = solve_rational(c.local_generators, [1] * len(c.local_generators))
    if h is None:
        return None
    height, _ = c.chart.lift_functional(h)
    index = lcm(*(x.denominator for x in h))
    return GorensteinData(tuple(Fraction(x) for x in height), index, index == 1)


def _nib(c: RationalCone) -> LatticePolytope:
    if gorenstein_data(c) is None:
        raise ValueError(f"{c} is not Q-Gorenstein, its nib is undefined")
    return LatticePolytope([(0,) * c.ambient_dim, *c.generators])


def nib_lattice_points(c: RationalCone):
    return _nib(c).lattice_points


def multiplicity(c: RationalCone) -> int:
    """Normalized volume of the nib conv(0, generators) in the lattice of the span."""
    from .polytope import normalized_volume

    return normalized_volume(_nib(c))


def _box_points_local(gens):
    """Lattice points of the half-open parallelepiped of a full-dimensional simplicial cone."""
    k = len(gens)
    d = det(gens)
    adj = adjugate(gens)
    sgn = 1 if d > 0 else -1
    lo = [sum(min(0, g[i]) for g in gens) for i in range(k)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(k)]
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        lam = vecmat(x, adj)
        if all(0 <= sgn * t < abs(d) for t in lam):
            out.append(x)
    return out


def box_points(c: RationalCone):
    if not is_simplicial(c) or c.dim != c.ambient_dim:
        raise ValueError("box points need a full-dimensional simplicial cone")
    return sorted(_box_points_local(c.generators))


def simplicial_pieces(c: RationalCone):
    """Triangulation of the cone using only its rays, coned from the lexicographically least ray.

    Returned as index tuples into ``c.generators``.
    """
    n = len(c.generators)
    if n == c.dim:
        return [tuple(range(n))]
    if c.dim != 3:
        raise AssertionError("pointed cones of dimension < 3 are simplicial")
    pieces = []
    for rays in c.facet_rays():
        if 0 in rays:
            continue
        if len(rays) != 2:
            raise AssertionError("facets of a pointed 3-cone have two rays")
        pieces.append((0, *sorted(rays)))
    return sorted(pieces)


def hilbert_basis(c: RationalCone):
    """Minimal generating set of the semigroup of lattice points in a pointed cone.

    Candidates are the rays together with the box points of a triangulation
    into simplicial cones on the rays; an element is then dropped if
    subtracting some other candidate stays inside the cone.
    """
    if not c.pointed:
        raise ValueError(f"{c} is not pointed")
    gens = c.local_generators
    cands = set(gens)
    for piece in simplicial_pieces(c):
        cands.update(_box_points_local([gens[i] for i in piece]))
    cands.discard((0,) * c.dim)
    cands = sorted(cands)
    basis = [
        x for x in cands
        if not any(y != x and c.local_contains(sub(x, y)) for y in cands)
    ]
    return sorted(c.chart.to_ambient(y) for y in basis)


def is_very_ample(p: LatticePolytope) -> bool:
    """Every vertex u satisfies hilb(T_u P) contained in P - u."""
    for u in p.vertices:
        for h in hilbert_basis(tangent_cone(p, u)):
            if not p.contains(tuple(a + b for a, b in zip(u, h))):
                return False
    return True


def is_smooth(p: LatticePolytope) -> bool:
    if not p.is_full_dimensional:
        raise ValueError("smoothness is defined here for full-dimensional polytopes")
    return all(is_unimodular(tangent_cone(p, u)) for u in p.vertices)


def normal_cones(p: LatticePolytope):
    f = normal_fan(p)
    return [RationalCone([f.rays[i] for i in cone]) for cone in f.cones]


def polytope_multiplicity(p: LatticePolytope) -> int:
    """Largest multiplicity of a normal cone."""
    best = 0
    for u, c in zip(p.vertices, normal_cones(p)):
        if gorenstein_data(c) is None:
            raise ValueError(f"normal cone at vertex {u} is not Q-Gorenstein")
        best = max(best, multiplicity(c))
    return best


class Fan:
    """Rays (primitive vectors) and maximal cones (sorted index tuples into rays)."""

    def __init__(self, rays, cones):
        self.rays: tuple[Vector, ...] = tuple(as_vector(r) for r in rays)
        self.cones: tuple[tuple[int, ...], ...] = tuple(sorted(tuple(sorted(c)) for c in cones))
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("duplicate rays in fan")
        if any(i < 0 or i >= len(self.rays) for c in self.cones for i in c):
            raise ValueError("cone index out of range")
        self.dim = len(self.rays[0]) if self.rays else 0

    def __repr__(self):
        return f"Fan(rays={[list(r) for r in self.rays]}, cones={[list(c) for c in self.cones]})"

    def __eq__(self, other):
        return isinstance(other, Fan) and fan_signature(self) == fan_signature(other)

    def __hash__(self):
        return hash(fan_signature(self))

    def cone(self, i) -> RationalCone:
        return RationalCone([self.rays[j] for j in self.cones[i]])

    def to_dict(self) -> dict:
        order = sorted(range(len(self.rays)), key=lambda i: self.rays[i])
        pos = {i: k for k, i in enumerate(order)}
        return {
            "rays": [list(self.rays[i]) for i in order],
            "cones": sorted(sorted(pos[i] for i in c) for c in self.cones),
        }


def fan_signature(f: Fan):
    """Fan up to reordering of its rays."""
    return (
        tuple(sorted(f.rays)),
        tuple(sorted(tuple(sorted(f.rays[i] for i in c)) for c in f.cones)),
    )


def fan_key(f: Fan):
    """Canonical signature of a smooth fan up to GL(d, Z).

    Every maximal cone with every ordering of its rays gives a lattice basis;
    expressing the fan in that basis and taking the least result is invariant.
    """
    best = None
    for cone in f.cones:
        for perm in permutations(cone):
            inv = unimodular_inverse([f.rays[i] for i in perm])
            rays = [vecmat(r, inv) for r in f.rays]
            sig = (
                tuple(sorted(rays)),
                tuple(sorted(tuple(sorted(rays[i] for i in c)) for c in f.cones)),
            )
            if best is None or sig < best:
                best = sig
    return best


def fan_id(f: Fan) -> str:
    return hashlib.sha1(json.dumps(fan_key(f)).encode()).hexdigest()[:12]


def fan_is_smooth(f: Fan) -> bool:
    _check_fan(f)
    return all(is_unimodular(f.cone(i)) for i in range(len(f.cones)))


def _check_fan(f: Fan):
    if not f.cones:
        raise ValueError("fan without maximal cones")
    for i in range(len(f.cones)):
        c = f.cone(i)
        if not c.pointed or c.dim != f.dim or len(c.generators) != len(f.cones[i]):
            raise ValueError(f"maximal cone {f.cones[i]} is not a full-dimensional pointed cone on its rays")


def fan_is_complete(f: Fan) -> bool:
    _check_fan(f)
    if f.dim == 1:
        return sorted(f.rays) == [(-1,), (1,)] and len(f.cones) == 2
    if f.dim == 2:
        used = sorted({i for c in f.cones for i in c}, key=lambda i: angular_key(f.rays[i]))
        if len(used) != len(f.rays) or len(f.cones) != len(used):
            return False
        ring = list(zip(used, used[1:] + used[:1]))
        for a, b in ring:
            if det((f.rays[a], f.rays[b])) <= 0:
                return False
        return {tuple(sorted(p)) for p in ring} == set(f.cones)
    if f.dim == 3:
        return _complete3(f)
    raise ValueError("fans only supported up to dimension 3")


def _complete3(f: Fan) -> bool:
    walls = {}
    planes = []
    for i in range(len(f.cones)):
        c = f.cone(i)
        idx = [f.rays.index(g) for g in c.generators]
        for n, rays in zip(c.local_facets, c.facet_rays()):
            n_amb, _ = c.chart.lift_functional(n)
            planes.append(n_amb)
            key = frozenset(idx[r] for r in rays)
            walls.setdefault(key, []).append(n_amb)
    for normals in walls.values():
        if len(normals) != 2:
            return False
        a, b = normals
        if primitive_vector(a) != tuple(-x for x in primitive_vector(b)):
            return False
    w = _generic_point(planes)
    inside = 0
    for i in range(len(f.cones)):
        if f.cone(i).contains(w):
            inside += 1
    return inside == 1


def _generic_point(planes):
    t = 2
    while True:
        w = (1, t, t * t + 1)
        if all(dot(n, w) != 0 for n in planes):
            return w
        t += 1


def rays_cyclic_order(f: Fan):
    """Indices of the rays of a complete 2-dimensional fan in counter-clockwise order."""
    if f.dim != 2:
        raise ValueError("cyclic order only makes sense in dimension 2")
    return sorted(range(len(f.rays)), key=lambda i: angular_key(f.rays[i]))


def cone_faces(f: Fan, size: int):
    """All faces of maximal cones with ``size`` rays (as sorted index tuples), sorted."""
    faces = set()
    for c in f.cones:
        faces.update(combinations(c, size))
    return sorted(faces)


__all__ = [
    "Fan",
    "GorensteinData",
    "RationalCone",
    "box_points",
    "cone_faces",
    "fan_id",
    "fan_is_complete",
    "fan_is_smooth",
    "fan_key",
    "gorenstein_data",
    "hilbert_basis",
    "is_simplicial",
    "is_smooth",
    "is_unimodular",
    "is_very_ample",
    "multiplicity",
    "nib_lattice_points",
    "polytope_multiplicity",
    "simplicial_pieces",
]
