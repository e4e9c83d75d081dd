"""Pulling triangulations on all lattice points and the flag property.

Pulling a point q into a cell C replaces C by the pyramids conv(q, F) over the
facets F of C that miss q. Starting from the polytope itself and pulling every
lattice point in a fixed order gives a regular triangulation that uses all
lattice points; the order is a complete, replayable certificate.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .hull import full_dim_facets
from .lattice import det, dot, sub
from .polytope import LatticePolytope, normalized_volume


@dataclass(frozen=True)
class Triangulation:
    points: tuple[tuple[int, ...], ...]
    simplices: tuple[tuple[int, ...], ...]
    order: tuple[tuple[int, ...], ...] = ()

    @property
    def dim(self) -> int:
        return len(self.simplices[0]) - 1 if self.simplices else 0

    def edges(self) -> set[tuple[int, int]]:
        return {e for s in self.simplices for e in combinations(s, 2)}

    def to_dict(self) -> dict:
        return {
            "order": [list(p) for p in self.order],
            "simplices": [[list(self.points[i]) for i in s] for s in self.simplices],
        }


def _pyramid_members(cell, q, facets):
    """For each facet missing q, the points of ``cell`` lying in conv(q, facet)."""
    groups = {f: [] for f, (n, c) in enumerate(facets) if dot(n, q) != c}
    for x in cell:
        if x == q:
            for g in groups.values():
                g.append(x)
            continue
        dx = sub(x, q)
        # exit parameter along q + t (x - q) through facet f is (c - <n, q>) / <n, dx>
        best = None
        for f in groups:
            n, c = facets[f]
            den = dot(n, dx)
            if den <= 0:
                continue
            num = c - dot(n, q)
            if best is None or num * best[1] < best[0] * den:
                best, hits = (num, den), [f]
            elif num * best[1] == best[0] * den:
                hits.append(f)
        for f in hits:
            groups[f].append(x)
    return list(groups.values())


def _generic_pull(cell, rank_of, d, out, pulled):
    # a point already pulled on this branch is the apex of the cell; pulling it again changes nothing
    if len(cell) == d + 1:
        out.append(tuple(cell))
        return
    candidates = [x for x in cell if x not in pulled]
    if not candidates:
        raise RuntimeError("pulling left a non-simplex cell with every point pulled")
    q = min(candidates, key=rank_of.__getitem__)
    facets = full_dim_facets(cell, d)
    for sub_cell in _pyramid_members(cell, q, facets):
        _generic_pull(tuple(sub_cell), rank_of, d, out, pulled | {q})


def pulling_triangulation(p: LatticePolytope, order=None) -> Triangulation:
    """Pull every lattice point of a full-dimensional polytope in the given order.

    ``order`` defaults to the lexicographic order of the lattice points.
    """
    if not p.is_full_dimensional:
        raise ValueError("pulling triangulation needs a full-dimensional polytope")
    pts = p.lattice_points
    order = tuple(tuple(x) for x in (order if order is not None else pts))
    if sorted(order) != list(pts):
        raise ValueError("order must be a permutation of the lattice points")
    rank_of = {x: i for i, x in enumerate(order)}
    index = {x: i for i, x in enumerate(pts)}
    cells = []
    _generic_pull(tuple(pts), rank_of, p.dim, cells, frozenset())
    simplices = sorted(tuple(sorted(index[x] for x in c)) for c in cells)
    return Triangulation(pts, tuple(simplices), order)


def simplex_volume(points, simplex) -> int:
    a = points[simplex[0]]
    return abs(det([sub(points[i], a) for i in simplex[1:]]))


def is_unimodular_triangulation(t: Triangulation) -> bool:
    return all(simplex_volume(t.points, s) == 1 for s in t.simplices)


def _faces(simplices):
    faces = set()
    for s in simplices:
        for r in range(1, len(s) + 1):
            faces.update(combinations(s, r))
    return faces


def non_face_witness(simplices):
    """A clique of the 1-skeleton that is not a face, or None if the complex is flag."""
    simplices = [tuple(sorted(s)) for s in simplices]
    faces = _faces(simplices)
    nbrs: dict[int, set[int]] = {}
    for a, b in (f for f in faces if len(f) == 2):
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    top = max((len(s) for s in simplices), default=0) + 1

    def grow(clique, cands):
        if len(clique) >= 3 and clique not in faces:
            return clique
        if len(clique) == top:
            return None
        for v in sorted(cands):
            if v > clique[-1]:
                hit = grow(clique + (v,), cands & nbrs[v])
                if hit:
                    return hit
        return None

    for v in sorted(nbrs):
        hit = grow((v,), nbrs[v])
        if hit:
            return hit
    return None


def is_flag_complex(simplices) -> bool:
    """True iff every minimal non-face has two elements."""
    return non_face_witness(simplices) is None


def is_flag(t: Triangulation) -> bool:
    return is_flag_complex(t.simplices)


def candidate_order(points, i: int, seed: int):
    """The i-th pulling order of the search: lexicographic first, then seeded shuffles."""
    order = list(points)
    if i > 0:
        random.Random(f"{seed}:{i}").shuffle(order)
    return tuple(order)


def _try(args):
    p_vertices, start, stop, seed = args
    p = LatticePolytope(p_vertices)
    for i in range(start, stop):
        t = pulling_triangulation(p, candidate_order(p.lattice_points, i, seed))
        if is_unimodular_triangulation(t) and is_flag(t):
            return i, t
    return None


def find_flag_unimodular_regular(p: LatticePolytope, budget: int = 100_000, seed: int = 0, jobs: int = 1):
    """Search pulling orders for a unimodular flag triangulation.

    Returns ``(triangulation, order)`` for the first order that works, or
    None if ``budget`` orders fail. The answer does not depend on ``jobs``.
    """
    chunk = 64
    if jobs <= 1:
        hit = _try((p.vertices, 0, budget, seed))
        return (hit[1], hit[1].order) if hit else None
    with ProcessPoolExecutor(jobs) as pool:
        for base in range(0, budget, chunk * jobs):
            args = [
                (p.vertices, s, min(s + chunk, budget), seed)
                for s in range(base, min(base + chunk * jobs, budget), chunk)
            ]
            hits = [h for h in pool.map(_try, args) if h]
            if hits:
                i, t = min(hits, key=lambda h: h[0])
                return t, t.order
    return None


def check_triangulation(p: LatticePolytope, t: Triangulation) -> list[str]:
    """Consistency problems of ``t`` as a triangulation of ``p`` (empty if none)."""
    problems = []
    vol = sum(simplex_volume(t.points, s) for s in t.simplices)
    if vol != normalized_volume(p):
        problems.append(f"volume {vol} != {normalized_volume(p)}")
    used = {i for s in t.simplices for i in s}
    if used != set(range(len(t.points))):
        problems.append("not every lattice point is used")
    skel = t.edges()
    for a, b in p.edges:
        pts = [i for i, x in enumerate(t.points) if _on_segment(x, p.vertices[a], p.vertices[b])]
        pts.sort(key=lambda i: t.points[i])
        for u, w in zip(pts, pts[1:]):
            if tuple(sorted((u, w))) not in skel:
                problems.append(f"edge {p.vertices[a]}-{p.vertices[b]} missing from the 1-skeleton")
                break
    return problems


def _on_segment(x, a, b):
    d, e = sub(b, a), sub(x, a)
    k = len(d)
    if any(d[i] * e[j] != d[j] * e[i] for i in range(k) for j in range(i + 1, k)):
        return False
    return 0 <= dot(d, e) <= dot(d, d)
