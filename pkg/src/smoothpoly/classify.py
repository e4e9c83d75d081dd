"""Classification of smooth lattice polytopes with few lattice points.

Candidate normal fans are generated by repeated blow-ups of seed fans. For a
fixed smooth fan with ray matrix A, every lattice polytope with that normal
fan is P(A, b) = {x : A x <= b} for an integer b in the open chamber, and its
edge lengths are integer linear functionals of b. Bounding the lattice points
on edges turns the admissible right-hand sides into a finite set.
"""

from __future__ import annotations

import heapq
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, count
from math import gcd

from .cones import Fan, cone_faces, fan_id, fan_is_complete, fan_is_smooth, fan_key, rays_cyclic_order
from .equivalence import CanonicalForm, canonical_form, dedup_classes
from .lattice import add, dot, primitive_vector, rank, rational_inverse, unimodular_inverse
from .polytope import LatticePolytope

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeedFanSet:
    fans: tuple[Fan, ...]
    names: tuple[str, ...]
    provenance: str = "builtin-2d"

    def __len__(self):
        return len(self.fans)

    def __iter__(self):
        return iter(self.fans)


def p2_fan() -> Fan:
    return Fan([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])


def hirzebruch_fan(a: int) -> Fan:
    return Fan([(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


def minimal_smooth_2fans(max_param: int) -> SeedFanSet:
    """The projective plane and the Hirzebruch fans F_a, 0 <= a <= max_param."""
    fans = [p2_fan()] + [hirzebruch_fan(a) for a in range(max_param + 1)]
    names = ["P2"] + [f"F{a}" for a in range(max_param + 1)]
    return SeedFanSet(tuple(fans), tuple(names), "builtin-2d")


def _face_indices(f: Fan, face):
    face = list(face)
    if face and isinstance(face[0], (tuple, list)):
        try:
            face = [f.rays.index(tuple(r)) for r in face]
        except ValueError:
            raise ValueError(f"{face} is not a face of the fan") from None
    return tuple(sorted(face))


def blow_up_fan(f: Fan, face) -> Fan:
    """Stellar subdivision at the sum of the generators of ``face``."""
    face = _face_indices(f, face)
    if len(face) < 2 or not any(set(face) <= set(c) for c in f.cones):
        raise ValueError(f"{face} is not a face of the fan with at least two rays")
    new = primitive_vector(
        [sum(f.rays[i][k] for i in face) for k in range(f.dim)]
    )
    if new in f.rays:
        raise ValueError("blow-up ray already present; fan is not smooth")
    w = len(f.rays)
    cones = []
    for c in f.cones:
        if set(face) <= set(c):
            for s in face:
                cones.append(tuple(sorted([i for i in c if i != s] + [w])))
        else:
            cones.append(c)
    return Fan(list(f.rays) + [new], cones)


def find_blow_down(f: Fan) -> int | None:
    """Index of a ray equal to the sum of its two cyclic neighbours, if any (2-dimensional fans)."""
    order = rays_cyclic_order(f)
    n = len(order)
    hits = []
    for k, i in enumerate(order):
        a, b = f.rays[order[k - 1]], f.rays[order[(k + 1) % n]]
        if add(a, b) == f.rays[i]:
            hits.append(i)
    return min(hits) if hits else None


def blow_down_fan(f: Fan, i: int) -> Fan:
    order = rays_cyclic_order(f)
    k = order.index(i)
    a, b = order[k - 1], order[(k + 1) % len(order)]
    keep = [j for j in range(len(f.rays)) if j != i]
    pos = {j: t for t, j in enumerate(keep)}
    cones = [tuple(pos[j] for j in c) for c in f.cones if i not in c]
    cones.append(tuple(sorted((pos[a], pos[b]))))
    return Fan([f.rays[j] for j in keep], cones)


class ChamberModel:
    """Vertex solutions and edge-length functionals of P(A, b) for a smooth complete fan.

    ``vertex_maps[s]`` is a d x n integer matrix with x_s(b) = vertex_maps[s] @ b.
    ``walls`` lists pairs of adjacent maximal cones (the edges of the polytope)
    and ``edge_functionals`` the matching integer functionals l_e(b).
    """

    def __init__(self, fan: Fan):
        if not fan_is_smooth(fan):
            raise ValueError("chamber models are only built for smooth fans")
        self.fan = fan
        n, d = len(fan.rays), fan.dim
        self.n, self.d = n, d
        maps = []
        for c in fan.cones:
            inv = unimodular_inverse([fan.rays[i] for i in c])
            m = [[0] * n for _ in range(d)]
            for j in range(d):
                for t, i in enumerate(c):
                    m[j][i] = inv[j][t]
            maps.append(tuple(tuple(r) for r in m))
        self.vertex_maps = tuple(maps)
        walls, funcs = [], []
        for s in range(len(fan.cones)):
            for t in range(s + 1, len(fan.cones)):
                shared = set(fan.cones[s]) & set(fan.cones[t])
                if len(shared) != d - 1:
                    continue
                (r,) = set(fan.cones[s]) - shared
                v = fan.rays[r]
                coef = [-sum(v[j] * maps[t][j][i] for j in range(d)) for i in range(n)]
                coef[r] += 1
                walls.append((s, t))
                funcs.append(tuple(coef))
        self.walls = tuple(walls)
        self.edge_functionals = tuple(funcs)

        # translation gauge: b vanishes on the rays of the first maximal cone
        self.pinned = fan.cones[0]
        self.free = tuple(i for i in range(n) if i not in self.pinned)
        rows, chosen = [], []
        for e, l in enumerate(funcs):
            cand = rows + [[l[i] for i in self.free]]
            if rank(cand) > len(rows):
                rows, chosen = cand, chosen + [e]
            if len(rows) == len(self.free):
                break
        if len(rows) != len(self.free):
            raise ValueError("edge functionals do not determine the right-hand side")
        self.basis_walls = tuple(chosen)
        inv = rational_inverse(rows)
        den = 1
        for row in inv:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        self._den = den
        self._num = tuple(tuple(int(x * den) for x in row) for row in inv)

    @property
    def num_vertices(self):
        return len(self.fan.cones)

    def vertices(self, b):
        return [tuple(dot(row, b) for row in m) for m in self.vertex_maps]

    def edge_lengths(self, b):
        return [dot(l, b) for l in self.edge_functionals]

    def polytope(self, b) -> LatticePolytope:
        return LatticePolytope(self.vertices(b))

    def rhs_from_lengths(self, lengths):
        """The gauge-fixed b whose basis-wall lengths are ``lengths``, or None if not integral."""
        b = [0] * self.n
        for i, row in zip(self.free, self._num):
            q, r = divmod(sum(c * x for c, x in zip(row, lengths)), self._den)
            if r:
                return None
            b[i] = q
        return tuple(b)

    def count_points(self, b, cap=None):
        """Lattice points of P(A, b); stops early once ``cap`` is exceeded."""
        verts = self.vertices(b)
        rays = self.fan.rays
        d = self.d
        lo = [min(v[i] for v in verts) for i in range(d)]
        hi = [max(v[i] for v in verts) for i in range(d)]
        total = 0

        def rec(prefix):
            nonlocal total
            i = len(prefix)
            if i == d - 1:
                a, z = lo[i], hi[i]
                for r, c in zip(rays, b):
                    rest = c - dot(r[:i], prefix)
                    if r[i] > 0:
                        z = min(z, rest // r[i])
                    elif r[i] < 0:
                        a = max(a, -(rest // -r[i]))
                    elif rest < 0:
                        return
                if z >= a:
                    total += z - a + 1
                return
            for t in range(lo[i], hi[i] + 1):
                rec(prefix + (t,))
                if cap is not None and total > cap:
                    return

        rec(())
        return total


def chamber_model(f: Fan) -> ChamberModel:
    return ChamberModel(f)


def _compositions(k, lo_sum, hi_sum):
    """Tuples of k positive integers with lo_sum <= sum <= hi_sum."""
    def rec(prefix, left, acc):
        if left == 1:
            for x in range(max(1, lo_sum - acc), hi_sum - acc + 1):
                yield prefix + (x,)
            return
        for x in range(1, hi_sum - acc - left + 2):
            yield from rec(prefix + (x,), left - 1, acc + x)

    yield from rec((), k, 0)


def _feasible_rhs(cm: ChamberModel, lo_sum, hi_sum):
    for t in _compositions(len(cm.free), lo_sum, hi_sum):
        b = cm.rhs_from_lengths(t)
        if b is None:
            continue
        ls = cm.edge_lengths(b)
        if min(ls) < 1:
            continue
        yield b, ls


def enumerate_rhs(cm: ChamberModel, max_points: int, stats: dict | None = None):
    """All polytopes with the fan of ``cm`` and at most ``max_points`` lattice points.

    Returns ``(b, polytope)`` pairs sorted by b.
    """
    v = cm.num_vertices
    if max_points < v:
        return []
    k = len(cm.free)
    out = []
    for b, ls in _feasible_rhs(cm, k, max_points - v + k):
        if stats is not None:
            stats["rhs_tested"] = stats.get("rhs_tested", 0) + 1
        if sum(ls) - len(ls) + v > max_points:
            continue
        if cm.count_points(b, cap=max_points) <= max_points:
            out.append((b, cm.polytope(b)))
    out.sort(key=lambda bp: bp[0])
    return out


def min_lattice_points(cm: ChamberModel, max_sum: int = 500) -> int:
    """Exact minimum number of lattice points over all polytopes with this normal fan."""
    k = len(cm.free)
    for s in range(k, max_sum + 1):
        first = next(_feasible_rhs(cm, s, s), None)
        if first is not None:
            bound = cm.count_points(first[0])
            return min(len(p.lattice_points) for _, p in enumerate_rhs(cm, bound))
    raise ValueError("no ample right-hand side found; fan may not be polytopal")


def boundary_lower_bound(f: Fan) -> Fraction:
    """Rational lower bound for the boundary lattice points of any polygon with normal fan ``f``.

    Edge lengths of such a polygon are exactly the positive integer solutions
    of sum(l_i * u_i) = 0, where u_i is ray i turned by a right angle. The
    linear relaxation of minimizing sum(l_i) has its optimum at a vertex
    where all but two lengths equal 1, so it is solved pair by pair.
    """
    if f.dim != 2:
        raise ValueError("boundary bound is for 2-dimensional fans")
    u = [(-r[1], r[0]) for r in f.rays]
    n = len(u)
    sx, sy = sum(x for x, _ in u), sum(y for _, y in u)
    best = None
    for a, b in combinations(range(n), 2):
        (ax, ay), (bx, by) = u[a], u[b]
        d = ax * by - ay * bx
        if d == 0:
            continue
        # l_a u_a + l_b u_b = -(sum of the other u_i)
        rx, ry = -(sx - ax - bx), -(sy - ay - by)
        la = Fraction(rx * by - ry * bx, d)
        lb = Fraction(ax * ry - ay * rx, d)
        if la < 1 or lb < 1:
            continue
        val = n - 2 + la + lb
        if best is None or val < best:
            best = val
    return best


def boundary_budget(max_points: int, rays: int, blowable: int = 1) -> int | None:
    """Most boundary points an ancestor with ``rays`` rays can need, or None if no descendant fits.

    Blowing down an edge of lattice length t adds exactly t boundary points.
    A smooth polygon with n >= 5 vertices has at least ``blowable`` edges that
    can be blown down; taking the shortest, t <= (B - n + blowable) / blowable
    where B is its boundary count. Iterating from ``max_points`` vertices down
    bounds every polygon on a blow-down chain of a polygon with at most
    ``max_points`` lattice points.

    One is the only safe value: F_a blown up twice at the same corner has a
    single edge that can be blown down.
    """
    if rays > max_points:
        return None
    bound = max_points
    for n in range(max_points, max(rays, 4), -1):
        bound += max(0, (bound - n + blowable) // blowable)
    return bound


def seed_param_bound(max_points: int) -> int:
    """Largest a such that F_a can be an ancestor of a polygon with at most ``max_points`` points.

    Every polygon with normal fan F_a has at least a + 4 boundary points.
    """
    cap = boundary_budget(max_points, 4)
    return max(0, cap - 4) if cap is not None else 0


@dataclass(frozen=True)
class Budget:
    max_fans: int = 100_000
    jobs: int = 1


@dataclass
class ClassEntry:
    form: CanonicalForm
    polytope: LatticePolytope
    source_fan: str

    @property
    def num_vertices(self):
        return len(self.polytope.vertices)

    @property
    def num_lattice_points(self):
        return len(self.polytope.lattice_points)


@dataclass
class ClassificationResult:
    dim: int
    max_points: int
    classes: list[ClassEntry]
    stats: dict = field(default_factory=dict)
    complete: bool = True
    explored: list[Fan] = field(default_factory=list)

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.classes:
            hist[c.num_vertices] = hist.get(c.num_vertices, 0) + 1
        return dict(sorted(hist.items()))


def expand_fan(fan: Fan, max_points: int, found=()) -> bool:
    """Whether blow-ups of ``fan`` can still carry polytopes with at most ``max_points`` points.

    Polygons use the boundary budget along blow-down chains. In dimension 3
    a fan is expanded while it carries such a polytope itself; that rule is a
    heuristic and is not known to be sound.
    """
    if fan.dim == 2:
        cap = boundary_budget(max_points, len(fan.rays))
        return cap is not None and (bool(found) or boundary_lower_bound(fan) <= cap)
    return bool(found)


def _evaluate(args):
    fan, max_points = args
    stats: dict = {}
    found = enumerate_rhs(chamber_model(fan), max_points, stats)
    return [p.vertices for _, p in found], stats.get("rhs_tested", 0), expand_fan(fan, max_points, found)


def _children(fan: Fan):
    out = []
    for size in range(2, fan.dim + 1):
        for face in cone_faces(fan, size):
            out.append(blow_up_fan(fan, face))
    return out


def classify(dim: int, max_points: int, seeds, budget: Budget | None = None) -> ClassificationResult:
    """Blow-up closure of ``seeds`` with pruning, then right-hand-side enumeration and dedup.

    Fans rejected by ``expand_fan`` are not blown up further. The result is flagged incomplete if the fan budget
    runs out before the frontier is empty.
    """
    budget = budget or Budget()
    jobs = budget.jobs if budget.jobs and budget.jobs > 0 else 1
    heap = []
    seen = set()
    tick = count()
    for f in seeds:
        if f.dim != dim:
            raise ValueError(f"seed fan of dimension {f.dim} in a dimension-{dim} run")
        if not (fan_is_complete(f) and fan_is_smooth(f)):
            raise ValueError(f"seed {f} is not a complete smooth fan")
        key = fan_key(f)
        if key not in seen:
            seen.add(key)
            heapq.heappush(heap, (len(f.rays), key, next(tick), f))

    stats = {"fans_explored": 0, "rhs_tested": 0, "pruned": 0}
    found: list[tuple[tuple, str]] = []
    explored: list[Fan] = []
    complete = True
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while heap:
            nrays = heap[0][0]
            layer = []
            while heap and heap[0][0] == nrays:
                layer.append(heapq.heappop(heap)[3])
            room = budget.max_fans - stats["fans_explored"]
            if room <= 0:
                complete = False
                break
            if len(layer) > room:
                layer = layer[:room]
                complete = False
            args = [(f, max_points) for f in layer]
            results = list(pool.map(_evaluate, args)) if pool else [_evaluate(a) for a in args]
            for f, (verts, tested, expand) in zip(layer, results):
                stats["fans_explored"] += 1
                stats["rhs_tested"] += tested
                fid = fan_id(f)
                found.extend((v, fid) for v in verts)
                if not expand:
                    stats["pruned"] += 1
                    continue
                explored.append(f)
                for child in _children(f):
                    key = fan_key(child)
                    if key not in seen:
                        seen.add(key)
                        heapq.heappush(heap, (len(child.rays), key, next(tick), child))
            log.info("rays=%d layer=%d explored=%d found=%d", nrays, len(layer), stats["fans_explored"], len(found))
            if not complete:
                break
    finally:
        if pool:
            pool.shutdown()

    polys = []
    source_of = {}
    for verts, fid in found:
        p = LatticePolytope(verts)
        polys.append(p)
        source_of.setdefault(canonical_form(p).key, fid)
    classes = [ClassEntry(form, rep, source_of[form.key]) for form, rep in dedup_classes(polys)]
    stats["classes"] = len(classes)
    return ClassificationResult(dim, max_points, classes, stats, complete, explored)


def default_jobs() -> int:
    try:
        return int(os.environ.get("SMOOTHPOLY_JOBS", "1"))
    except ValueError:
        return 1
