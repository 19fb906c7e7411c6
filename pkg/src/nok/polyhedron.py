"""Exact rational polyhedra whose recession cone is the nonnegative orthant.

Every polyhedron handled here is an "up-set": a full-dimensional subset of
the orthant closed under adding nonnegative vectors.  Such a set has a
unique irredundant half-space description with nonnegative primitive
integer normals, a finite vertex set, and recession rays exactly the
standard basis vectors.  Both representations are stored, canonically
ordered, so that structural equality is semantic equality.

The single geometric engine is a double-description pass over a pointed
cone.  Vertex enumeration runs it on the homogenization of the constraint
system; facet enumeration runs it on the dual cone spanned by the
generators.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (BoundTooSmall, DimensionMismatch, EmptyInput, EmptyList,
                     InfeasibleSystem, MissingOrthantConstraints, NoVertices,
                     NokError, NonPositiveScale, PointNotInPolyhedron,
                     VertexBudgetExceeded)
from .linalg import rank, solve_square

Point = tuple[Fraction, ...]

DEFAULT_VERTEX_BUDGET = 10_000


def _vertex_budget() -> int:
    raw = os.environ.get("NOK_MAX_VERTICES", "")
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_VERTEX_BUDGET
    return value if value > 0 else DEFAULT_VERTEX_BUDGET


def primitive_vector(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers."""
    fracs = [Fraction(x) for x in vec]
    scale = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * scale) for f in fracs]
    g = math.gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class HalfSpace:
    """Closed half-space {x : <normal, x> >= offset} in primitive integer form."""

    normal: tuple[int, ...]
    offset: int

    @classmethod
    def from_rational(cls, normal: Sequence, offset) -> "HalfSpace":
        prim = primitive_vector(list(normal) + [offset])
        return cls(prim[:-1], prim[-1])

    def slack(self, point: Sequence) -> Fraction:
        return sum(a * x for a, x in zip(self.normal, point)) - self.offset

    def satisfied(self, point: Sequence) -> bool:
        return self.slack(point) >= 0


@dataclass(frozen=True)
class FaceDescriptor:
    """A face of a polyhedron, recorded by its tight facets and vertices."""

    tight_facets: tuple[int, ...]
    vertex_set: tuple[Point, ...]
    dim: int
    compact: bool


@dataclass(frozen=True)
class RationalPolyhedron:
    """Canonical two-sided description of an up-set polyhedron."""

    nvars: int
    facets: tuple[HalfSpace, ...]
    vertices: tuple[Point, ...]
    rays: tuple[tuple[int, ...], ...]
    dim: int


def _bits(mask: int):
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def _dot(a: Sequence[int], b: Sequence) -> int:
    return sum(x * y for x, y in zip(a, b))


def cone_extreme_rays(rows: Sequence[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : <r, x> >= 0 for each row r}.

    Double description: start from a simplicial subcone cut out by `dim`
    independent rows, then insert the remaining constraints one at a time,
    keeping extreme rays only.  Adjacency of two rays is decided by the
    rank of the constraints tight at both.  Raises when the constraint
    rows do not have full rank (the cone would contain a line) or when the
    intermediate ray count exceeds the vertex budget.
    """
    budget = _vertex_budget()
    unique = sorted({tuple(r) for r in rows if any(r)},
                    key=lambda r: (sum(1 for x in r if x), r))
    basis: list[tuple[int, ...]] = []
    for row in unique:
        if len(basis) == dim:
            break
        if rank(basis + [row]) > len(basis):
            basis.append(row)
    if len(basis) < dim:
        raise NokError("constraint rows do not have full rank")
    processed = basis + [r for r in unique if r not in basis]

    rays: list[tuple[tuple[int, ...], int]] = []
    for j in range(dim):
        unit = [Fraction(int(i == j)) for i in range(dim)]
        column = solve_square([list(r) for r in basis], unit)
        if column is None:
            raise NokError("initial basis unexpectedly singular")
        vec = primitive_vector(column)
        tight = 0
        for i in range(dim):
            if _dot(processed[i], vec) == 0:
                tight |= 1 << i
        rays.append((vec, tight))

    for t in range(dim, len(processed)):
        row = processed[t]
        evals = [(_dot(row, vec), vec, tight) for vec, tight in rays]
        keep = [(vec, tight | (1 << t) if e == 0 else tight)
                for e, vec, tight in evals if e >= 0]
        plus = [(e, vec, tight) for e, vec, tight in evals if e > 0]
        minus = [(e, vec, tight) for e, vec, tight in evals if e < 0]
        fresh = []
        for ep, vp, tp in plus:
            for em, vm, tm in minus:
                common = tp & tm
                if common.bit_count() < dim - 2:
                    continue
                tight_rows = [processed[i] for i in _bits(common)]
                if rank(tight_rows, limit=dim - 1) != dim - 2:
                    continue
                combo = primitive_vector(
                    [ep * x - em * y for x, y in zip(vm, vp)])
                tight = 0
                for i in range(t + 1):
                    if _dot(processed[i], combo) == 0:
                        tight |= 1 << i
                fresh.append((combo, tight))
        rays = keep + fresh
        if len(rays) > budget:
            raise VertexBudgetExceeded(
                f"ray count {len(rays)} exceeds budget {budget}; "
                "raise NOK_MAX_VERTICES to continue")

    result = sorted({vec for vec, _ in rays})
    for vec in result:
        if any(_dot(row, vec) < 0 for row in processed):
            raise NokError("internal error: ray violates a constraint")
    return result


def _as_halfspace(item, nvars: int) -> HalfSpace:
    if isinstance(item, HalfSpace):
        hs = item
    else:
        normal, offset = item
        hs = HalfSpace.from_rational(normal, offset)
    if len(hs.normal) != nvars:
        raise DimensionMismatch(
            f"half-space normal {hs.normal} has wrong length")
    return hs


def _facets_from_generators(nvars: int, vertices: Sequence[Point],
                            rays: Sequence[tuple[int, ...]]) -> tuple[HalfSpace, ...]:
    """Irredundant facets of conv(vertices) + cone(rays), via the dual cone."""
    rows = [primitive_vector(list(v) + [1]) for v in vertices]
    rows += [tuple(r) + (0,) for r in rays]
    facets = []
    for w in cone_extreme_rays(rows, nvars + 1):
        if any(w[:nvars]):
            facets.append(HalfSpace(w[:nvars], -w[nvars]))
    return tuple(sorted(facets, key=lambda h: (h.normal, h.offset)))


def _finalize(nvars: int, vertices: Iterable[Point],
              rays: Iterable[tuple[int, ...]],
              facets: tuple[HalfSpace, ...]) -> RationalPolyhedron:
    verts = tuple(sorted(tuple(Fraction(c) for c in v) for v in vertices))
    ray_list = tuple(sorted(tuple(r) for r in rays))
    base = verts[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in verts[1:]]
    dim = rank(diffs + [list(r) for r in ray_list])
    return RationalPolyhedron(nvars, facets, verts, ray_list, dim)


def from_halfspaces(halfspaces: Iterable, nvars: int) -> RationalPolyhedron:
    """Polyhedron cut out by half-spaces; must be a nonempty up-set.

    Raises MissingOrthantConstraints when the system allows a recession
    direction outside the orthant (negative normal entries, an
    unconstrained coordinate, or a computed vertex or ray with a negative
    coordinate), and InfeasibleSystem when the system is contradictory.
    """
    if nvars < 1:
        raise DimensionMismatch("need at least one variable")
    canonical = []
    for item in halfspaces:
        hs = _as_halfspace(item, nvars)
        if any(a < 0 for a in hs.normal):
            raise MissingOrthantConstraints(
                f"half-space {hs.normal} >= {hs.offset} has a negative "
                "normal entry; up-set facets have nonnegative normals")
        if not any(hs.normal):
            if hs.offset > 0:
                raise InfeasibleSystem(f"constraint 0 >= {hs.offset}")
            continue
        canonical.append(hs)
    canonical = sorted(set(canonical), key=lambda h: (h.normal, h.offset))
    if not canonical:
        raise EmptyInput("no nontrivial half-spaces given")

    homog = [hs.normal + (-hs.offset,) for hs in canonical]
    t_row = (0,) * nvars + (1,)
    if rank(homog + [t_row]) < nvars + 1:
        raise MissingOrthantConstraints(
            "some coordinate direction is unconstrained; add the orthant "
            "facets x_i >= 0")
    rays = cone_extreme_rays(homog + [t_row], nvars + 1)

    verts, rec = [], []
    for r in rays:
        if r[nvars] > 0:
            verts.append(tuple(Fraction(x, r[nvars]) for x in r[:nvars]))
        else:
            rec.append(r[:nvars])
    if not verts:
        raise InfeasibleSystem("system has no solutions")
    if any(c < 0 for v in verts for c in v) or any(x < 0 for r in rec for x in r):
        raise MissingOrthantConstraints(
            "system has recession directions outside the orthant")

    facets = _facets_from_generators(nvars, verts, rec)
    return _finalize(nvars, verts, rec, facets)


def hull_up_set(points: Iterable[Sequence], nvars: int) -> RationalPolyhedron:
    """conv(points) + nonnegative orthant, for nonnegative rational points."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise EmptyInput("no points given")
    for p in pts:
        if len(p) != nvars:
            raise DimensionMismatch(f"point {p} has wrong length")
        if any(c < 0 for c in p):
            raise MissingOrthantConstraints(
                f"point {p} lies outside the nonnegative orthant")
    unit_rays = [tuple(int(i == j) for j in range(nvars))
                 for i in range(nvars)]
    facets = _facets_from_generators(nvars, pts, unit_rays)
    verts = []
    for p in pts:
        tight = [list(h.normal) for h in facets if h.slack(p) == 0]
        if rank(tight, limit=nvars) == nvars:
            verts.append(p)
    return _finalize(nvars, verts, unit_rays, facets)


def contains(poly: RationalPolyhedron, point: Sequence) -> bool:
    if len(point) != poly.nvars:
        raise DimensionMismatch(f"point {tuple(point)} has wrong length")
    pt = [Fraction(c) for c in point]
    return all(h.satisfied(pt) for h in poly.facets)


def equal(lhs: RationalPolyhedron, rhs: RationalPolyhedron) -> bool:
    if lhs.nvars != rhs.nvars:
        raise DimensionMismatch("variable counts differ")
    # canonical irredundant facets are unique for full-dimensional sets
    return lhs.facets == rhs.facets


def scale(poly: RationalPolyhedron, factor) -> RationalPolyhedron:
    """Dilation t*P for a positive rational t."""
    t = Fraction(factor)
    if t <= 0:
        raise NonPositiveScale(f"scale factor must be positive, got {factor}")
    facets = tuple(sorted((HalfSpace.from_rational(h.normal, h.offset * t)
                           for h in poly.facets),
                          key=lambda h: (h.normal, h.offset)))
    verts = tuple(sorted(tuple(c * t for c in v) for v in poly.vertices))
    return RationalPolyhedron(poly.nvars, facets, verts, poly.rays, poly.dim)


def intersect_polyhedra(polys: Sequence[RationalPolyhedron]) -> RationalPolyhedron:
    if not polys:
        raise EmptyList("intersection of an empty list")
    nvars = polys[0].nvars
    if any(p.nvars != nvars for p in polys):
        raise DimensionMismatch("variable counts differ")
    combined = [h for p in polys for h in p.facets]
    return from_halfspaces(combined, nvars)


def faces(poly: RationalPolyhedron) -> list[FaceDescriptor]:
    """All faces meeting the vertex set: closures of vertex incidence masks.

    A face is compact exactly when every coordinate has a tight facet with
    a positive normal entry there (no recession ray survives).
    """
    n = poly.nvars
    vertex_masks = []
    for v in poly.vertices:
        mask = 0
        for i, h in enumerate(poly.facets):
            if h.slack(v) == 0:
                mask |= 1 << i
        vertex_masks.append(mask)
    closed = set(vertex_masks)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in closed.copy():
                c = a & b
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh

    out = []
    for mask in sorted(closed):
        members = [v for v, mv in zip(poly.vertices, vertex_masks)
                   if mv & mask == mask]
        if not members:
            continue
        tight = tuple(_bits(mask))
        normals = [poly.facets[i].normal for i in tight]
        rays_in = [r for r in poly.rays
                   if all(_dot(a, r) == 0 for a in normals)]
        base = members[0]
        diffs = [[a - b for a, b in zip(v, base)] for v in members[1:]]
        dim = rank(diffs + [list(r) for r in rays_in])
        compact = all(any(a[j] > 0 for a in normals) for j in range(n))
        assert compact == (not rays_in)
        out.append(FaceDescriptor(tight, tuple(sorted(members)), dim, compact))
    out.sort(key=lambda f: (f.dim, f.tight_facets))
    return out


def mdc(poly: RationalPolyhedron) -> int:
    """Maximum dimension of a compact face (every vertex is one, so >= 0)."""
    if not poly.vertices:
        raise NoVertices("polyhedron has no vertices")
    return max(f.dim for f in faces(poly) if f.compact)


def decompose_point(poly: RationalPolyhedron, point: Sequence) -> tuple[Point, Point]:
    """Split a point of P as u + r with u in a compact face and r >= 0.

    Walks down coordinate directions that are free on the current minimal
    face; each step makes a new facet tight, so it terminates.
    """
    x = tuple(Fraction(c) for c in point)
    if not contains(poly, x):
        raise PointNotInPolyhedron(f"{tuple(point)} is not in the polyhedron")
    n = poly.nvars
    u = x
    while True:
        tight = [h for h in poly.facets if h.slack(u) == 0]
        free = next((j for j in range(n)
                     if all(h.normal[j] == 0 for h in tight)), None)
        if free is None:
            break
        steps = [Fraction(h.slack(u), h.normal[free])
                 for h in poly.facets if h.normal[free] > 0]
        lam = min(steps)
        u = tuple(c - lam if j == free else c for j, c in enumerate(u))
    remainder = tuple(a - b for a, b in zip(x, u))
    return u, remainder


def minimal_lattice_points(poly: RationalPolyhedron,
                           box_bound: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Componentwise-minimal integer points of an up-set polyhedron.

    Every minimal point lies in the box bounded by the per-coordinate
    ceilings of the vertex coordinates, which is the default search box; a
    user-supplied box must dominate it.  Depth-first search with two
    prunes: branches whose best possible completion misses a facet are cut,
    and values that stay feasible after decrementing the current
    coordinate are skipped as non-minimal.
    """
    if not poly.vertices:
        raise NoVertices("polyhedron has no vertices")
    n = poly.nvars
    default = tuple(max(math.ceil(v[j]) for v in poly.vertices)
                    for j in range(n))
    if box_bound is None:
        box = default
    else:
        box = tuple(int(b) for b in box_bound)
        if len(box) != n:
            raise DimensionMismatch("box bound has wrong length")
        low = [j for j in range(n) if box[j] < default[j]]
        if low:
            raise BoundTooSmall(
                f"box bound {box} is below the vertex ceiling {default} "
                f"in coordinates {low}")

    rows = [(h.normal, h.offset) for h in poly.facets if h.offset > 0]
    if not rows:
        return [(0,) * n]
    suffix = []
    for normal, _ in rows:
        acc = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            acc[j] = acc[j + 1] + normal[j] * box[j]
        suffix.append(acc)
    # per-depth row views: rows the current coordinate feeds (pos) and the
    # rest, with best-possible-completion thresholds baked in
    pos = [[(i, normal[j], b, suffix[i][j + 1])
            for i, (normal, b) in enumerate(rows) if normal[j] > 0]
           for j in range(n)]
    zero = [[(i, b - suffix[i][j + 1])
             for i, (normal, b) in enumerate(rows) if normal[j] == 0]
            for j in range(n)]
    leafpos = [[(i, normal[j], b)
                for i, (normal, b) in enumerate(rows) if normal[j] > 0]
               for j in range(n)]

    found: list[tuple[int, ...]] = []
    prefix = [0] * n

    def search(j: int, dots: list[int]):
        if j == n:
            for l in range(n):
                if prefix[l]:
                    for i, a, b in leafpos[l]:
                        if dots[i] - a < b:
                            break
                    else:
                        return
            found.append(tuple(prefix))
            return
        for i, threshold in zero[j]:
            if dots[i] < threshold:
                return
        start = 0
        bj = box[j]
        pj = pos[j]
        for i, a, b, rest in pj:
            need = b - dots[i] - rest
            if need > 0:
                q = -(-need // a)
                if q > start:
                    start = q
        if start > bj:
            return
        cur = list(dots)
        if start:
            for i, a, _, _ in pj:
                cur[i] += a * start
        v = start
        while v <= bj:
            if v:
                for i, a, b, _ in pj:
                    if cur[i] - a < b:
                        break
                else:
                    break
            prefix[j] = v
            search(j + 1, cur)
            v += 1
            if v <= bj:
                for i, a, _, _ in pj:
                    cur[i] += a
        prefix[j] = 0

    search(0, [0] * len(rows))
    return sorted(found)
