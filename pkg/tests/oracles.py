"""Independent reference implementations used to cross-check the
library.  Everything here is deliberately naive (exhaustive subset and
box scans, a self-contained Gaussian solver) and shares no algorithmic
code with the package, only its public data types."""

import math
from fractions import Fraction
from itertools import combinations, product

from nok import intersect, power


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def solve_square(matrix, rhs):
    """Solve a square rational system by Gauss-Jordan; None if singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def matrix_rank(rows):
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]),
                     None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col] / lead
                work[r] = [x - factor * y
                           for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def brute_force_vertices(halfspaces, nvars):
    """Vertices as basic feasible solutions: solve every nvars-subset of
    facet rows and keep the feasible solutions."""
    rows = [(list(h.normal), h.offset) for h in halfspaces]
    found = set()
    for subset in combinations(range(len(rows)), nvars):
        solution = solve_square([rows[i][0] for i in subset],
                                [rows[i][1] for i in subset])
        if solution is None:
            continue
        if all(dot(normal, solution) >= offset for normal, offset in rows):
            found.add(tuple(solution))
    return sorted(found)


def satisfies_all(halfspaces, point, dilate=1):
    return all(dot(h.normal, point) >= dilate * h.offset for h in halfspaces)


def dilate_box(body, k):
    """Per-coordinate ceiling of the k-dilated body's vertex coordinates:
    a box containing every componentwise-minimal lattice point."""
    return [math.ceil(k * max(v[j] for v in body.vertices))
            for j in range(body.nvars)]


def brute_force_minimal_points(halfspaces, box, dilate=1):
    """Componentwise-minimal lattice points of the dilated body, by an
    exhaustive scan of the integer box."""
    points = [p for p in product(*(range(b + 1) for b in box))
              if satisfies_all(halfspaces, p, dilate)]
    minimal = []
    for p in points:
        if not any(q != p and all(x <= y for x, y in zip(q, p))
                   for q in points):
            minimal.append(p)
    return sorted(minimal)


def symbolic_power_by_intersection(decomposition, k):
    """I^(k) as the literal intersection of the k*omega powers of the
    decomposition's components, entirely in the ideal lattice."""
    pieces = [power(comp.ideal(decomposition.nvars), k * comp.multiplicity)
              for comp in decomposition.components]
    return intersect(pieces)


def closure_member_naive(ideal, exponent, k, m_max=24):
    """Definitional integral-closure membership, truncated at power
    m_max: some m-th power of the monomial lies in I^(k*m).  One-sided:
    True is a certificate, False may just mean m_max was too small."""
    for m in range(1, m_max + 1):
        scaled = tuple(m * a for a in exponent)
        if power(ideal, k * m).contains_monomial(scaled):
            return True
    return False


def hilbert_basis_brute(body, bound):
    """Degree-bounded semigroup generators of the cone over `body`, by
    unrestricted decomposition search: (a, k) is a generator iff there
    is no split a = b + (a - b) with b any nonzero lattice point of
    j*body, 1 <= j < k, and a - b in (k - j)*body.  Nothing is assumed
    about where reducers live, unlike the library's accepted-basis
    reduction."""
    facets = body.facets
    elements = []
    for k in range(1, bound + 1):
        for a in brute_force_minimal_points(facets, dilate_box(body, k),
                                            dilate=k):
            reducible = False
            for j in range(1, k):
                for b in product(*(range(x + 1) for x in a)):
                    if not any(b) or not satisfies_all(facets, b, j):
                        continue
                    rest = tuple(x - y for x, y in zip(a, b))
                    if satisfies_all(facets, rest, k - j):
                        reducible = True
                        break
                if reducible:
                    break
            if not reducible:
                elements.append((a, k))
    return elements


def is_graded_family(member, max_total):
    """Check I_p * I_q inside I_(p+q) for all p + q <= max_total, one
    generator product at a time."""
    for p in range(1, max_total):
        for q in range(p, max_total - p + 1):
            target = member(p + q)
            for g in member(p).generators:
                for h in member(q).generators:
                    together = tuple(x + y for x, y in zip(g, h))
                    if not target.contains_monomial(together):
                        return False
    return True
