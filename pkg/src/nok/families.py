"""Graded families of monomial ideals: member ideals, limiting bodies, and
the polyhedral stabilization test that certifies a Noetherian Rees algebra.

Four families are representable: ordinary powers, symbolic powers,
intersections of powers of several ideals, and ceiling powers
I_k = base^ceil(alpha*k + beta).  Each has a closed-form limiting body, so
the union over k of (1/k)NP(I_k) never has to be approximated.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import polyhedron as poly
from .bodies import (ClassifiedIdeal, integral_closure, newton_polyhedron,
                     symbolic_polyhedron, symbolic_power)
from .errors import (DimensionMismatch, EmptyList, NokError,
                     NonPositiveExponent, NotProvenNoetherian,
                     UnsupportedIdealClass)
from .ideal import MonomialIdeal, intersect, multiply, power
from .polyhedron import Point, RationalPolyhedron

# ceiling-power scale search: exact whenever alpha's denominator fits
CEILING_PREFIX_CAP = 10_000


@dataclass(frozen=True)
class PowerFamily:
    """I_k = base^k."""

    base: MonomialIdeal


@dataclass(frozen=True)
class SymbolicFamily:
    """I_k = base^(k), so the base must support a symbolic polyhedron."""

    base: ClassifiedIdeal

    def __post_init__(self):
        if not self.base.supports_sp():
            raise UnsupportedIdealClass(
                "symbolic family needs a squarefree, linear-power, or "
                "m-primary base ideal")


@dataclass(frozen=True)
class IntersectionFamily:
    """I_k = intersection of J_i^k over the component ideals J_i."""

    components: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if not self.components:
            raise EmptyList("intersection family needs at least one ideal")
        if len({j.nvars for j in self.components}) > 1:
            raise DimensionMismatch("component variable counts differ")


@dataclass(frozen=True)
class CeilingPowerFamily:
    """I_k = base^ceil(alpha*k + beta) with alpha > 0 and ceil(alpha+beta) >= 1."""

    base: MonomialIdeal
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0:
            raise NonPositiveExponent(
                f"ceiling family needs alpha > 0, got {self.alpha}")
        if math.ceil(self.alpha + self.beta) < 1:
            raise NonPositiveExponent(
                "ceiling family needs ceil(alpha + beta) >= 1 so that I_1 "
                "is a genuine power")

    def exponent(self, k: int) -> int:
        return math.ceil(self.alpha * k + self.beta)


FamilySpec = Union[PowerFamily, SymbolicFamily, IntersectionFamily,
                   CeilingPowerFamily]


@dataclass(frozen=True)
class StabilizationWitness:
    """Evidence that the body was not attained: a vertex of the limiting
    body outside (1/k)NP(I_k) at the largest tested index."""

    c_tested: int
    k: int
    vertex: Point


@dataclass(frozen=True)
class StabilizationReport:
    stabilized: bool
    c: int | None = None
    witness: StabilizationWitness | None = None


def member_ideal(family: FamilySpec, k: int) -> MonomialIdeal:
    """The k-th ideal of the family, k >= 1."""
    if not isinstance(k, int) or k < 1:
        raise NonPositiveExponent(f"family index must be >= 1, got {k}")
    if isinstance(family, PowerFamily):
        return power(family.base, k)
    if isinstance(family, SymbolicFamily):
        return symbolic_power(family.base, k)
    if isinstance(family, IntersectionFamily):
        return intersect([power(j, k) for j in family.components])
    if isinstance(family, CeilingPowerFamily):
        return power(family.base, family.exponent(k))
    raise NokError(f"unknown family variant {type(family).__name__}")


def ceiling_scale(family: CeilingPowerFamily) -> Fraction:
    """The scale s with limiting body s*NP(base): the infimum of
    ceil(alpha*k + beta)/k.

    For beta >= 0 the infimum is alpha.  For beta < 0 any value below
    alpha is attained at some k <= denominator(alpha), so the minimum of
    the finite prefix (capped, exact rational arithmetic) settles it.
    """
    if family.beta >= 0:
        return family.alpha
    cap = max(family.alpha.denominator, 1)
    if cap > CEILING_PREFIX_CAP:
        cap = CEILING_PREFIX_CAP
    prefix = min(Fraction(family.exponent(k), k) for k in range(1, cap + 1))
    return min(family.alpha, prefix)


def newton_okounkov_body(family: FamilySpec) -> RationalPolyhedron:
    """The limiting body: closure of the union of (1/k)NP(I_k), by the
    closed form of each variant."""
    if isinstance(family, PowerFamily):
        return newton_polyhedron(family.base)
    if isinstance(family, SymbolicFamily):
        return symbolic_polyhedron(family.base)
    if isinstance(family, IntersectionFamily):
        return poly.intersect_polyhedra(
            [newton_polyhedron(j) for j in family.components])
    if isinstance(family, CeilingPowerFamily):
        return poly.scale(newton_polyhedron(family.base),
                          ceiling_scale(family))
    raise NokError(f"unknown family variant {type(family).__name__}")


def _attains_body(family: FamilySpec, body: RationalPolyhedron, c: int) -> bool:
    scaled = poly.scale(newton_polyhedron(member_ideal(family, c)),
                        Fraction(1, c))
    return poly.equal(scaled, body)


def stabilization_check(family: FamilySpec, c_max: int,
                        jobs: int = 1) -> StabilizationReport:
    """Search for the smallest c <= c_max with (1/c)NP(I_c) equal to the
    limiting body.

    Success certifies that the Rees algebra of the family is Noetherian.
    Failure only reports that no tested c works, with a witness vertex of
    the body that (1/c_max)NP(I_{c_max}) misses; it is not a proof of
    non-Noetherianity.
    """
    if c_max < 1:
        raise NonPositiveExponent(f"c_max must be >= 1, got {c_max}")
    body = newton_okounkov_body(family)
    candidates = range(1, c_max + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            hits = list(pool.map(lambda c: _attains_body(family, body, c),
                                 candidates))
        found = next((c for c, hit in zip(candidates, hits) if hit), None)
    else:
        found = next((c for c in candidates
                      if _attains_body(family, body, c)), None)
    if found is not None:
        return StabilizationReport(True, found)
    scaled = poly.scale(newton_polyhedron(member_ideal(family, c_max)),
                        Fraction(1, c_max))
    missing = [v for v in body.vertices if not poly.contains(scaled, v)]
    witness = StabilizationWitness(c_max, c_max, max(missing))
    return StabilizationReport(False, None, witness)


def family_analytic_spread(family: FamilySpec, c_max: int,
                           jobs: int = 1) -> int:
    """mdc of the limiting body plus one; valid once stabilization is
    certified, refused otherwise."""
    report = stabilization_check(family, c_max, jobs)
    if not report.stabilized:
        raise NotProvenNoetherian(
            f"no c <= {c_max} attains the limiting body; the analytic "
            "spread formula requires a Noetherian Rees algebra")
    return poly.mdc(newton_okounkov_body(family)) + 1


def closure_family_body_equality(family: FamilySpec, k_max: int = 4) -> bool:
    """Check that the limiting body is blind to integral closure: the
    Newton polyhedra of I_k and of its closure coincide for k <= k_max."""
    for k in range(1, k_max + 1):
        member = member_ideal(family, k)
        if not poly.equal(newton_polyhedron(integral_closure(member)),
                          newton_polyhedron(member)):
            return False
    return True
