"""Monomial ideals represented by their minimal generating exponent vectors.

A monomial ideal in n variables is stored as the antichain (under
componentwise <=) of the exponent vectors of its minimal generators,
kept in lexicographic order so that equal ideals compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (DimensionMismatch, EmptyGeneratorSet, EmptyList,
                     EmptyPrime, NokError, NonPositiveExponent,
                     NonPositiveMultiplicity, NotSquarefree)

Vector = tuple[int, ...]


def _divides(a: Vector, b: Vector) -> bool:
    """True when x^a divides x^b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def minimal_vectors(vectors: Iterable[Sequence[int]]) -> list[Vector]:
    """Componentwise-minimal elements of a set of vectors, lex-sorted."""
    unique = sorted({tuple(v) for v in vectors}, key=lambda v: (sum(v), v))
    kept: list[Vector] = []
    for v in unique:
        if not any(_divides(m, v) for m in kept):
            kept.append(v)
    return sorted(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A nonzero monomial ideal; `generators` is a lex-sorted antichain."""

    nvars: int
    generators: tuple[Vector, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise DimensionMismatch("need at least one variable")
        if not self.generators:
            raise EmptyGeneratorSet("the zero ideal cannot be represented")
        for g in self.generators:
            if len(g) != self.nvars:
                raise DimensionMismatch(
                    f"generator {g} has length {len(g)}, expected {self.nvars}")
            if any(e < 0 or not isinstance(e, int) for e in g):
                raise NonPositiveExponent(f"bad exponent vector {g}")
        if list(self.generators) != minimal_vectors(self.generators):
            raise NokError("generators must be a lex-sorted antichain; "
                           "use minimalize() to build ideals")

    def is_squarefree(self) -> bool:
        return all(e in (0, 1) for g in self.generators for e in g)

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.nvars,)

    def contains_monomial(self, a: Sequence[int]) -> bool:
        """Membership of x^a in the ideal (some generator divides it)."""
        if len(a) != self.nvars:
            raise DimensionMismatch(f"point {a} has wrong length")
        t = tuple(a)
        return any(_divides(g, t) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True when other is a subset of self, as ideals."""
        if other.nvars != self.nvars:
            raise DimensionMismatch("variable counts differ")
        return all(self.contains_monomial(g) for g in other.generators)


def minimalize(gens: Iterable[Sequence[int]], nvars: int | None = None) -> MonomialIdeal:
    """Canonical MonomialIdeal generated by an arbitrary set of exponent vectors."""
    vectors = [tuple(v) for v in gens]
    if not vectors:
        raise EmptyGeneratorSet("no generators given")
    if nvars is None:
        nvars = len(vectors[0])
    return MonomialIdeal(nvars, tuple(minimal_vectors(vectors)))


def multiply(lhs: MonomialIdeal, rhs: MonomialIdeal) -> MonomialIdeal:
    """Product ideal: all pairwise exponent sums, minimalized."""
    if lhs.nvars != rhs.nvars:
        raise DimensionMismatch("variable counts differ")
    sums = [tuple(x + y for x, y in zip(a, b))
            for a in lhs.generators for b in rhs.generators]
    return minimalize(sums, lhs.nvars)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th ordinary power, k >= 1, by iterated products."""
    if k < 1:
        raise NonPositiveExponent(f"power exponent must be >= 1, got {k}")
    result = ideal
    for _ in range(k - 1):
        result = multiply(result, ideal)
    return result


def intersect(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of monomial ideals via pairwise generator lcm folds."""
    if not ideals:
        raise EmptyList("intersection of an empty list")
    if len({i.nvars for i in ideals}) > 1:
        raise DimensionMismatch("variable counts differ")
    result = ideals[0]
    for other in ideals[1:]:
        lcms = [tuple(max(x, y) for x, y in zip(a, b))
                for a in result.generators for b in other.generators]
        result = minimalize(lcms, result.nvars)
    return result


@dataclass(frozen=True)
class PrimeComponent:
    """A monomial prime (subset of variable indices, 0-based) with a
    multiplicity omega >= 1."""

    variables: tuple[int, ...]
    multiplicity: int = 1

    def __post_init__(self):
        if not self.variables:
            raise EmptyPrime("a prime component needs at least one variable")
        if tuple(sorted(set(self.variables))) != self.variables:
            object.__setattr__(self, "variables",
                               tuple(sorted(set(self.variables))))
        if any(v < 0 for v in self.variables):
            raise DimensionMismatch("negative variable index")
        if self.multiplicity < 1:
            raise NonPositiveMultiplicity(
                f"multiplicity must be >= 1, got {self.multiplicity}")

    def indicator(self, nvars: int) -> Vector:
        """0/1 vector marking the prime's variables."""
        return tuple(1 if j in set(self.variables) else 0 for j in range(nvars))

    def ideal(self, nvars: int) -> MonomialIdeal:
        """The prime itself, as a monomial ideal."""
        gens = [tuple(1 if j == v else 0 for j in range(nvars))
                for v in self.variables]
        return MonomialIdeal(nvars, tuple(sorted(gens)))


def _implied(comp: PrimeComponent, by: PrimeComponent) -> bool:
    # comp is redundant when its variable set contains `by`'s with a
    # multiplicity that is not larger (the half-space it cuts is implied).
    sup, sub = set(comp.variables), set(by.variables)
    if not sub <= sup:
        return False
    if sub == sup:
        return comp.multiplicity < by.multiplicity
    return comp.multiplicity <= by.multiplicity


@dataclass(frozen=True)
class PrimeDecomposition:
    """Irredundant intersection of powers of monomial primes."""

    nvars: int
    components: tuple[PrimeComponent, ...]

    def __post_init__(self):
        if not self.components:
            raise EmptyList("a decomposition needs at least one component")
        for comp in self.components:
            if comp.variables[-1] >= self.nvars:
                raise DimensionMismatch(
                    f"variable index {comp.variables[-1]} out of range")
        unique = sorted(set(self.components),
                        key=lambda c: (c.variables, c.multiplicity))
        kept = tuple(c for c in unique
                     if not any(_implied(c, d) for d in unique if d != c))
        object.__setattr__(self, "components", kept)


def expand_decomposition(decomp: PrimeDecomposition) -> MonomialIdeal:
    """Minimal generators of the intersection of the component prime powers."""
    parts = [power(comp.ideal(decomp.nvars), comp.multiplicity)
             for comp in decomp.components]
    return intersect(parts)


def minimal_primes(ideal: MonomialIdeal) -> PrimeDecomposition:
    """Minimal primes of a squarefree ideal: the minimal vertex covers of the
    hypergraph whose edges are the generator supports.

    Recursive branch on an uncovered edge; supersets of an already-found
    cover are pruned, and a final antichain filter keeps the minimal ones.
    """
    if not ideal.is_squarefree():
        raise NotSquarefree("minimal prime computation needs a squarefree ideal")
    if ideal.is_unit():
        raise NokError("the unit ideal has no minimal primes")
    edges = [frozenset(j for j, e in enumerate(g) if e)
             for g in ideal.generators]
    found: list[frozenset[int]] = []

    def extend(cover: set[int], remaining: list[frozenset[int]]):
        if any(f <= cover for f in found):
            return
        open_edge = next((e for e in remaining if not (e & cover)), None)
        if open_edge is None:
            found.append(frozenset(cover))
            return
        for v in sorted(open_edge):
            cover.add(v)
            extend(cover, [e for e in remaining if v not in e])
            cover.remove(v)

    extend(set(), edges)
    minimal = [c for c in found if not any(d < c for d in found)]
    comps = tuple(PrimeComponent(tuple(sorted(c)), 1)
                  for c in sorted(minimal, key=sorted))
    return PrimeDecomposition(ideal.nvars, comps)


def saturate_to_prime(ideal: MonomialIdeal, prime: Iterable[int]) -> MonomialIdeal:
    """Zero out every generator exponent outside the prime, then minimalize.

    This computes R ∩ I·R_p for a monomial prime p: inverting the variables
    outside p erases their exponents.
    """
    keep = set(prime)
    if not keep:
        raise EmptyPrime("cannot saturate to the empty prime")
    if max(keep) >= ideal.nvars or min(keep) < 0:
        raise DimensionMismatch("prime variable index out of range")
    gens = [tuple(e if j in keep else 0 for j, e in enumerate(g))
            for g in ideal.generators]
    return minimalize(gens, ideal.nvars)


def unit_vectors(nvars: int) -> list[Vector]:
    """Standard basis vectors, handy for building primes and rays."""
    return [tuple(int(i == j) for j in range(nvars)) for i in range(nvars)]
