"""End-to-end acceptance checks: the frozen worked examples and the
randomized structural properties, one test per criterion."""

import math
import random
from fractions import Fraction as F

from nok import (HalfSpace, HilbertElement, PrimeComponent,
                 PrimeDecomposition, analytic_spread, classify_decomposition,
                 contains, equal, from_halfspaces, hilbert_basis, member_ideal,
                 newton_okounkov_body, newton_polyhedron, np_equals_sp, power,
                 scale, sgt_bounds, sgt_exact, stabilization_check,
                 svd_bounds, svd_probe, symbolic_analytic_spread,
                 symbolic_polyhedron, symbolic_power, verify_np_scaled_sp,
                 vertex_constants)

from oracles import brute_force_vertices, hilbert_basis_brute, is_graded_family


def test_criterion_1_triangle_symbolic_geometry(ideals):
    ci = ideals["triangle"].classified
    sp = symbolic_polyhedron(ci)
    assert set(sp.vertices) == {
        (F(1), F(1), F(0)), (F(1), F(0), F(1)), (F(0), F(1), F(1)),
        (F(1, 2), F(1, 2), F(1, 2))}
    assert symbolic_analytic_spread(ci) == 2
    assert not np_equals_sp(ci)
    second = symbolic_power(ci, 2)
    assert set(second.generators) == {
        (2, 2, 0), (0, 2, 2), (2, 0, 2), (1, 1, 1)}
    assert equal(newton_polyhedron(second), scale(sp, 2))
    assert vertex_constants(ci).c == 2
    print("criterion 1: PASS")


def test_criterion_2_weighted_intersection(ideals):
    ci = ideals["weighted"].classified
    sp = symbolic_polyhedron(ci)
    assert set(sp.vertices) == {
        (F(4), F(3), F(0)), (F(2), F(0), F(3)), (F(0), F(2), F(4)),
        (F(3, 2), F(1, 2), F(5, 2))}
    assert vertex_constants(ci).c == 2
    assert symbolic_analytic_spread(ci) == 2
    # the window [c, (ell_s - 1)c] collapses to {2}, pinning svd exactly
    assert svd_bounds(ci) == (2, 2)
    assert svd_probe(ci) == (2, 2)
    print("criterion 2: PASS")


def test_criterion_3_cone_over_five_cycle(cone_run):
    body = cone_run["body"]
    assert set(body.vertices) == {
        (F(0), F(0), F(0), F(0), F(1), F(1)),
        (F(0), F(0), F(0), F(1, 2), F(1, 2), F(1, 2)),
        (F(0), F(0), F(0), F(1), F(0), F(1)),
        (F(0), F(0), F(0), F(1), F(1), F(0)),
        (F(0), F(0), F(1, 2), F(1, 2), F(0), F(1, 2)),
        (F(0), F(0), F(1), F(0), F(0), F(1)),
        (F(0), F(0), F(1), F(1), F(0), F(0)),
        (F(0), F(1, 2), F(1, 2), F(0), F(0), F(1, 2)),
        (F(0), F(1), F(0), F(0), F(0), F(1)),
        (F(0), F(1), F(1), F(0), F(0), F(0)),
        (F(1, 5), F(1, 5), F(1, 5), F(1, 5), F(1, 5), F(2, 5)),
        (F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(0)),
        (F(1, 2), F(0), F(0), F(0), F(1, 2), F(1, 2)),
        (F(1, 2), F(1, 2), F(0), F(0), F(0), F(1, 2)),
        (F(1), F(0), F(0), F(0), F(0), F(1)),
        (F(1), F(0), F(0), F(0), F(1), F(0)),
        (F(1), F(1), F(0), F(0), F(0), F(0))}
    assert len(body.vertices) == 17
    assert cone_run["constants"].c == 30
    assert cone_run["scaled_ok"]
    report = cone_run["report"]
    assert report.exhaustive
    assert len(report.elements) == 18
    extras = [e for e in report.elements
              if (e.exponent, e.degree) not in
              {(tuple(int(d * x) for x in v), d)
               for v, d in zip(body.vertices, cone_run["constants"].denoms)}]
    assert extras == [HilbertElement((1, 1, 1, 1, 1, 1), 4)]
    assert cone_run["elapsed"] <= 60.0
    print("criterion 3: PASS")


def test_criterion_4_five_cycle(ideals, hilbert_reports):
    ci = ideals["c5"].classified
    assert vertex_constants(ci).c == 3
    report = hilbert_reports["c5"]
    assert report.degrees == frozenset({1, 3})
    assert HilbertElement((1, 1, 1, 1, 1), 3) in report.elements
    assert sgt_exact(ci) == 3
    assert svd_probe(ci)[0] == 3
    print("criterion 4: PASS")


def test_criterion_5_star_constants(ideals):
    expected = {"star42": 2, "star43": 6, "star44": 1}
    for name, c in expected.items():
        assert vertex_constants(ideals[name].classified).c == c, name
    print("criterion 5: PASS")


def test_criterion_6_sharp_bound_instance(ideals):
    ci = ideals["gt2sharp"].classified
    sp = symbolic_polyhedron(ci)
    assert set(sp.vertices) == {
        tuple(F(x) for x in g) for g in ci.ideal.generators}
    assert vertex_constants(ci).c == 1
    assert np_equals_sp(ci)
    assert analytic_spread(ci.ideal) == symbolic_analytic_spread(ci) == 4
    bounds = sgt_bounds(ci)
    assert bounds.np_eq_sp == 2
    assert sgt_exact(ci) == 2
    print("criterion 6: PASS")


def test_criterion_7_ceiling_family_never_stabilizes(families):
    fam = families["ceiling"].family
    body = newton_okounkov_body(fam)
    expected = from_halfspaces([
        HalfSpace((1, 0), 0), HalfSpace((0, 1), 0), HalfSpace((2, 2), 1)], 2)
    assert equal(body, expected)
    assert set(body.vertices) == {(F(1, 2), F(0)), (F(0), F(1, 2))}
    report = stabilization_check(fam, 50)
    assert not report.stabilized
    w = report.witness
    assert w.c_tested == 50
    assert w.vertex in body.vertices
    attempt = scale(newton_polyhedron(member_ideal(fam, w.k)), F(1, w.k))
    assert not contains(attempt, w.vertex)
    print("criterion 7: PASS")


def test_criterion_8a_vertex_enumeration_oracle():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(2, 5)
        rows = [HalfSpace(tuple(int(i == j) for j in range(n)), 0)
                for i in range(n)]
        for _ in range(rng.randint(1, n + 2)):
            normal = [rng.randint(0, 3) for _ in range(n)]
            if not any(normal):
                normal[rng.randrange(n)] = 1
            rows.append(HalfSpace(tuple(normal), rng.randint(1, 6)))
        body = from_halfspaces(rows, n)
        assert set(body.vertices) == set(brute_force_vertices(rows, n))
    print("criterion 8a: PASS")


def test_criterion_8b_polyhedron_scaling_laws():
    rng = random.Random(2025)
    for _ in range(100):
        n = rng.randint(2, 4)
        components = []
        for _ in range(rng.randint(1, 3)):
            support = tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
            components.append(PrimeComponent(support, rng.randint(1, 3)))
        ci = classify_decomposition(PrimeDecomposition(n, tuple(components)))
        np_body = newton_polyhedron(ci.ideal)
        sp_body = symbolic_polyhedron(ci)
        assert all(contains(sp_body, v) for v in np_body.vertices)
        for k in range(2, 5):
            assert equal(newton_polyhedron(power(ci.ideal, k)),
                         scale(np_body, k))
            powered = classify_decomposition(PrimeDecomposition(
                n, tuple(PrimeComponent(c.variables, k * c.multiplicity)
                         for c in components)))
            assert equal(symbolic_polyhedron(powered), scale(sp_body, k))
    print("criterion 8b: PASS")


def test_criterion_8c_scaled_integrality_tracks_c(ideals):
    for name, parsed in ideals.items():
        ci = parsed.classified
        c = vertex_constants(ci).c
        for d in range(1, 2 * c + 1):
            assert verify_np_scaled_sp(ci, d) == (d % c == 0), (name, d)
    print("criterion 8c: PASS")


def test_criterion_8d_generation_degrees_respect_bounds(ideals,
                                                        hilbert_reports):
    for name, report in hilbert_reports.items():
        ci = ideals[name].classified
        assert report.exhaustive, name
        assert report.sgt <= sgt_bounds(ci).general, name
        c = vertex_constants(ci).c
        assert math.lcm(*report.degrees) % c == 0, name
    print("criterion 8d: PASS")


def test_criterion_8e_basis_reduction_oracle(ideals):
    for name, parsed in ideals.items():
        ci = parsed.classified
        body = symbolic_polyhedron(ci)
        report = hilbert_basis(ci, degree_bound=4)
        brute = hilbert_basis_brute(body, 4)
        assert {(e.exponent, e.degree) for e in report.elements} == \
            set(brute), name
    print("criterion 8e: PASS")


def test_criterion_8f_families_are_graded(families):
    for name, parsed in families.items():
        fam = parsed.family
        assert is_graded_family(lambda k: member_ideal(fam, k), 6), name
    print("criterion 8f: PASS")
