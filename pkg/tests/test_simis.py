import pytest

from nok import (HilbertElement, NonPositiveExponent, UnsupportedIdealClass,
                 classify, hilbert_basis, minimalize,
                 normal_rees_generator_degrees, sgt_exact, svd_bounds,
                 svd_probe, symbolic_analytic_spread, symbolic_polyhedron,
                 veronese_verify, vertex_constants)

from oracles import hilbert_basis_brute

EXPECTED_SGT = {
    "triangle": 2, "weighted": 2, "c5": 3, "gt2sharp": 2, "mprimary": 1,
    "principal": 1, "star42": 2, "star43": 3, "star44": 1,
}

EXPECTED_DEGREES = {
    "triangle": {1, 2}, "weighted": {1, 2}, "c5": {1, 3},
    "gt2sharp": {1, 2}, "mprimary": {1}, "principal": {1},
    "star42": {1, 2}, "star43": {1, 2, 3}, "star44": {1},
}

EXPECTED_SIZES = {
    "triangle": 4, "weighted": 7, "c5": 6, "gt2sharp": 5, "mprimary": 4,
    "principal": 1, "star42": 5, "star43": 11, "star44": 4,
}


def test_triangle_basis_elements(hilbert_reports):
    assert hilbert_reports["triangle"].elements == (
        HilbertElement((0, 1, 1), 1),
        HilbertElement((1, 0, 1), 1),
        HilbertElement((1, 1, 0), 1),
        HilbertElement((1, 1, 1), 2))


def test_weighted_basis_elements(hilbert_reports):
    assert hilbert_reports["weighted"].elements == (
        HilbertElement((0, 2, 4), 1),
        HilbertElement((1, 1, 3), 1),
        HilbertElement((2, 0, 3), 1),
        HilbertElement((2, 1, 2), 1),
        HilbertElement((3, 2, 1), 1),
        HilbertElement((4, 3, 0), 1),
        HilbertElement((3, 1, 5), 2))


def test_gt2sharp_basis_is_generators_plus_all_ones(hilbert_reports):
    report = hilbert_reports["gt2sharp"]
    assert len(report.elements) == 5
    assert HilbertElement((1, 1, 1, 1, 1, 1), 2) in report.elements
    assert all(e.degree == 1 for e in report.elements[:4])


def test_c5_basis_has_odd_cycle_generator(hilbert_reports):
    report = hilbert_reports["c5"]
    assert HilbertElement((1, 1, 1, 1, 1), 3) in report.elements
    assert sorted(e.degree for e in report.elements) == [1, 1, 1, 1, 1, 3]


def test_fixture_basis_summary_table(hilbert_reports):
    for name, report in hilbert_reports.items():
        if name == "c5cone":
            continue
        assert report.exhaustive, name
        assert report.sgt == EXPECTED_SGT[name], name
        assert report.degrees == frozenset(EXPECTED_DEGREES[name]), name
        assert len(report.elements) == EXPECTED_SIZES[name], name


def test_elements_listed_by_degree_then_lex(hilbert_reports):
    for report in hilbert_reports.values():
        keys = [(e.degree, e.exponent) for e in report.elements]
        assert keys == sorted(keys)


def test_scaled_vertices_appear_as_generators(ideals, hilbert_reports):
    # every vertex v of SP with denominator lcm d contributes the
    # generator (d*v, d): extreme rays of the cone cannot be composite
    for name, report in hilbert_reports.items():
        ci = ideals[name].classified
        sp = symbolic_polyhedron(ci)
        denoms = vertex_constants(ci).denoms
        for v, d in zip(sp.vertices, denoms):
            scaled = tuple(int(d * coord) for coord in v)
            assert HilbertElement(scaled, d) in report.elements, name


def test_sgt_is_max_generator_degree(hilbert_reports):
    for name, report in hilbert_reports.items():
        assert report.sgt == max(e.degree for e in report.elements), name


def test_basis_matches_unrestricted_reduction_oracle(ideals):
    for name in ("triangle", "weighted", "gt2sharp", "mprimary",
                 "principal", "star42", "star44"):
        ci = ideals[name].classified
        report = hilbert_basis(ci)
        body = symbolic_polyhedron(ci)
        brute = hilbert_basis_brute(body, report.degree_bound_used)
        assert {(e.exponent, e.degree) for e in report.elements} == \
            set(brute), name


def test_truncated_basis_matches_oracle_on_c5(ideals):
    ci = ideals["c5"].classified
    report = hilbert_basis(ci, degree_bound=3)
    assert report.exhaustive is False
    brute = hilbert_basis_brute(symbolic_polyhedron(ci), 3)
    assert {(e.exponent, e.degree) for e in report.elements} == set(brute)


def test_default_bound_is_theorem_bound(ideals, hilbert_reports):
    for name, report in hilbert_reports.items():
        ci = ideals[name].classified
        D = vertex_constants(ci).D
        expected = max(symbolic_analytic_spread(ci) * D - 1, D)
        assert report.degree_bound_used == expected, name


def test_truncation_below_sgt_drops_generators(ideals):
    report = hilbert_basis(ideals["triangle"].classified, degree_bound=1)
    assert report.exhaustive is False
    assert report.sgt == 1
    assert len(report.elements) == 3


def test_bound_above_theorem_is_exhaustive_and_stable(ideals):
    ci = ideals["triangle"].classified
    wide = hilbert_basis(ci, degree_bound=6)
    assert wide.exhaustive
    assert wide.elements == hilbert_basis(ci).elements


def test_bound_validation(ideals):
    with pytest.raises(NonPositiveExponent):
        hilbert_basis(ideals["triangle"].classified, degree_bound=0)
    with pytest.raises(UnsupportedIdealClass):
        hilbert_basis(classify(minimalize([(3, 1)])))


def test_sgt_exact_values(ideals):
    for name, expected in EXPECTED_SGT.items():
        assert sgt_exact(ideals[name].classified) == expected, name


def test_veronese_verify_frozen(ideals):
    triangle = ideals["triangle"].classified
    assert veronese_verify(triangle, 2, 3)
    assert not veronese_verify(triangle, 1, 2)
    assert not veronese_verify(triangle, 3, 2)
    gt2 = ideals["gt2sharp"].classified
    assert not veronese_verify(gt2, 1, 2)
    assert veronese_verify(gt2, 2, 3)


def test_veronese_parallel_matches_serial(ideals):
    for name in ("triangle", "weighted", "star43"):
        ci = ideals[name].classified
        for d in (1, 2):
            assert veronese_verify(ci, d, 4, jobs=3) == \
                veronese_verify(ci, d, 4)


def test_svd_probe_windows(ideals):
    expected = {
        "triangle": (2, 2), "weighted": (2, 2), "c5": (3, 9),
        "gt2sharp": (2, 3), "mprimary": (1, 1), "principal": (1, 1),
        "star42": (2, 2), "star44": (1, 3),
    }
    for name, probe in expected.items():
        ci = ideals[name].classified
        assert svd_probe(ci) == probe, name
        candidate, upper = probe
        bounds = svd_bounds(ci)
        assert upper == bounds.upper
        assert bounds.lower <= candidate <= upper
        assert candidate % bounds.lower == 0
    # the deep default check on this one expands 24th symbolic powers;
    # a depth-two probe already pins the same candidate
    assert svd_probe(ideals["star43"].classified, k_max=2) == (6, 12)


def test_svd_probe_candidate_passes_its_own_check(ideals):
    for name in ("triangle", "c5", "gt2sharp"):
        ci = ideals[name].classified
        candidate, _ = svd_probe(ci)
        assert veronese_verify(ci, candidate, 4)


def test_svd_probe_at_kmax_one_never_fails(ideals):
    # every multiple of c passes a depth-one check, so the first does
    for name, parsed in ideals.items():
        if name == "c5cone":
            continue
        ci = parsed.classified
        candidate, _ = svd_probe(ci, k_max=1)
        assert candidate == svd_bounds(ci).lower


def test_normal_rees_degrees(ideals):
    for name, parsed in ideals.items():
        if name == "c5cone":
            continue
        expected = {1, 2} if name == "gt2sharp" else {1}
        assert normal_rees_generator_degrees(
            parsed.classified.ideal) == expected, name
