import time
from pathlib import Path

import pytest

from nok import (hilbert_basis, newton_polyhedron, parse_family_file,
                 parse_ideal_file, symbolic_polyhedron, verify_np_scaled_sp,
                 vertex_constants)

ROOT = Path(__file__).resolve().parent.parent

IDEAL_FILES = ("triangle", "weighted", "c5", "c5cone", "gt2sharp",
               "mprimary", "principal", "star42", "star43", "star44")
FAMILY_FILES = ("ceiling", "symbolic_triangle", "power_mprimary",
                "intersection")


@pytest.fixture(scope="session")
def ideals():
    """All fixture ideals, parsed once: name -> ParsedIdeal."""
    return {name: parse_ideal_file(str(ROOT / "ideals" / f"{name}.nok"))
            for name in IDEAL_FILES}


@pytest.fixture(scope="session")
def families():
    return {name: parse_family_file(str(ROOT / "families" / f"{name}.nok"))
            for name in FAMILY_FILES}


@pytest.fixture(scope="session")
def cone_run(ideals):
    """The expensive cone-over-C5 computation, done once with cold
    polyhedron caches and wall-clock timed: symbolic polyhedron, the
    scaled-power identity at d = 30, and the exhaustive Hilbert basis."""
    classified = ideals["c5cone"].classified
    newton_polyhedron.cache_clear()
    symbolic_polyhedron.cache_clear()
    start = time.perf_counter()
    body = symbolic_polyhedron(classified)
    constants = vertex_constants(classified)
    scaled_ok = verify_np_scaled_sp(classified, constants.c)
    report = hilbert_basis(classified)
    elapsed = time.perf_counter() - start
    return {"body": body, "constants": constants, "scaled_ok": scaled_ok,
            "report": report, "elapsed": elapsed}


@pytest.fixture(scope="session")
def hilbert_reports(ideals, cone_run):
    """Exhaustive (default-bound) Hilbert basis runs for every fixture
    ideal, the c5cone one shared from cone_run."""
    out = {"c5cone": cone_run["report"]}
    for name, parsed in ideals.items():
        if name not in out:
            out[name] = hilbert_basis(parsed.classified)
    return out
