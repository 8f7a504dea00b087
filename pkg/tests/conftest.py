import os
import random

import pytest

from chipfire import corpus
from chipfire.complexes import complex_from_facets

ACCEPTANCE_LABELS = {
    "test_criterion_01": "1. Figure-1 reproduction (diamond complex)",
    "test_criterion_02": "2. hollow tetrahedron battery",
    "test_criterion_03": "3. small-simplex checks",
    "test_criterion_04": "4. graph regression",
    "test_criterion_05": "5. pseudomanifolds",
    "test_criterion_06": "6. forests and reduced Laplacians",
    "test_criterion_07": "7. staco complex",
    "test_criterion_08_": "8. seventeen-facet battery (long)",
    "test_criterion_08s": "8s. seventeen-facet Hilbert stress",
    "test_criterion_09": "9. randomized property suites",
}

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        if not (report.when == "setup" and report.skipped):
            return
    name = report.nodeid.split("::")[-1]
    for prefix, label in ACCEPTANCE_LABELS.items():
        if name.startswith(prefix):
            outcome = report.outcome.upper()
            _acceptance_results[label] = "PASS" if outcome == "PASSED" else (
                "SKIP" if outcome == "SKIPPED" else "FAIL"
            )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for label in sorted(_acceptance_results):
        terminalreporter.write_line(
            f"  [{_acceptance_results[label]}] {label}"
        )


@pytest.fixture(scope="session")
def named():
    """Corpus complexes, constructed once per session."""
    return {name: corpus.complex_named(name) for name in corpus.names()}


@pytest.fixture
def rng():
    return random.Random(20250810)


def random_complex(rand, max_vertices=6, max_facets=5, max_facet_size=4):
    """A small random complex; used by the seeded property suites."""
    n = rand.randint(2, max_vertices)
    facets = set()
    for _ in range(rand.randint(1, max_facets)):
        size = rand.randint(1, min(max_facet_size, n))
        facets.add(tuple(sorted(rand.sample(range(1, n + 1), size))))
    # drop facets contained in others so the list is clean
    maximal = [f for f in facets if not any(set(f) < set(g) for g in facets)]
    return complex_from_facets(sorted(maximal))


def stress_enabled():
    return os.environ.get("CHIPFIRE_STRESS") == "1"
