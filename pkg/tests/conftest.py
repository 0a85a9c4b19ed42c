import pytest

import helpers

ACCEPTANCE_CRITERIA = {
    1: "intrinsic blow-up charts of the (x^2*y, x*y^2) scene",
    2: "degree-0 Rees relations and lambda chart equivalence",
    3: "hyperbolic plane reduces to two DM charts",
    4: "fixed locus of the (x*y) scene",
    5: "Darboux x^2*y^2 leaves: dagger, vdim 0, ranks (1, 1)",
    6: "chart truncation crosscheck over 200 random scenes",
    7: "invariant suite over the random corpus",
    8: "kernel operations against linear-algebra oracles",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    number = int(name[len("test_criterion_"):].split("_", 1)[0])
    if report.when == "call":
        _outcomes[number] = "pass" if report.passed else "FAIL"
    elif report.when == "setup" and not report.passed:
        _outcomes[number] = "skipped" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_CRITERIA):
        verdict = _outcomes.get(number, "not run")
        label = ACCEPTANCE_CRITERIA[number]
        terminalreporter.write_line(f"criterion {number} ({label}): {verdict}")


@pytest.fixture(scope="session")
def corpus():
    return helpers.build_corpus()
