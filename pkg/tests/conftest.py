"""Collects acceptance results and prints one line per criterion at the end of the run."""

import pytest

CRITERIA = {
    1: "corpus classification",
    2: "full cycles vs subset oracle",
    3: "Sperner parity on subdivided tetrahedra",
    4: "Helly certificate on tri_grid(8,8) rhombi",
    5: "certificate soundness fuzzing",
    6: "complement laws",
    7: "largeness monotonicity",
    8: "ball-filling verifier rejects mutations",
}
RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(n: int, ok: bool, detail: str) -> None:
        RESULTS[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({CRITERIA[n]}) {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        ok, detail = RESULTS.get(n, (False, "did not complete"))
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({title}) {detail}")
