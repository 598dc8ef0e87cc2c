import math

import pytest

from fubini_molien.algebra import Mat, quarter_turn
from fubini_molien.group_model import GroupSpec, close_group


def lorentz_involutions(theta):
    c, s = math.cosh(theta), math.sinh(theta)
    lam1 = Mat.of([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, c, s], [0, 0, -s, -c]])
    lam2 = Mat.of([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -c, -s], [0, 0, s, c]])
    return lam1, lam2


def lorentz_spec(theta=1.0):
    return GroupSpec(
        dim=4,
        circle_blocks=[(0, 1)],
        involutions=lorentz_involutions(theta),
        theta=theta,
        signature=(1, 1, 1, -1),
    )


REFLECT = Mat.diag([1, -1])
SIGN_GENS = [Mat.diag([-1, -1, 1]), Mat.diag([1, 1, -1]), Mat.diag([1, -1, 1])]


def finite_corpus():
    """The finite groups used for oracle cross-checks, by name."""
    return {
        "trivial": close_group([], dim=2),
        "pm_identity": close_group([Mat.diag([-1, -1])]),
        "cyclic4": close_group([quarter_turn()]),
        "dihedral8": close_group([quarter_turn(), REFLECT]),
        "signdiag8": close_group(SIGN_GENS),
    }


@pytest.fixture
def paper_spec():
    return lorentz_spec(1.0)


@pytest.fixture(scope="session")
def corpus():
    return finite_corpus()


ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail=""):
    line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
