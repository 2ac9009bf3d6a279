import pytest

from hopfkit import zoo
from hopfkit.scalar import root_of_unity
from hopfkit.yd import (
    HModule,
    adjoint_yd_P,
    coadjoint_yd_Q,
    nichols_truncated_line,
    regular_yd,
    trivial_yd_embed,
)


@pytest.fixture(scope="session")
def sw():
    return zoo.sweedler()


@pytest.fixture(scope="session")
def taft3():
    return zoo.taft(3, root_of_unity(3, 1))


@pytest.fixture(scope="session")
def members():
    """Every small zoo member, built once."""
    return {d: zoo.build(d) for d in zoo.zoo_members(include_large=False)}


@pytest.fixture(scope="session")
def yd3():
    B = nichols_truncated_line(3)
    H = B.qt.H
    mods = {
        "P": adjoint_yd_P(B),
        "Q": coadjoint_yd_Q(B),
        "T": trivial_yd_embed(HModule.trivial(H), B),
        "REG": regular_yd(B),
    }
    return B, mods


@pytest.fixture(scope="session")
def dtaft3():
    return zoo.build("double:taft:3,1")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
