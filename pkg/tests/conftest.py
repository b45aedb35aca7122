import sys

import pytest

from monoweight import build_datum


@pytest.fixture(scope="session")
def a1():
    return build_datum("A1")


@pytest.fixture(scope="session")
def a2():
    return build_datum("A2")


@pytest.fixture(scope="session")
def a4():
    return build_datum("A4")


@pytest.fixture(scope="session")
def b3():
    return build_datum("B3")


@pytest.fixture(scope="session")
def b4():
    return build_datum("B4")


def pytest_terminal_summary(terminalreporter):
    # importlib mode registers the module under a mangled name
    mods = [m for m in list(sys.modules.values()) if getattr(m, "__file__", "") and m.__file__.endswith("test_acceptance.py")]
    for mod in mods:
        if getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for key in mod.RESULTS:
                terminalreporter.write_line(mod.line(key))
            return
