from functools import lru_cache

import pytest

from qhh import GF, QQ, build_resolution, corpus
from qhh.cohomology import Cochains
from qhh.bar import RelativeBarComplex

FIELDS = {"gf2": GF(2), "gf3": GF(3), "gf5": GF(5), "q": QQ}
CORPUS = ["preproj-D4", "nonstd-D4", "one-loop", "one-loop-cube", "a3-rad2", "exterior-2"]


@lru_cache(maxsize=None)
def presentation(name, field="gf2"):
    return corpus.load(name, FIELDS[field])


@lru_cache(maxsize=None)
def resolution(name, field="gf2"):
    return build_resolution(presentation(name, field))


@lru_cache(maxsize=None)
def cochains(name, field="gf2"):
    return Cochains(resolution(name, field))


@lru_cache(maxsize=None)
def report(name, field="gf2"):
    return cochains(name, field).report()


@lru_cache(maxsize=None)
def bar(name, field="gf2"):
    return RelativeBarComplex(resolution(name, field).algebra)


@pytest.fixture
def A1():
    """Preprojective D4 over GF(2)."""
    return resolution("preproj-D4")


@pytest.fixture
def A2():
    """Non-standard D4 over GF(2)."""
    return resolution("nonstd-D4")


# -- acceptance bookkeeping ---------------------------------------------

import time

SESSION_START = [time.perf_counter()]
ACCEPTANCE = {}


def pytest_sessionstart(session):
    SESSION_START[0] = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance runs last so its runtime criterion covers the whole suite
    items.sort(key=lambda it: it.nodeid.startswith("tests/test_acceptance.py")
               or it.nodeid.startswith("test_acceptance.py"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
