from functools import lru_cache

import pytest

from ideal_arrangements.rootsys import build_root_system
from ideal_arrangements.ideals import Ideal, all_ideal_masks
from ideal_arrangements.idealtype import arrangement_of_ideal_type
from ideal_arrangements import freecert


@lru_cache(maxsize=None)
def _census(name):
    """mask -> (supersolvable, inductively factored, inductively free) verdicts."""
    rs = build_root_system(name)
    fs = freecert.FreenessSearch()
    fac = freecert.FactorizationSearch()
    out = {}
    for m in all_ideal_masks(rs):
        arr = arrangement_of_ideal_type(rs, Ideal(rs, m))
        out[m] = (freecert.supersolvable(arr),
                  freecert.inductively_factored(arr, search=fac),
                  freecert.inductively_free(arr, search=fs))
    return out


@pytest.fixture(scope="session")
def census():
    return _census


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
