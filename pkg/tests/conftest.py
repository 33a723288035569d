import functools

import pytest

from sigmafact import config
from sigmafact.corpus import builtin_corpus, builtin_group
from sigmafact.group import build_group
from sigmafact.perm import parse_perm_list


@functools.lru_cache(maxsize=None)
def grp(name):
    return builtin_group(name)


def gens(text, degree=None):
    return build_group(parse_perm_list(text, degree), degree)


CORPUS = builtin_corpus()
SMALL = [e.name for e in CORPUS if e.expected_order <= 60]


@pytest.fixture(autouse=True)
def _restore_limits():
    saved = (config.limits.elements, config.limits.lattice)
    yield
    config.limits.elements, config.limits.lattice = saved


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, _line
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(_line(n, *RESULTS[n]))
