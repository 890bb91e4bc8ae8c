import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from dbraid.scheme import random_scheme, validate_scheme

GOLDEN = Path(__file__).parent / "golden"

_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one acceptance line: ``acceptance(n, ok, detail)``."""
    store = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(n, ok, detail):
        store[n] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_ACCEPTANCE, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(store):
        ok, detail = store[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {detail}")


@st.composite
def schemes(draw, r_max=6, k_min=1, k_max=6, connected=False):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_scheme(random.Random(seed), r_max=r_max, k_range=(k_min, k_max), connected=connected)


@st.composite
def small_matrices(draw, max_rows=4, max_cols=4, bound=12):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n)) for _ in range(m)]


def scheme(r, edges, k):
    return validate_scheme(r, edges, k)
