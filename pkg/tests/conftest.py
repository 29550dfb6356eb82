import random
from functools import lru_cache
from pathlib import Path

import pytest

from nearfree.arrangement import Arrangement, validate

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"

CIRCLE16 = [[1, 1, -16, 0, 0, 0]]

# name -> (lines, conics, expected (n2, t, n3), tau, mdr)
FIXTURES = {
    "c3": ([[-1, 1, 4]], CIRCLE16, (2, 0, 0), 2, 1),
    "c4": ([[-1, 1, -4], [1, 1, -4]], CIRCLE16, (2, 0, 1), 6, 2),
    "c4_prime": ([[0, 1, -4], [-1, 1, 0]], CIRCLE16, (3, 1, 0), 6, 2),
    "c5": ([[-1, 1, 4], [1, 1, -4], [-1, 1, -4]], CIRCLE16, (3, 0, 2), 11, 2),
    "c6": ([[-1, 1, 4], [1, 1, -4], [-1, 1, -4], [1, 1, 4]], CIRCLE16, (2, 0, 4), 18, 2),
    "c7": (
        [[1, 0, -1], [1, 0, 1], [0, 1, -1], [0, 1, 1], [1, 1, 0]],
        [[1, 1, -1, 0, 0, 0]],
        (6, 4, 2),
        26,
        3,
    ),
}

ACCEPTANCE_RESULTS = []


def fixture_arrangement(name) -> Arrangement:
    lines, conics, *_ = FIXTURES[name]
    return Arrangement.from_coefficients(lines, conics)


def random_arrangements(count, seed=20240601, max_d=3, max_k=2, bound=5):
    """Valid arrangements with integer coefficients in [-bound, bound], deterministic per seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        k = rng.randint(1, max_k)
        lines = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(d)]
        conics = [[rng.randint(-bound, bound) for _ in range(6)] for _ in range(k)]
        arr = Arrangement.from_coefficients(lines, conics)
        if validate(arr).ok:
            out.append(arr)
    return out


@lru_cache(maxsize=None)
def analysed_random(count=60):
    """(arrangement, points, wc) for the random corpus; unsupported points yield None entries."""
    from nearfree.errors import UnsupportedSingularity
    from nearfree.singular import group_and_classify

    res = []
    for arr in random_arrangements(count):
        try:
            pts, wc = group_and_classify(arr)
        except UnsupportedSingularity:
            pts, wc = None, None
        res.append((arr, pts, wc))
    return tuple(res)


@pytest.fixture(params=sorted(FIXTURES))
def fixture_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
