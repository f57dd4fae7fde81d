import random
import sys
from pathlib import Path

import pytest

from pdcover import build_hypergraph

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def triangle():
    return build_hypergraph([1, 1, 1], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path3():
    return build_hypergraph([1, 1, 1], [(0, 1), (1, 2)])


@pytest.fixture
def star3():
    return build_hypergraph([2, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def single_edge():
    return build_hypergraph([1, 2], [(0, 1)])


def random_small(seed, n_max=16, ranks=(2, 3, 4), wmax=50):
    """Seeded small hypergraph with integer weights 1..wmax and rank drawn from ``ranks``."""
    rng = random.Random(seed)
    r = rng.choice(ranks)
    n = rng.randint(r, n_max)
    m = rng.randint(1, 3 * n)
    weights = [rng.randint(1, wmax) for _ in range(n)]
    edges = [rng.sample(range(n), rng.randint(1, r)) for _ in range(m - 1)]
    edges.append(rng.sample(range(n), r))
    return build_hypergraph(weights, edges)


ACCEPTANCE_LINES = []


def record_criterion(label, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
