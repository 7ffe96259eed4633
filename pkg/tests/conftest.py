import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fatpoints import affine_config  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_config(rng: random.Random, box: int = 3, s_max: int = 4, m_max: int = 1):
    """A random configuration of affine points in ``{0..box-1}^2``."""
    cells = [(a, b) for a in range(box) for b in range(box)]
    s = rng.randint(1, min(s_max, len(cells)))
    pts = rng.sample(cells, s)
    return affine_config(pts, [rng.randint(1, m_max) for _ in pts])
