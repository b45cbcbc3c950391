import random

import pytest

# (criterion, passed, detail) lines printed at the end of the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {crit}: {detail}")


@pytest.fixture
def acceptance():
    def record(crit: int, ok: bool, detail: str):
        ACCEPTANCE.append((crit, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {crit}: {detail}")
        return ok

    return record


def off_cut_points(seed: int = 20100521, count: int = 20, base_step: float = 1e-2):
    """Fixed-seed points satisfying the numeric oracle's domain precondition."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        reach = 10 * base_step * max(1.0, abs(z))
        dist_cut = abs(z.imag) if z.real <= 1 else abs(z - 1)
        if dist_cut > reach and abs(z + 1) > reach and abs(z - 1) > reach:
            out.append(z)
    return out
