from collections import Counter
from itertools import product

import pytest


def raw_rank2_spectrum(pa, pb):
    """Fixed-point tally over every bijective endomorphism of Z_pa + Z_pb.

    Independent of the matrix realization: the images u, v of (1,0), (0,1)
    range over all pairs with pa*u = 0, and the induced map is kept when it
    is a bijection.
    """
    elems = list(product(range(pa), range(pb)))
    tally = Counter()
    for u in elems:
        if (pa * u[1]) % pb:
            continue
        for v in elems:
            img = [((x * u[0] + y * v[0]) % pa, (x * u[1] + y * v[1]) % pb) for x, y in elems]
            if len(set(img)) != len(elems):
                continue
            tally[sum(i == e for i, e in zip(img, elems))] += 1
    return dict(tally)


@pytest.fixture(scope="session")
def raw_spectrum():
    return raw_rank2_spectrum


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""
    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
