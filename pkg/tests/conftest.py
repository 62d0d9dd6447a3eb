import itertools
import time

import pytest

from codingtheory import field


# --- independent oracles ------------------------------------------------------
# These deliberately avoid codingtheory.code / matgf so they can check them.


def span_brute(F, rows, n):
    """Every vector in the span of ``rows``, by summing all coefficient choices."""
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=len(rows)):
        v = [0] * n
        for c, row in zip(coeffs, rows):
            for j, x in enumerate(row):
                v[j] = F.add(v[j], F.mul(c, x))
        out.add(tuple(v))
    return out


def rank_brute(F, rows, n):
    """log_q of the span size."""
    size = len(span_brute(F, rows, n))
    r = 0
    while F.q**r < size:
        r += 1
    assert F.q**r == size
    return r


def min_weight_brute(F, rows, n):
    return min(sum(1 for x in v if x) for v in span_brute(F, rows, n) if any(v))


def min_weight_prime(p, rows):
    """Minimum weight over GF(p) with plain modular integers."""
    n = len(rows[0])
    best = None
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        if not any(coeffs):
            continue
        v = [sum(c * row[j] for c, row in zip(coeffs, rows)) % p for j in range(n)]
        w = sum(1 for x in v if x)
        if w and (best is None or w < best):
            best = w
    return best


def eval_prime(p, coeffs_by_mono, point):
    """Evaluate sum c * x^e mod p with integer arithmetic."""
    total = 0
    for mono, c in coeffs_by_mono.items():
        term = c
        for x, e in zip(point, mono):
            term *= pow(x, e, p) if e else 1
        total += term
    return total % p


@pytest.fixture
def gf4():
    return field(2, 2)


@pytest.fixture
def gf5():
    return field(5)


@pytest.fixture
def gf9():
    return field(3, 2)


# --- acceptance reporting -------------------------------------------------------

_ACCEPTANCE = []


class Criterion:
    def __init__(self, label, budget):
        self.label = label
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE.append(f"[{status}] {self.label} ({elapsed:.2f}s / {self.budget:g}s budget)")
        if exc_type is None and not ok:
            raise AssertionError(f"{self.label}: {elapsed:.2f}s exceeds the {self.budget}s budget")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
