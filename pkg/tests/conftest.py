import itertools

import pytest


def brute_gamma(word, p, q):
    """1-entries of the partial transpose as a sorted list of 0-based pairs.

    Deliberately independent of the package: plain tuples, no numpy.
    """
    ones = []
    for r, c in enumerate(word):
        u, i = divmod(r, q)
        v, j = divmod(c - 1, q)
        ones.append((u * q + j, v * q + i))
    return sorted(ones)


def brute_counts(p, q):
    """(Z, Ze, Zt-perm, Zt-fixed) by scanning S_pq with brute_gamma."""
    n = p * q
    z = ze = zt_perm = zt_fixed = 0
    for w in itertools.permutations(range(1, n + 1)):
        g = brute_gamma(w, p, q)
        is_perm = sorted(r for r, _ in g) == list(range(n)) and sorted(c for _, c in g) == list(range(n))
        fixed = g == [(r, w[r] - 1) for r in range(n)]
        z += is_perm
        ze += fixed
        if all(w[w[r] - 1] == r + 1 for r in range(n)):
            zt_perm += is_perm
            zt_fixed += fixed
    return z, ze, zt_perm, zt_fixed


@pytest.fixture(scope="session")
def brute():
    cache = {}

    def get(p, q):
        if (p, q) not in cache:
            cache[(p, q)] = brute_counts(p, q)
        return cache[(p, q)]

    return get


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    _criteria.append((marker.args[0], marker.args[1], call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, ok in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
