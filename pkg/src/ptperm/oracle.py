"""Brute-force ground truth for the partial-transpose counts.

The naive counters scan all of S_n.  The scan is split by the value in the
first position; each slice is evaluated with vectorized numpy index
arithmetic and slices are summed, so the result does not depend on how many
workers ran.  The scalar predicates in :func:`satisfies` go through
:mod:`ptperm.core` matrices instead and are used to re-check witnesses.
"""
from __future__ import annotations

import itertools
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import core
from .core import BlockShape

NAIVE_MAX_N = 10
ENUM_MAX_N = 12
BACKTRACK_MAX_P = 4

STATS = ("z", "ze", "zt-perm", "zt-fixed")

__all__ = [
    "BACKTRACK_MAX_P",
    "CountReport",
    "GuardError",
    "NAIVE_MAX_N",
    "STATS",
    "check_symmetric_claim",
    "count_Z_backtrack",
    "count_Z_oracle",
    "count_Ze_oracle",
    "count_Zt_oracle",
    "count_oracle",
    "enumerate_permutations",
    "enumerate_symmetric",
    "satisfies",
    "witnesses",
]


class GuardError(ValueError):
    """A size guard refused the request."""


@dataclass
class CountReport:
    stat: str
    p: int
    q: int
    method: str
    value: int
    elapsed: float = 0.0
    witnesses: tuple = field(default_factory=tuple)

    def as_dict(self):
        return {
            "stat": self.stat,
            "p": self.p,
            "q": self.q,
            "method": self.method,
            "value": str(self.value),
            "elapsed": round(self.elapsed, 6),
        }


def _guard_n(n, max_n, what="naive oracle"):
    if n < 1:
        raise GuardError("n must be positive")
    if max_n is not None and n > max_n:
        raise GuardError(f"n = {n} exceeds the {what} guard n <= {max_n}")


def enumerate_permutations(n: int, max_n: int | None = ENUM_MAX_N):
    """All permutations of [n] in lexicographic order, as 1-based tuples."""
    _guard_n(n, max_n, "enumeration")
    return itertools.permutations(range(1, n + 1))


def enumerate_symmetric(n: int, max_n: int | None = ENUM_MAX_N, include_identity: bool = True):
    """All involutions of [n] in lexicographic order."""
    _guard_n(n, max_n, "enumeration")
    word = [0] * n

    # Assigning positions left to right in increasing value order keeps the
    # output lexicographic.
    def rec(pos):
        while pos < n and word[pos]:
            pos += 1
        if pos == n:
            yield tuple(word)
            return
        for v in range(pos + 1, n + 1):
            if word[v - 1]:
                continue
            word[pos] = v
            word[v - 1] = pos + 1
            yield from rec(pos + 1)
            word[v - 1] = 0
            word[pos] = 0

    for w in rec(0):
        if include_identity or any(v != i for i, v in enumerate(w, start=1)):
            yield w


def satisfies(word, shape: BlockShape, stat: str, include_identity: bool = True) -> bool:
    """Scalar predicate for one permutation, evaluated on explicit matrices."""
    m = core.perm_matrix(word)
    g = core.inner_partial_transpose(m, shape)
    if stat == "z":
        return core.is_permutation_matrix(g)
    if stat == "ze":
        return bool((g == m).all())
    if stat in ("zt-perm", "zt-fixed"):
        if not core.is_symmetric(m):
            return False
        if not include_identity and (m == core.identity(shape.n)).all():
            return False
        if stat == "zt-perm":
            return core.is_permutation_matrix(g)
        return bool((g == m).all())
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


def _gamma_indices(x, p, q):
    """Row and column of each 1-entry after the partial transpose (0-based)."""
    rows = np.arange(p * q)
    u, i = np.divmod(rows, q)
    v, j = np.divmod(x, q)
    return u * q + j, v * q + i


def _mask(x, p, q, stat):
    """Vectorized predicate over a ``(m, n)`` array of 0-based words."""
    n = p * q
    new_row, new_col = _gamma_indices(x, p, q)
    if stat == "ze" or stat == "zt-fixed":
        ok = (np.take_along_axis(x, new_row, axis=1) == new_col).all(axis=1)
    else:
        full = (1 << n) - 1
        one = np.int64(1)
        ok = (np.bitwise_or.reduce(one << new_row, axis=1) == full) & (
            np.bitwise_or.reduce(one << new_col, axis=1) == full
        )
    if stat.startswith("zt"):
        rows = np.arange(n)
        ok &= (np.take_along_axis(x, x, axis=1) == rows).all(axis=1)
    return ok


@lru_cache(maxsize=4)
def _slice(n, first):
    rest = [v for v in range(n) if v != first]
    body = np.array(list(itertools.permutations(rest)), dtype=np.int64)
    body = body.reshape(max(len(body), 1), n - 1)
    return np.hstack([np.full((body.shape[0], 1), first, dtype=np.int64), body])


def _count_slice(args):
    p, q, stat, first = args
    return int(_mask(_slice(p * q, first), p, q, stat).sum())


def _scan(p, q, stat, jobs):
    n = p * q
    tasks = [(p, q, stat, first) for first in range(n)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_count_slice, tasks))
    else:
        parts = [_count_slice(t) for t in tasks]
    return sum(parts)


def _shape(p, q):
    try:
        return BlockShape(p, q)
    except core.ShapeError as e:
        raise GuardError(str(e)) from None


def count_Z_oracle(p, q, jobs: int = 1, max_n: int | None = NAIVE_MAX_N) -> CountReport:
    """Count ``pi`` in S_pq whose partial transpose is a permutation matrix."""
    _shape(p, q)
    _guard_n(p * q, max_n)
    t0 = time.perf_counter()
    value = _scan(p, q, "z", jobs)
    return CountReport("z", p, q, "oracle", value, time.perf_counter() - t0)


def count_Ze_oracle(p, q, jobs: int = 1, max_n: int | None = NAIVE_MAX_N) -> CountReport:
    """Count ``pi`` in S_pq fixed by the partial transpose."""
    _shape(p, q)
    _guard_n(p * q, max_n)
    t0 = time.perf_counter()
    value = _scan(p, q, "ze", jobs)
    return CountReport("ze", p, q, "oracle", value, time.perf_counter() - t0)


def count_Zt_oracle(
    p, q, variant: str = "pt-permutation", include_identity: bool = True, max_n: int | None = NAIVE_MAX_N
) -> CountReport:
    """Count symmetric permutation matrices under one of two conditions.

    ``"pt-permutation"``: the partial transpose is a permutation matrix.
    ``"pt-fixed"``: the partial transpose equals the matrix.  These are not
    the same set in general (see :func:`check_symmetric_claim`).
    """
    stat = {"pt-permutation": "zt-perm", "pt-fixed": "zt-fixed",
            "zt-perm": "zt-perm", "zt-fixed": "zt-fixed"}.get(variant)
    if stat is None:
        raise ValueError(f"unknown variant {variant!r}")
    _shape(p, q)
    n = p * q
    _guard_n(n, max_n)
    t0 = time.perf_counter()
    words = list(enumerate_symmetric(n, max_n=None, include_identity=include_identity))
    value = 0
    if words:
        value = int(_mask(np.array(words, dtype=np.int64) - 1, p, q, stat).sum())
    return CountReport(stat, p, q, "oracle", value, time.perf_counter() - t0)


def count_oracle(stat, p, q, include_identity=True, jobs=1, max_n=NAIVE_MAX_N) -> CountReport:
    if stat == "z":
        return count_Z_oracle(p, q, jobs=jobs, max_n=max_n)
    if stat == "ze":
        return count_Ze_oracle(p, q, jobs=jobs, max_n=max_n)
    if stat in ("zt-perm", "zt-fixed"):
        return count_Zt_oracle(p, q, stat, include_identity=include_identity, max_n=max_n)
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


def check_symmetric_claim(p, q, max_n: int | None = NAIVE_MAX_N) -> list[tuple[int, ...]]:
    """Involutions whose partial transpose is a permutation other than Id or P."""
    shape = _shape(p, q)
    _guard_n(shape.n, max_n)
    words = list(enumerate_symmetric(shape.n, max_n=None))
    x = np.array(words, dtype=np.int64) - 1
    perm_ok = _mask(x, p, q, "zt-perm")
    fixed = _mask(x, p, q, "zt-fixed")
    out = []
    for w, is_perm, is_fixed in zip(words, perm_ok, fixed):
        if is_perm and not is_fixed:
            g = core.inner_partial_transpose(core.perm_matrix(w), shape)
            if not (g == core.identity(shape.n)).all():
                out.append(w)
    return out


def witnesses(p, q, predicate: str, limit: int, include_identity: bool = True,
              max_n: int | None = NAIVE_MAX_N) -> list[tuple[int, ...]]:
    """Lexicographically first ``limit`` permutations satisfying ``predicate``."""
    if predicate not in STATS:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {STATS}")
    shape = _shape(p, q)
    _guard_n(shape.n, max_n)
    out = []
    if limit <= 0:
        return out
    if predicate.startswith("zt"):
        source = enumerate_symmetric(shape.n, max_n=None, include_identity=include_identity)
    else:
        source = enumerate_permutations(shape.n, max_n=None)
    for w in source:
        if satisfies(w, shape, predicate, include_identity):
            out.append(w)
            if len(out) == limit:
                break
    return out


# -- backtracking counter -------------------------------------------------
#
# Each x in [q] lies in exactly one A_{i,j} per block row i, and the column
# disjointness forces j = sigma_x(i) for some sigma_x in S_p.  So a family of
# row sets is a function [q] -> S_p, likewise for column sets, and the two
# families must induce the same table of block sizes r_ij.  Each compatible
# pair contributes prod r_ij! placements.


def _perm_cells(p):
    return [tuple(i * p + (j - 1) for i, j in enumerate(pi)) for pi in itertools.permutations(range(1, p + 1))]


def _row_families(p, q):
    """Table of block sizes -> number of functions [q] -> S_p producing it."""
    cells = _perm_cells(p)
    counts = defaultdict(int)
    table = [0] * (p * p)

    def rec(x):
        if x == q:
            counts[tuple(table)] += 1
            return
        for cs in cells:
            for c in cs:
                table[c] += 1
            rec(x + 1)
            for c in cs:
                table[c] -= 1

    # past this size, enumerate choice multisets weighted by their orderings
    if len(cells) ** q <= 200_000:
        rec(0)
        return counts
    return _row_families_multiset(cells, p, q)


def _row_families_multiset(cells, p, q):
    counts = defaultdict(int)
    table = [0] * (p * p)
    chosen = [0] * len(cells)

    def rec(k, remaining):
        if k == len(cells) - 1:
            chosen[k] = remaining
            for c in cells[k]:
                table[c] += remaining
            weight, total = 1, 0
            for m in chosen:
                total += m
                weight *= math.comb(total, m)
            counts[tuple(table)] += weight
            for c in cells[k]:
                table[c] -= remaining
            return
        for m in range(remaining + 1):
            chosen[k] = m
            for c in cells[k]:
                table[c] += m
            rec(k + 1, remaining - m)
            for c in cells[k]:
                table[c] -= m

    rec(0, q)
    return counts


def _column_family_counter(p):
    cells = _perm_cells(p)

    @lru_cache(maxsize=None)
    def fill(residual):
        """Functions [k] -> S_p whose induced table is exactly ``residual``."""
        if not any(residual):
            return 1
        # element k is placed first; propagate: any cell at 0 rules out perms
        # through it, so branches that would go negative are cut immediately
        total = 0
        for cs in cells:
            if all(residual[c] for c in cs):
                nxt = list(residual)
                for c in cs:
                    nxt[c] -= 1
                total += fill(tuple(nxt))
        return total

    return fill


def count_Z_backtrack(p, q, max_p: int | None = BACKTRACK_MAX_P) -> CountReport:
    """Count Z(p, q) from block-size data without scanning S_pq."""
    _shape(p, q)
    if max_p is not None and p > max_p:
        raise GuardError(f"p = {p} exceeds the backtrack guard p <= {max_p}")
    t0 = time.perf_counter()
    fill = _column_family_counter(p)
    value = 0
    for table, n_rows in _row_families(p, q).items():
        n_cols = fill(table)
        if n_cols:
            placements = 1
            for r in table:
                placements *= math.factorial(r)
            value += n_rows * n_cols * placements
    return CountReport("z", p, q, "backtrack", value, time.perf_counter() - t0)
