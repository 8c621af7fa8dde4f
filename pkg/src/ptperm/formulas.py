"""Exact evaluators for the closed forms and composition sums.

Every value is a Python ``int``; nothing on a counting path touches floats.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from functools import lru_cache

MAX_P = 5

__all__ = [
    "MAX_P",
    "Z2_closed",
    "Z_formula",
    "Ze2_closed",
    "Ze_formula",
    "Zt_closed",
    "Zt_corollaries",
    "binomial",
    "enumerate_compositions",
    "factorial",
    "marginal_table",
    "multinomial",
    "perms_of",
    "telephone",
    "telephone_sum",
]


def factorial(m: int) -> int:
    return math.factorial(m)


def binomial(m: int, k: int) -> int:
    # math.comb already returns 0 for k > m
    return math.comb(m, k)


def multinomial(parts) -> int:
    """``(sum parts)! / prod(part!)``."""
    total, out = 0, 1
    for k in parts:
        total += k
        out *= math.comb(total, k)
    return out


def telephone_sum(q: int) -> int:
    """Involution count as a sum over the number of moved points."""
    return sum(
        math.comb(q, j) * math.factorial(j) // (2 ** (j // 2) * math.factorial(j // 2))
        for j in range(0, q + 1, 2)
    )


@lru_cache(maxsize=None)
def _telephone_table(q):
    vals = [1, 1]
    for k in range(1, q):
        vals.append(vals[k] + k * vals[k - 1])
    return tuple(vals)


def telephone(q: int, check: bool = False) -> int:
    """Number of involutions of ``[q]`` (identity included), by recurrence.

    ``I(0) = I(1) = 1`` and ``I(k+1) = I(k) + k I(k-1)``.  With ``check`` the
    value is compared against :func:`telephone_sum`.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    value = _telephone_table(max(q, 1))[q]
    if check and value != telephone_sum(q):
        raise ArithmeticError(f"telephone recurrence and sum disagree at q={q}")
    return value


@lru_cache(maxsize=None)
def perms_of(p: int) -> tuple[tuple[int, ...], ...]:
    """All permutations of [p] (1-based words) in lexicographic order."""
    return tuple(itertools.permutations(range(1, p + 1)))


def _check_p(p):
    if p < 1:
        raise ValueError("p must be positive")
    if p > MAX_P:
        raise ValueError(f"p = {p} exceeds the composition guard p <= {MAX_P}")


def enumerate_compositions(p: int, q: int):
    """Yield every nonnegative vector over ``perms_of(p)`` summing to ``q``.

    Vectors are tuples aligned with ``perms_of(p)``.  There are
    ``binomial(q + p! - 1, p! - 1)`` of them.
    """
    _check_p(p)
    if q < 0:
        raise ValueError("q must be nonnegative")
    parts = len(perms_of(p))

    def rec(k, remaining):
        if k == parts - 1:
            yield (remaining,)
            return
        for v in range(remaining, -1, -1):
            for tail in rec(k + 1, remaining - v):
                yield (v,) + tail

    yield from rec(0, q)


def marginal_table(a, p: int | None = None) -> tuple[tuple[int, ...], ...]:
    """``r[i][j] = sum of a[pi] over pi with pi(i) = j`` (0-based tuple grid)."""
    if p is None:
        p = next(k for k in range(1, MAX_P + 1) if math.factorial(k) == len(a))
    perms = perms_of(p)
    if len(a) != len(perms):
        raise ValueError(f"vector of length {len(a)} does not match {p}! permutations")
    r = [[0] * p for _ in range(p)]
    for pi, weight in zip(perms, a):
        if weight < 0:
            raise ValueError("composition entries must be nonnegative")
        if weight:
            for i, j in enumerate(pi):
                r[i][j - 1] += weight
    return tuple(tuple(row) for row in r)


def _class_weights(p, q):
    """Group compositions by marginal table: table -> sum of multinomials."""
    weights = defaultdict(int)
    for a in enumerate_compositions(p, q):
        weights[marginal_table(a, p)] += multinomial(a)
    return weights


def Z_formula(p: int, q: int) -> int:
    """Permutations of ``[pq]`` whose partial transpose is again a permutation.

    Sum over pairs ``(a, b)`` of compositions with equal marginal tables of
    ``q!^2 / prod(a!) prod(b!) * prod r_ij!``.  Grouping by table turns the
    pair sum into ``sum_T w(T)^2 prod T_ij!``.
    """
    _check_p(p)
    total = 0
    for table, w in _class_weights(p, q).items():
        placements = 1
        for row in table:
            for r in row:
                placements *= math.factorial(r)
        total += w * w * placements
    return total


def Ze_formula(p: int, q: int) -> int:
    """Permutations of ``[pq]`` fixed by the partial transpose.

    ``sum_a q!/prod(a!) * prod I(r_ij)`` with ``I`` the involution count.
    """
    _check_p(p)
    total = 0
    for a in enumerate_compositions(p, q):
        term = multinomial(a)
        for row in marginal_table(a, p):
            for r in row:
                term *= telephone(r)
        total += term
    return total


def Z2_closed(q: int) -> int:
    return math.factorial(q) * math.factorial(q + 1)


def Ze2_closed(q: int, variant: str = "corrected") -> int:
    """Closed form for ``p = 2``.

    ``"printed"`` squares the binomial, ``"corrected"`` uses it once (the form
    that agrees with :func:`Ze_formula`).  The two differ from ``q = 2`` on.
    """
    if variant == "printed":
        power = 2
    elif variant == "corrected":
        power = 1
    else:
        raise ValueError(f"unknown variant {variant!r}; expected 'printed' or 'corrected'")
    return sum(
        math.comb(q, r) ** power * telephone(r) ** 2 * telephone(q - r) ** 2
        for r in range(q + 1)
    )


def Zt_closed(p: int, q: int) -> int:
    """``2p C(q,2) + 2q C(p,2)``, evaluated as printed for every shape."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    return 2 * p * math.comb(q, 2) + 2 * q * math.comb(p, 2)


def Zt_corollaries(q: int) -> tuple[int, int]:
    """``(q(q+1)(2q-1), 2(q^3 - q^2))``: the ``(q+1, q)`` and ``(q, q)`` values."""
    if q < 1:
        raise ValueError("q must be positive")
    return q * (q + 1) * (2 * q - 1), 2 * (q**3 - q**2)
