"""Permutations, 0/1 matrices and the two block transposes.

All indices exposed to callers are 1-based.  Matrices are dense ``numpy``
arrays of dtype ``uint8``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BlockShape",
    "ShapeError",
    "as_permutation",
    "block_decompose",
    "column_index_sum",
    "full_transpose",
    "identity",
    "inner_partial_transpose",
    "is_permutation_matrix",
    "is_symmetric",
    "matrix_to_permutation",
    "outer_block_transpose",
    "perm_matrix",
    "profile",
    "profile_sum",
    "row_index_sum",
    "shuffle_conjugate",
    "stride_decompose",
]


class ShapeError(ValueError):
    """Raised when a matrix or permutation does not fit a block shape."""


@dataclass(frozen=True)
class BlockShape:
    """Factorization ``n = p * q``: a ``p x p`` grid of ``q x q`` blocks."""

    p: int
    q: int

    def __post_init__(self):
        if int(self.p) != self.p or int(self.q) != self.q or self.p < 1 or self.q < 1:
            raise ShapeError(f"p and q must be positive integers, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def swapped(self) -> "BlockShape":
        return BlockShape(self.q, self.p)

    def _check(self, r):
        if not 1 <= r <= self.n:
            raise IndexError(f"index {r} outside [1, {self.n}]")

    def block_decompose(self, r: int) -> tuple[int, int]:
        """``r = (block - 1) * q + offset`` with block in [p], offset in [q]."""
        self._check(r)
        u, i = divmod(r - 1, self.q)
        return u + 1, i + 1

    def block_compose(self, block: int, offset: int) -> int:
        if not (1 <= block <= self.p and 1 <= offset <= self.q):
            raise IndexError(f"(block, offset) = ({block}, {offset}) outside [{self.p}]x[{self.q}]")
        return (block - 1) * self.q + offset

    def stride_decompose(self, r: int) -> tuple[int, int]:
        """``r = a * p + i`` with ``a`` in {0, ..., q-1} and ``i`` in [p]."""
        self._check(r)
        a, i = divmod(r - 1, self.p)
        return a, i + 1

    def stride_compose(self, a: int, i: int) -> int:
        if not (0 <= a < self.q and 1 <= i <= self.p):
            raise IndexError(f"(a, i) = ({a}, {i}) outside {{0..{self.q - 1}}}x[{self.p}]")
        return a * self.p + i


def block_decompose(r, shape):
    return shape.block_decompose(r)


def stride_decompose(r, shape):
    return shape.stride_decompose(r)


def as_permutation(word) -> tuple[int, ...]:
    """Normalize a one-line word to a tuple of 1-based ints.

    Accepts a sequence of ints, a digit string such as ``"3142"`` (n <= 9)
    or a comma separated string such as ``"10,1,2,...``.
    """
    if isinstance(word, str):
        text = word.strip()
        if "," in text or " " in text:
            parts = [t for t in text.replace(",", " ").split() if t]
        else:
            parts = list(text)
        try:
            values = tuple(int(t) for t in parts)
        except ValueError:
            raise ValueError(f"malformed permutation word {word!r}") from None
    else:
        values = tuple(int(v) for v in word)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"{word!r} is not a permutation of 1..{len(values)}")
    return values


def perm_matrix(word) -> np.ndarray:
    """Permutation matrix with ``P[i, pi(i)] = 1``."""
    pi = as_permutation(word)
    n = len(pi)
    m = np.zeros((n, n), dtype=np.uint8)
    m[np.arange(n), np.asarray(pi) - 1] = 1
    return m


def identity(n) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def matrix_to_permutation(m) -> tuple[int, ...]:
    if not is_permutation_matrix(m):
        raise ValueError("matrix is not a permutation matrix")
    return tuple(int(c) + 1 for c in np.argmax(m, axis=1))


def _as_binary(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    if not np.isin(m, (0, 1)).all():
        raise ValueError("matrix entries must be 0 or 1")
    return m.astype(np.uint8, copy=False)


def _blocks(m, shape):
    m = _as_binary(m)
    if m.shape[0] != shape.n:
        raise ShapeError(f"matrix side {m.shape[0]} does not match n = {shape.p}*{shape.q}")
    # axes: (block row, offset row, block col, offset col)
    return m.reshape(shape.p, shape.q, shape.p, shape.q)


def inner_partial_transpose(m, shape: BlockShape) -> np.ndarray:
    """Transpose each ``q x q`` block in place."""
    return np.ascontiguousarray(_blocks(m, shape).transpose(0, 3, 2, 1)).reshape(shape.n, shape.n)


def outer_block_transpose(m, shape: BlockShape) -> np.ndarray:
    """Move block ``(u, v)`` to ``(v, u)`` without touching block interiors."""
    return np.ascontiguousarray(_blocks(m, shape).transpose(2, 1, 0, 3)).reshape(shape.n, shape.n)


def full_transpose(m) -> np.ndarray:
    return np.ascontiguousarray(_as_binary(m).T)


def is_permutation_matrix(m) -> bool:
    m = _as_binary(m)
    return bool((m.sum(axis=0) == 1).all() and (m.sum(axis=1) == 1).all())


def is_symmetric(m) -> bool:
    m = _as_binary(m)
    return bool((m == m.T).all())


def profile(m) -> tuple[int, ...]:
    """Column indices (1-based) of the 1-entries, scanned row by row."""
    rows, cols = np.nonzero(_as_binary(m))
    return tuple(int(c) + 1 for c in cols)


def profile_sum(m) -> int:
    return sum(profile(m))


def column_index_sum(m) -> int:
    return profile_sum(m)


def row_index_sum(m) -> int:
    rows, _ = np.nonzero(_as_binary(m))
    return int(rows.sum()) + len(rows)


def shuffle_conjugate(word, shape: BlockShape) -> tuple[int, ...]:
    """Reindex a permutation by the perfect shuffle ``a*p + i -> (i-1)*q + a + 1``.

    A 1-entry at ``(a*p + i, b*p + j)`` moves to ``((i-1)*q + a + 1, (j-1)*q + b + 1)``.
    The inverse is ``shuffle_conjugate(., shape.swapped)``.  Because the stride
    reading views the input as ``q x q`` blocks of side ``p``, the map carries
    the ``Gamma`` property for shape ``(q, p)`` to shape ``(p, q)``.
    """
    pi = as_permutation(word)
    if len(pi) != shape.n:
        raise ShapeError(f"permutation of length {len(pi)} does not match n = {shape.n}")
    out = [0] * shape.n
    for r, c in enumerate(pi, start=1):
        a, i = shape.stride_decompose(r)
        b, j = shape.stride_decompose(c)
        out[(i - 1) * shape.q + a] = (j - 1) * shape.q + b + 1
    return tuple(out)


def permutations_to_array(words: Iterable[Sequence[int]], n: int) -> np.ndarray:
    """Stack 1-based words into a 0-based ``(m, n)`` integer array."""
    arr = np.array(list(words), dtype=np.int64).reshape(-1, n)
    return arr - 1
