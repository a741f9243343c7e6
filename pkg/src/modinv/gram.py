"""Factorization of integer Gram matrices as b^t b with non-negative integer b.

Rows of ``b`` model irreducible sectors, columns the (reducible) objects whose
pairings form the Gram matrix.  The search adds one column at a time:
the new column takes values on the existing rows that reproduce its pairings
with every earlier column, and whatever norm is left over goes to fresh rows
holding a partition of the remainder into squares.  Rows that agree on all
processed columns are interchangeable, so their values in the new column are
kept non-increasing; that removes permuted duplicates during the search.
"""
from __future__ import annotations

import math
from typing import Iterator, Sequence

import numpy as np

from .errors import FactorizationError

__all__ = ["gram_factorize", "extend_column", "square_partitions", "canonical_rows"]


def square_partitions(q: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples (y1, y2, ...) of positive ints with sum y_i^2 = q."""
    if q == 0:
        yield ()
        return
    top = math.isqrt(q) if largest is None else min(largest, math.isqrt(q))
    for y in range(top, 0, -1):
        for rest in square_partitions(q - y * y, y):
            yield (y,) + rest


def extend_column(
    rows: Sequence[Sequence[int]],
    targets: Sequence[int],
    norm: int | None,
    max_norm: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Non-negative x with sum_r x_r rows[r][j] = targets[j] for all j.

    With ``norm`` set, also |x|^2 <= norm (the caller fills the rest with new
    rows); otherwise |x|^2 <= ``max_norm`` if given.  Runs of identical
    adjacent rows get non-increasing x.
    """
    R = len(rows)
    J = len(targets)
    limit = norm if norm is not None else max_norm
    last_row = [-1] * J
    for r in range(R):
        for j in range(J):
            if rows[r][j]:
                last_row[j] = r
    for j in range(J):
        if last_row[j] == -1 and targets[j] != 0:
            return
    finishing = [[] for _ in range(R)]
    for j in range(J):
        if last_row[j] >= 0:
            finishing[last_row[j]].append(j)
    same_as_prev = [r > 0 and list(rows[r]) == list(rows[r - 1]) for r in range(R)]
    rem = list(targets)
    x = [0] * R

    def rec(r: int, budget) -> Iterator[tuple[int, ...]]:
        if r == R:
            yield tuple(x)
            return
        row = rows[r]
        hi = math.isqrt(budget) if budget is not None else None
        for j in range(J):
            c = row[j]
            if c:
                cap = rem[j] // c
                hi = cap if hi is None else min(hi, cap)
        if hi is None:
            hi = 0
        if same_as_prev[r]:
            hi = min(hi, x[r - 1])
        for v in range(hi, -1, -1):
            for j in range(J):
                if row[j]:
                    rem[j] -= v * row[j]
            if all(rem[j] == 0 for j in finishing[r]):
                x[r] = v
                yield from rec(r + 1, None if budget is None else budget - v * v)
            for j in range(J):
                if row[j]:
                    rem[j] += v * row[j]
        x[r] = 0

    yield from rec(0, limit)


def canonical_rows(b: np.ndarray) -> np.ndarray:
    """Rows sorted in decreasing lexicographic order."""
    if b.shape[0] == 0:
        return b
    keys = [tuple(int(v) for v in row) for row in b]
    order = sorted(range(len(keys)), key=lambda i: keys[i], reverse=True)
    return b[order]


def gram_factorize(
    G,
    column_order: Sequence[int] | None = None,
    limit: int | None = None,
) -> list[np.ndarray]:
    """All b >= 0 (integer, no zero rows) with b^t b = G, up to row permutation.

    Columns are processed by increasing diagonal entry unless ``column_order``
    is given.  Each factorization is returned with rows in decreasing
    lexicographic order; the list is sorted and free of duplicates.
    """
    G = np.asarray(G, dtype=np.int64)
    n = G.shape[0]
    if G.shape != (n, n) or not np.array_equal(G, G.T):
        raise FactorizationError("Gram matrix must be square and symmetric")
    if (G < 0).any():
        raise FactorizationError("Gram matrix has negative entries")
    order = list(column_order) if column_order is not None else sorted(range(n), key=lambda c: (G[c, c], c))
    if sorted(order) != list(range(n)):
        raise ValueError("column_order must be a permutation of the columns")

    results: dict[bytes, np.ndarray] = {}
    # rows[r] holds values on the processed columns (in processing order)
    rows: list[list[int]] = []

    def rec(step: int) -> bool:
        if step == n:
            b = np.zeros((len(rows), n), dtype=np.int64)
            for r, vals in enumerate(rows):
                for pos, c in enumerate(order):
                    b[r, c] = vals[pos]
            b = canonical_rows(b)
            results.setdefault(b.tobytes() + bytes(str(b.shape), "ascii"), b)
            return limit is not None and len(results) >= limit
        c = order[step]
        targets = [int(G[c, order[p]]) for p in range(step)]
        norm = int(G[c, c])
        for x in extend_column(rows, targets, norm):
            rest = norm - sum(v * v for v in x)
            for ys in square_partitions(rest):
                for r, v in enumerate(x):
                    rows[r].append(v)
                for y in ys:
                    rows.append([0] * step + [y])
                stop = rec(step + 1)
                for _ in ys:
                    rows.pop()
                for r in range(len(x)):
                    rows[r].pop()
                if stop:
                    return True
        return False

    rec(0)
    return sorted(results.values(), key=lambda b: (b.shape[0], [tuple(r) for r in b.tolist()]))
