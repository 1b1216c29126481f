"""Exact integer matrix helpers.

Matrices are tuples of row tuples of Python ints, so arithmetic never
overflows. Only what the homology checks need is here: products, rank,
an integer kernel basis and a row Hermite normal form for comparing lattices.
"""

from __future__ import annotations

from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matpow(a: Matrix, n: int) -> Matrix:
    """Non-negative integer power by repeated squaring."""
    if n < 0:
        raise ValueError("negative power")
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def matadd(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def outer(u: Sequence[int], v: Sequence[int]) -> Matrix:
    return tuple(tuple(x * y for y in v) for x in u)


def scale(c: int, a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def is_zero(a: Sequence[Sequence[int]], modulus: int | None = None) -> bool:
    if modulus is None:
        return all(x == 0 for row in a for x in row)
    return all(x % modulus == 0 for row in a for x in row)


def _echelon(rows: list[list[int]], ncols: int, track: list[list[int]] | None = None) -> int:
    """Row-reduce in place with unimodular operations; return the pivot count.

    ``track`` rows receive the same operations (used to recover kernels).
    After the call the first ``rank`` rows are in echelon form and the rest
    are zero.
    """
    pivot = 0
    for col in range(ncols):
        if pivot == len(rows):
            break
        while True:
            nonzero = [i for i in range(pivot, len(rows)) if rows[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[pivot], rows[best] = rows[best], rows[pivot]
            if track is not None:
                track[pivot], track[best] = track[best], track[pivot]
            done = True
            p = rows[pivot][col]
            for i in range(pivot + 1, len(rows)):
                x = rows[i][col]
                if x == 0:
                    continue
                q = x // p
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot])]
                if track is not None:
                    track[i] = [a - q * b for a, b in zip(track[i], track[pivot])]
                if rows[i][col] != 0:
                    done = False
            if done:
                break
        if any(rows[i][col] != 0 for i in range(pivot, len(rows))):
            pivot += 1
    return pivot


def rank(a: Sequence[Sequence[int]]) -> int:
    if not a:
        return 0
    rows = [list(r) for r in a]
    return _echelon(rows, len(rows[0]))


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of ``{x in Z^ncols : a x = 0}``.

    Works on the transpose: row operations on ``a^T`` are column operations
    on ``a``, and the identity block records them. Rows whose ``a^T`` part
    vanishes are kernel vectors; unimodularity makes them a lattice basis.
    """
    at = [list(col) for col in transpose(a)] if a else [[] for _ in range(ncols)]
    track = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    r = _echelon(at, len(a), track)
    return [tuple(track[i]) for i in range(r, ncols)]


def hnf(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows dropped, pivots positive, entries above each pivot reduced
    into ``[0, pivot)``. Two row sets span the same lattice iff their HNFs
    are equal.
    """
    work = [list(r) for r in rows]
    r = _echelon(work, ncols)
    work = work[:r]
    pivots = []
    for i, row in enumerate(work):
        col = next(c for c, x in enumerate(row) if x != 0)
        if row[col] < 0:
            work[i] = row = [-x for x in row]
        pivots.append(col)
    for i, col in enumerate(pivots):
        p = work[i][col]
        for k in range(i):
            q = work[k][col] // p
            if q:
                work[k] = [a - q * b for a, b in zip(work[k], work[i])]
    return tuple(tuple(row) for row in work)
