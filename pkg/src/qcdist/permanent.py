"""Exact matrix permanents over the integers and over GF(2)[x]/(x^N - 1).

The integer permanent uses inclusion-exclusion over row subsets walked in
Gray-code order, so a J x J matrix costs O(2^J * J) arbitrary-precision
operations and never overflows.  Over the ring the same identity holds
with every sign equal to +1 (characteristic two), and the permanent
coincides with the determinant.

For the distance bounds we repeatedly need the whole cofactor family of
a J x (J+1) matrix, i.e. the permanent of the matrix with column i
deleted for every i.  ``perm_cofactor_family`` computes all J+1 values in
a single pass over the row subsets by combining prefix and suffix
products of the column sums, instead of J+1 independent evaluations.
"""

from __future__ import annotations

from typing import Sequence, overload

from .matrix import PolyMatrix, WeightMatrix
from .ring import RingPoly, _mul_bits


def _int_rows(b: WeightMatrix | Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    if isinstance(b, WeightMatrix):
        return [tuple(row) for row in b.rows]
    rows = [tuple(int(v) for v in row) for row in b]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("ragged rows")
    return rows


def _ring_rows(b: PolyMatrix | Sequence[Sequence[RingPoly]]) -> tuple[int, list[tuple[int, ...]]]:
    if isinstance(b, PolyMatrix):
        return b.n, [tuple(p.bits for p in row) for row in b.rows]
    rows = [tuple(row) for row in b]
    if not rows or not rows[0]:
        raise ValueError("empty matrix")
    n = rows[0][0].n
    for row in rows:
        if len(row) != len(rows[0]):
            raise ValueError("ragged rows")
        for p in row:
            if p.n != n:
                raise ValueError("mixed moduli in polynomial matrix")
    return n, [tuple(p.bits for p in row) for row in rows]


def perm_int(b: WeightMatrix | Sequence[Sequence[int]]) -> int:
    """Exact permanent of a square nonnegative integer matrix."""
    rows = _int_rows(b)
    j = len(rows)
    if j == 0:
        return 1
    if len(rows[0]) != j:
        raise ValueError(f"permanent needs a square matrix, got {j} x {len(rows[0])}")
    return _perm_int_rows(rows)


def _perm_int_rows(rows: Sequence[Sequence[int]]) -> int:
    j = len(rows)
    if any(not any(row) for row in rows):
        return 0
    for c in range(j):
        if all(row[c] == 0 for row in rows):
            return 0
    # Inclusion-exclusion over row subsets, Gray-code order: one row enters
    # or leaves the running column sums per step.
    sums = [0] * j
    total = 0
    prev_gray = 0
    for t in range(1, 1 << j):
        gray = t ^ (t >> 1)
        changed = gray ^ prev_gray
        idx = changed.bit_length() - 1
        row = rows[idx]
        if gray & changed:
            for c in range(j):
                sums[c] += row[c]
        else:
            for c in range(j):
                sums[c] -= row[c]
        prev_gray = gray
        prod = 1
        for c in range(j):
            s = sums[c]
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            if (j - gray.bit_count()) & 1:
                total -= prod
            else:
                total += prod
    return total


def perm_ring(b: PolyMatrix | Sequence[Sequence[RingPoly]]) -> RingPoly:
    """Exact permanent of a square matrix over GF(2)[x]/(x^N - 1)."""
    n, rows = _ring_rows(b)
    j = len(rows)
    if len(rows[0]) != j:
        raise ValueError(f"permanent needs a square matrix, got {j} x {len(rows[0])}")
    return RingPoly(n, _perm_ring_rows(rows, n))


def _perm_ring_rows(rows: Sequence[Sequence[int]], n: int) -> int:
    """Permanent of a square grid of coefficient bitmasks; returns bits."""
    j = len(rows)
    if j == 0:
        return 1
    if any(not any(row) for row in rows):
        return 0
    for c in range(j):
        if all(row[c] == 0 for row in rows):
            return 0
    sums = [0] * j
    acc = 0
    prev_gray = 0
    for t in range(1, 1 << j):
        gray = t ^ (t >> 1)
        changed = gray ^ prev_gray
        idx = changed.bit_length() - 1
        row = rows[idx]
        for c in range(j):
            sums[c] ^= row[c]
        prev_gray = gray
        prod = 1
        for c in range(j):
            s = sums[c]
            if s == 0:
                prod = 0
                break
            prod = _mul_bits(prod, s, n)
            if prod == 0:
                break
        acc ^= prod
    return acc


@overload
def perm_cofactor_family(b: WeightMatrix) -> list[int]: ...
@overload
def perm_cofactor_family(b: PolyMatrix) -> list[RingPoly]: ...


def perm_cofactor_family(b):
    """Permanents of a J x (J+1) matrix with each column deleted in turn.

    Element i of the result is the permanent of ``b`` without column i.
    Integer and polynomial matrices are both accepted; the values match
    J+1 independent permanent calls but share one subset pass.
    """
    if isinstance(b, PolyMatrix) or _looks_like_ring(b):
        n, rows = _ring_rows(b)
        _check_family_shape(rows)
        return [RingPoly(n, bits) for bits in _family_ring_rows(rows, n)]
    rows = _int_rows(b)
    _check_family_shape(rows)
    return _family_int_rows(rows)


def _looks_like_ring(b) -> bool:
    try:
        first = b[0][0]
    except (TypeError, IndexError, KeyError):
        return False
    return isinstance(first, RingPoly)


def _check_family_shape(rows: Sequence[Sequence]) -> None:
    j = len(rows)
    if j == 0 or len(rows[0]) != j + 1:
        w = len(rows[0]) if rows else 0
        raise ValueError(f"cofactor family needs a J x (J+1) matrix, got {j} x {w}")


def _family_int_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    j = len(rows)
    w = j + 1
    if any(not any(row) for row in rows):
        return [0] * w
    totals = [0] * w
    sums = [0] * w
    prev_gray = 0
    pre = [1] * (w + 1)
    suf = [1] * (w + 1)
    for t in range(1, 1 << j):
        gray = t ^ (t >> 1)
        changed = gray ^ prev_gray
        idx = changed.bit_length() - 1
        row = rows[idx]
        if gray & changed:
            for c in range(w):
                sums[c] += row[c]
        else:
            for c in range(w):
                sums[c] -= row[c]
        prev_gray = gray
        # pre[i] = product of sums[:i], suf[i] = product of sums[i:].
        for c in range(w):
            pre[c + 1] = pre[c] * sums[c]
        suf[w] = 1
        for c in range(w - 1, -1, -1):
            suf[c] = sums[c] * suf[c + 1]
        negative = (j - gray.bit_count()) & 1
        for c in range(w):
            prod = pre[c] * suf[c + 1]
            if prod:
                if negative:
                    totals[c] -= prod
                else:
                    totals[c] += prod
    return totals


def _family_ring_rows(rows: Sequence[Sequence[int]], n: int) -> list[int]:
    j = len(rows)
    w = j + 1
    if any(not any(row) for row in rows):
        return [0] * w
    totals = [0] * w
    sums = [0] * w
    prev_gray = 0
    pre = [1] * (w + 1)
    suf = [1] * (w + 1)
    for t in range(1, 1 << j):
        gray = t ^ (t >> 1)
        changed = gray ^ prev_gray
        idx = changed.bit_length() - 1
        row = rows[idx]
        for c in range(w):
            sums[c] ^= row[c]
        prev_gray = gray
        for c in range(w):
            pre[c + 1] = _mul_bits(pre[c], sums[c], n) if pre[c] and sums[c] else 0
        suf[w] = 1
        for c in range(w - 1, -1, -1):
            suf[c] = _mul_bits(sums[c], suf[c + 1], n) if sums[c] and suf[c + 1] else 0
        for c in range(w):
            if pre[c] and suf[c + 1]:
                totals[c] ^= _mul_bits(pre[c], suf[c + 1], n)
    return totals
