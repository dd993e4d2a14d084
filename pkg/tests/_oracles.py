"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the production code paths: the
naive permanent walks all J! permutations of the defining sum, the ring
permanent uses recursive Laplace expansion along the first row, the
matrix-action oracle multiplies circulant matrices entry by entry, the
distance oracle enumerates the full 2^n vector space, and the bound
oracle drives the candidate generator with per-candidate cofactor
families.  Agreement between these and the fast paths is what the tests
assert.
"""

from __future__ import annotations

import itertools
import random

from qcdist.bounds import BoundQuery, enumerate_candidates
from qcdist.expansion import ShiftAssignment, expand, lift_puncture, to_scalar
from qcdist.matrix import PolyMatrix, PunctureSet, WeightMatrix
from qcdist.permanent import perm_cofactor_family
from qcdist.ring import RingPoly


def naive_perm_int(rows) -> int:
    """Permanent straight from the defining sum over permutations."""
    rows = [list(r) for r in rows]
    j = len(rows)
    total = 0
    for sigma in itertools.permutations(range(j)):
        prod = 1
        for r in range(j):
            prod *= rows[r][sigma[r]]
        total += prod
    return total


def naive_perm_ring(rows) -> RingPoly:
    """Ring permanent by recursive Laplace expansion along the first row."""
    rows = [list(r) for r in rows]
    n = rows[0][0].n
    if len(rows) == 1:
        return rows[0][0]
    acc = RingPoly.zero(n)
    rest = rows[1:]
    for c, cell in enumerate(rows[0]):
        if cell.is_zero:
            continue
        minor = [row[:c] + row[c + 1 :] for row in rest]
        acc = acc + cell * naive_perm_ring(minor)
    return acc


def full_space_min_distance(bits: list[int], n: int, tmask: int) -> int | None:
    """Minimum transmitted weight by scanning all 2^n vectors (n <= 20)."""
    best = None
    for v in range(1, 1 << n):
        if any((row & v).bit_count() & 1 for row in bits):
            continue
        w = (v & tmask).bit_count()
        if best is None or w < best:
            best = w
    return best


def reference_bound(a: WeightMatrix, p: PunctureSet, max_removed: int):
    """Slow re-implementation of the bound search on top of the candidate
    generator and per-candidate cofactor families.

    Returns (value or None, witness_s, witness_t, examined, zero,
    transmitted_zero).
    """
    q = BoundQuery(a, p, max_removed_rows=max_removed)
    best = None
    examined = zero = trans_zero = 0
    for s, t in enumerate_candidates(q):
        examined += 1
        reduced = a.remove_rows(t) if t else a
        fam = perm_cofactor_family(reduced.select_columns(s))
        full = sum(fam)
        trans = sum(v for c, v in zip(s, fam) if c not in p)
        if trans == 0:
            if full == 0:
                zero += 1
            else:
                trans_zero += 1
            continue
        key = (trans, t, s)
        if best is None or key < best:
            best = key
    if best is None:
        return None, None, None, examined, zero, trans_zero
    value, t, s = best
    return value, s, t, examined, zero, trans_zero


def random_poly(rng: random.Random, n: int, max_weight: int | None = None) -> RingPoly:
    cap = n if max_weight is None else min(n, max_weight)
    w = rng.randint(0, cap)
    return RingPoly.from_exponents(n, rng.sample(range(n), w))


def random_instance(rng: random.Random, max_entry: int = 3):
    """Random (PolyMatrix, PunctureSet) in the small-instance family.

    J in {2,3,4}, L in {J+1..7}, N in {3..8}, entries at most
    ``max_entry`` with no all-zero column, and a random puncture set of
    size below J.
    """
    j = rng.randint(2, 4)
    l = rng.randint(j + 1, 7)
    n = rng.randint(3, 8)
    while True:
        weights = [[rng.choice((0, 0, 1, 1, 2, max_entry)) for _ in range(l)] for _ in range(j)]
        if all(any(weights[r][c] for r in range(j)) for c in range(l)):
            if all(w <= n for row in weights for w in row):
                break
    cells = tuple(
        tuple(tuple(sorted(rng.sample(range(n), weights[r][c]))) for c in range(l))
        for r in range(j)
    )
    h = expand(
        WeightMatrix.from_rows(weights),
        ShiftAssignment(n, cells),
        n,
    )
    p_size = rng.randint(0, j - 1)
    p = PunctureSet.from_iterable(rng.sample(range(l), p_size))
    return h, p


def scalar_rows(h: PolyMatrix) -> tuple[list[int], int]:
    scalar = to_scalar(h)
    return list(scalar.bits), scalar.n


def transmitted_mask(h: PolyMatrix, p: PunctureSet) -> int:
    lifted = lift_puncture(p, h.n)
    mask = (1 << (h.l * h.n)) - 1
    for c in lifted.columns:
        mask ^= 1 << c
    return mask
