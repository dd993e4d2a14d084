"""Brute-force minimum distance of small expanded codes.

The polynomial matrix is flattened to its scalar parity-check matrix,
a nullspace basis is computed by Gaussian elimination over GF(2) with
bitmask rows, and every nonzero codeword is enumerated by incremental
basis-vector XORs.  For code dimension k the enumeration costs 2^k - 1
cheap steps; anything above the dimension cap is refused rather than
approximated.

Puncturing keeps the parity checks intact but drops columns from the
weight accounting.  The distance of the punctured code is well defined
only when no nonzero codeword is supported entirely on the punctured
columns, which holds exactly when those columns of H are linearly
independent; otherwise the result is flagged and the distance reported
as undefined, with an offending codeword as the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .expansion import lift_puncture, to_scalar
from .matrix import PolyMatrix, PunctureSet

DEFAULT_DIMENSION_CAP = 28


class DimensionCapExceeded(RuntimeError):
    """Code dimension is above the enumeration cap."""


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exhaustive distance search."""

    code_length: int
    rank: int
    dimension_k: int
    min_distance: int | None
    dimensionality_preserved: bool
    witness_support: tuple[int, ...] | None
    codewords_enumerated: int

    def to_json_dict(self) -> dict:
        return {
            "code_length": self.code_length,
            "rank": self.rank,
            "dimension_k": self.dimension_k,
            "min_distance": self.min_distance,
            "dimensionality_preserved": self.dimensionality_preserved,
            "witness_support": list(self.witness_support)
            if self.witness_support is not None
            else None,
            "codewords_enumerated": self.codewords_enumerated,
        }


def gf2_row_reduce(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bitmask rows; returns (rows, pivot cols)."""
    mat = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(mat):
            break
        bit = 1 << c
        pivot = next((i for i in range(r, len(mat)) if mat[i] & bit), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and (mat[i] & bit):
                mat[i] ^= mat[r]
        pivots.append(c)
        r += 1
    return [row for row in mat[:r] if row], pivots


def gf2_rank(rows: list[int], ncols: int) -> int:
    return len(gf2_row_reduce(rows, ncols)[0])


def gf2_nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of the right nullspace as bitmasks of length ncols."""
    rref, pivots = gf2_row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        fbit = 1 << free
        for row, pcol in zip(rref, pivots):
            if row & fbit:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


def _to_words(value: int, nwords: int) -> np.ndarray:
    out = np.zeros(nwords, dtype=np.uint64)
    for w in range(nwords):
        out[w] = (value >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def _from_words(words: np.ndarray) -> int:
    value = 0
    for w, word in enumerate(words):
        value |= int(word) << (64 * w)
    return value


def _min_transmitted(basis: list[int], ncols: int, tmask: int) -> tuple[int, int, int]:
    """Minimum transmitted weight over all nonzero basis combinations.

    Returns (weight, witness bits, codewords enumerated).  The space is
    split into a table of all combinations of the low basis vectors,
    updated in place by Gray-code steps over the high vectors, so each
    codeword costs one XOR and one popcount.
    """
    k = len(basis)
    nwords = max(1, (ncols + 63) // 64)
    low_bits = min(k, 18)
    table = np.zeros((1, nwords), dtype=np.uint64)
    for vec in basis[:low_bits]:
        table = np.vstack([table, table ^ _to_words(vec, nwords)])
    tmask_words = _to_words(tmask, nwords)
    big = np.iinfo(np.int64).max
    best_weight = big
    best_vec = 0
    high = 0
    prev_gray = 0
    for step in range(1 << (k - low_bits)):
        if step:
            gray = step ^ (step >> 1)
            idx = (gray ^ prev_gray).bit_length() - 1
            high ^= basis[low_bits + idx]
            prev_gray = gray
        masked = (table ^ _to_words(high, nwords)) & tmask_words
        weights = np.bitwise_count(masked).sum(axis=1, dtype=np.int64)
        if step == 0:
            weights[0] = big  # the all-zero codeword
        pos = int(np.argmin(weights))
        w = int(weights[pos])
        if w < best_weight:
            best_weight = w
            best_vec = _from_words(table[pos]) ^ high
    return best_weight, best_vec, (1 << k) - 1


def exact_min_distance(
    h: PolyMatrix,
    p: PunctureSet = PunctureSet(()),
    max_dimension: int = DEFAULT_DIMENSION_CAP,
) -> ExactResult:
    """Exhaustive minimum transmitted weight of the code of H(x).

    ``p`` punctures whole polynomial columns; the scalar columns they
    cover are excluded from the weight.  Raises
    :class:`DimensionCapExceeded` when the code dimension is above
    ``max_dimension``.
    """
    p.validate_for(h.j, h.l)
    scalar = to_scalar(h)
    n = scalar.n
    rows = list(scalar.bits)
    basis = gf2_nullspace(rows, n)
    rank = n - len(basis)
    k = len(basis)
    if k > max_dimension:
        raise DimensionCapExceeded(
            f"code dimension {k} exceeds the cap of {max_dimension} (2^{k} codewords)"
        )
    lifted = lift_puncture(p, h.n)
    punct_bits = 0
    for c in lifted.columns:
        punct_bits |= 1 << c
    tmask = ((1 << n) - 1) ^ punct_bits

    # Dimensionality is preserved iff the punctured columns of H are
    # linearly independent, i.e. no nonzero codeword hides entirely on
    # untransmitted coordinates.
    witness_hidden = _hidden_codeword(rows, lifted.columns)
    if witness_hidden is not None:
        return ExactResult(
            code_length=n,
            rank=rank,
            dimension_k=k,
            min_distance=None,
            dimensionality_preserved=False,
            witness_support=_support(witness_hidden),
            codewords_enumerated=0,
        )
    if k == 0:
        return ExactResult(
            code_length=n,
            rank=rank,
            dimension_k=0,
            min_distance=None,
            dimensionality_preserved=True,
            witness_support=None,
            codewords_enumerated=0,
        )
    weight, vec, enumerated = _min_transmitted(basis, n, tmask)
    if weight <= 0:
        raise AssertionError("zero transmitted weight despite independent punctured columns")
    return ExactResult(
        code_length=n,
        rank=rank,
        dimension_k=k,
        min_distance=weight,
        dimensionality_preserved=True,
        witness_support=_support(vec),
        codewords_enumerated=enumerated,
    )


def _support(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def _hidden_codeword(rows: list[int], punct_cols: tuple[int, ...]) -> int | None:
    """A nonzero codeword supported on the punctured columns, if any."""
    if not punct_cols:
        return None
    # Restrict H to the punctured columns and look for a column dependency.
    restricted = []
    for row in rows:
        acc = 0
        for idx, c in enumerate(punct_cols):
            acc |= ((row >> c) & 1) << idx
        restricted.append(acc)
    combo = gf2_nullspace(restricted, len(punct_cols))
    if not combo:
        return None
    vec = 0
    for idx, c in enumerate(punct_cols):
        if (combo[0] >> idx) & 1:
            vec |= 1 << c
    return vec
