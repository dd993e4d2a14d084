"""Explicit codewords of (punctured) quasi-cyclic codes from permanents.

Pick a size-(J+1) column subset S of the polynomial parity-check matrix
H(x).  Assigning to each column i of S the permanent of H restricted to
S minus column i (and zero elsewhere) always yields a codeword: the
row-j inner product is the expansion of the permanent of a square matrix
with row j duplicated, which vanishes.  The same construction applies
after removing a row set T, provided each removed row, stacked on top of
the reduced matrix restricted to S, has permanent zero; |S| shrinks so
that |S| + |T| = J + 1.

Punctured columns are untransmitted: they are skipped by the weight
accounting and hidden by serialization, but the cells keep their ring
value internally so the parity checks of the full matrix can still be
verified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import PolyMatrix, PunctureSet
from .permanent import perm_cofactor_family, perm_ring
from .ring import RingPoly


class CheckLevel(enum.Enum):
    """How a row-removal certificate is checked.

    WEIGHT accepts T when every removed row is identically zero on the
    columns of S in the weight matrix; this is decidable from wt(H(x))
    alone and is what the weight-level distance bound uses.  POLY accepts
    the strictly larger set of removals whose stacked permanents vanish
    in the ring, which can happen through cancellation even when the
    removed rows are nonzero on S.
    """

    WEIGHT = "weight"
    POLY = "poly"


class RemovalRejected(ValueError):
    """A proposed (S, T) pair fails the removal condition."""


@dataclass(frozen=True)
class RemovalCertificate:
    """Accepted (S, T) pair together with the level it was checked at."""

    column_set_s: tuple[int, ...]
    removed_rows_t: tuple[int, ...]
    level: CheckLevel


UNTRANSMITTED = None  # JSON spelling of a punctured cell


@dataclass(frozen=True)
class QcCodeword:
    """Length-L vector over the ring, with some columns untransmitted.

    ``cells`` always stores the underlying ring values, punctured columns
    included; puncturing affects only weight accounting and the JSON
    form.
    """

    n: int
    cells: tuple[RingPoly, ...]
    punctured: frozenset[int]

    def __post_init__(self) -> None:
        for i, cell in enumerate(self.cells):
            if cell.n != self.n:
                raise ValueError(f"cell {i} modulus {cell.n} differs from {self.n}")
        for i in self.punctured:
            if not 0 <= i < len(self.cells):
                raise ValueError(f"punctured column {i} out of range")

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def transmitted_weight(self) -> int:
        return sum(c.weight for i, c in enumerate(self.cells) if i not in self.punctured)

    @property
    def full_weight(self) -> int:
        return sum(c.weight for c in self.cells)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.cells)

    @property
    def punctured_only(self) -> bool:
        """Nonzero codeword whose weight sits entirely on punctured columns.

        Such a word is invisible after transmission; distance bounds must
        not count it, so callers are expected to check this flag.
        """
        return not self.is_zero and self.transmitted_weight == 0

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.n,
            "cells": [
                UNTRANSMITTED if i in self.punctured else c.to_text()
                for i, c in enumerate(self.cells)
            ],
            "transmitted_weight": self.transmitted_weight,
            "punctured_columns": sorted(self.punctured),
            "punctured_only": self.punctured_only,
            "zero": self.is_zero,
        }


def _check_subset(s: Sequence[int], l: int, expect: int) -> tuple[int, ...]:
    out = tuple(sorted({int(c) for c in s}))
    if len(out) != expect:
        raise ValueError(f"need a column subset of size {expect}, got {len(out)}")
    for c in out:
        if not 0 <= c < l:
            raise ValueError(f"column {c} out of range for L={l}")
    return out


def lemma1_codeword(h: PolyMatrix, p: PunctureSet, s: Sequence[int]) -> QcCodeword:
    """Codeword whose S-cells are the column-deleted permanents of H_S."""
    p.validate_for(h.j, h.l)
    s = _check_subset(s, h.l, h.j + 1)
    family = perm_cofactor_family(h.select_columns(s))
    cells = [RingPoly.zero(h.n)] * h.l
    for value, col in zip(family, s):
        cells[col] = value
    return QcCodeword(h.n, tuple(cells), frozenset(p.columns))


def check_removal(
    h: PolyMatrix, s: Sequence[int], t: Iterable[int], level: CheckLevel = CheckLevel.WEIGHT
) -> RemovalCertificate:
    """Validate a row removal T against a column subset S.

    Requires |S| + |T| = J + 1.  Raises :class:`RemovalRejected` with the
    failing rows when the condition does not hold.
    """
    t = tuple(sorted({int(r) for r in t}))
    for r in t:
        if not 0 <= r < h.j:
            raise ValueError(f"row {r} out of range for J={h.j}")
    if len(t) >= h.j:
        raise ValueError("cannot remove every row")
    s = _check_subset(s, h.l, h.j + 1 - len(t))
    if not t:
        return RemovalCertificate(s, (), level)
    if level is CheckLevel.WEIGHT:
        bad = [
            r for r in t if any(not h.entry(r, c).is_zero for c in s)
        ]
        if bad:
            raise RemovalRejected(f"rows {bad} are not identically zero on columns {list(s)}")
    else:
        reduced = h.remove_rows(t)
        bad = []
        for r in t:
            stacked = [[h.entry(r, c) for c in s]]
            stacked += [[reduced.entry(j, c) for c in s] for j in range(reduced.j)]
            if not perm_ring(stacked).is_zero:
                bad.append(r)
        if bad:
            raise RemovalRejected(f"stacked permanents for rows {bad} are nonzero on {list(s)}")
    return RemovalCertificate(s, t, level)


def lemma2_codeword(h: PolyMatrix, p: PunctureSet, cert: RemovalCertificate) -> QcCodeword:
    """Codeword built on the row-reduced matrix; checks against full H."""
    p.validate_for(h.j, h.l)
    # Re-validate: certificates are cheap to check relative to the
    # permanents below, and a stale certificate would silently produce a
    # non-codeword.
    cert = check_removal(h, cert.column_set_s, cert.removed_rows_t, cert.level)
    reduced = h.remove_rows(cert.removed_rows_t)
    family = perm_cofactor_family(reduced.select_columns(cert.column_set_s))
    cells = [RingPoly.zero(h.n)] * h.l
    for value, col in zip(family, cert.column_set_s):
        cells[col] = value
    return QcCodeword(h.n, tuple(cells), frozenset(p.columns))


def verify_codeword(h: PolyMatrix, c: QcCodeword) -> bool:
    """True iff H(x) c(x)^T = 0, using the internal values of all cells."""
    if c.length != h.l:
        raise ValueError(f"codeword length {c.length} does not match L={h.l}")
    if c.n != h.n:
        raise ValueError(f"codeword modulus {c.n} does not match N={h.n}")
    for j in range(h.j):
        acc = RingPoly.zero(h.n)
        for i in range(h.l):
            acc = acc + h.entry(j, i) * c.cells[i]
        if not acc.is_zero:
            return False
    return True


def transmitted_weight(c: QcCodeword) -> int:
    """Hamming weight of the transmitted coordinates only."""
    return c.transmitted_weight
