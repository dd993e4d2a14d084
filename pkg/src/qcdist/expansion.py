"""Cyclic expansion of protomatrices into polynomial and scalar matrices.

A protomatrix entry a[j][i] expands into an N x N circulant that is the
sum of a[j][i] distinct cyclic shifts of the identity; the shift sets are
always explicit inputs (this tool does not try to optimize them).  The
scalar parity-check matrix groups columns by variable type in contiguous
runs of N.

The two-stage process used by the CCSDS AR4JA codes first expands by a
small factor N1 into a larger 0/1 ("type-I") matrix and then replaces
each 1 by a cyclic permutation of size N2.  The result is quasi-cyclic
with subblock size N2 and is generally not reachable by any single-stage
cyclic expansion, so distance bounds for such codes must be computed on
the stage-1 matrix.

Shift-assignment files use the polynomial-matrix grid layout: an
"N J L" header, then J rows of L cells, each cell "." or a
comma-separated list of shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .matrix import BinaryMatrix, MatrixFormatError, PolyMatrix, PunctureSet, WeightMatrix, _data_lines
from .ring import RingPoly, _rotate, circulant_from_poly


@dataclass(frozen=True)
class ShiftAssignment:
    """Per-cell lists of distinct shift exponents in [0, N)."""

    n: int
    cells: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("expansion factor must be positive")
        if not self.cells or not self.cells[0]:
            raise ValueError("shift assignment must have at least one cell")
        width = len(self.cells[0])
        for j, row in enumerate(self.cells):
            if len(row) != width:
                raise ValueError(f"ragged shift row {j}")
            for i, cell in enumerate(row):
                seen = set()
                for s in cell:
                    if not 0 <= s < self.n:
                        raise ValueError(f"shift {s} at cell ({j}, {i}) out of range for N={self.n}")
                    if s in seen:
                        raise ValueError(f"duplicate shift {s} at cell ({j}, {i})")
                    seen.add(s)

    @property
    def j(self) -> int:
        return len(self.cells)

    @property
    def l(self) -> int:
        return len(self.cells[0])

    def cell(self, j: int, i: int) -> tuple[int, ...]:
        return self.cells[j][i]

    def matches(self, a: WeightMatrix) -> bool:
        """True when every cell carries exactly a[j][i] shifts."""
        if (self.j, self.l) != (a.j, a.l):
            return False
        return all(
            len(self.cells[j][i]) == a.entry(j, i) for j in range(a.j) for i in range(a.l)
        )

    def serialize(self) -> str:
        lines = [f"{self.n} {self.j} {self.l}"]
        for row in self.cells:
            lines.append(" ".join(",".join(str(s) for s in cell) if cell else "." for cell in row))
        return "\n".join(lines) + "\n"


def parse_shift_assignment(text: str) -> ShiftAssignment:
    lines = _data_lines(text)
    if not lines:
        raise MatrixFormatError("empty shift assignment file")
    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError(f"expected header 'N J L', got {lines[0]!r}")
    try:
        n, j, l = (int(v) for v in header)
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != j:
        raise MatrixFormatError(f"expected {j} rows, found {len(lines) - 1}")
    rows = []
    for r, line in enumerate(lines[1:]):
        cells = line.split()
        if len(cells) != l:
            raise MatrixFormatError(f"row {r} has {len(cells)} cells, expected {l}")
        row = []
        for cell in cells:
            if cell == ".":
                row.append(())
            else:
                try:
                    row.append(tuple(int(p) for p in cell.split(",")))
                except ValueError as exc:
                    raise MatrixFormatError(f"bad shift cell {cell!r} in row {r}") from exc
        rows.append(tuple(row))
    try:
        return ShiftAssignment(n, tuple(rows))
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def load_shift_assignment(path: str | Path) -> ShiftAssignment:
    return parse_shift_assignment(Path(path).read_text(encoding="utf-8"))


def save_shift_assignment(s: ShiftAssignment, path: str | Path) -> None:
    Path(path).write_text(s.serialize(), encoding="utf-8")


def expand(a: WeightMatrix, shifts: ShiftAssignment, n: int) -> PolyMatrix:
    """Cyclic expansion: cell (j, i) becomes the sum of x^s over its shifts.

    The shift counts must match the protomatrix entries and the shifts
    must fit below ``n``; the expanded matrix then has weight matrix
    exactly ``a``.
    """
    if shifts.n != n:
        raise ValueError(f"shift assignment is for N={shifts.n}, expansion asked N={n}")
    if (shifts.j, shifts.l) != (a.j, a.l):
        raise ValueError(
            f"shift grid {shifts.j} x {shifts.l} does not match protomatrix {a.j} x {a.l}"
        )
    rows = []
    for j in range(a.j):
        row = []
        for i in range(a.l):
            cell = shifts.cell(j, i)
            if len(cell) != a.entry(j, i):
                raise ValueError(
                    f"cell ({j}, {i}) needs {a.entry(j, i)} shifts, got {len(cell)}"
                )
            row.append(RingPoly.from_exponents(n, cell))
        rows.append(tuple(row))
    return PolyMatrix(n, tuple(rows))


def to_scalar(h: PolyMatrix) -> BinaryMatrix:
    """Scalar parity-check matrix of circulant blocks, (J*N) x (L*N)."""
    n = h.n
    bits = []
    for j in range(h.j):
        blocks = [circulant_from_poly(h.entry(j, i)) for i in range(h.l)]
        for r in range(n):
            acc = 0
            for i, blk in enumerate(blocks):
                acc |= blk.rows[r] << (i * n)
            bits.append(acc)
    return BinaryMatrix(h.j * n, h.l * n, tuple(bits))


def two_stage_expand(
    a: WeightMatrix,
    stage1: ShiftAssignment,
    n1: int,
    stage2: ShiftAssignment,
    n2: int,
) -> PolyMatrix:
    """Expand by N1 into a type-I matrix, then by N2 with one shift per 1.

    The result is a (J*N1) x (L*N1) polynomial matrix over modulus N2
    whose entries are monomials or zero; its weight matrix equals the
    intermediate type-I matrix.
    """
    mid = to_scalar(expand(a, stage1, n1)).as_weight_matrix()
    if not mid.is_type_one:
        raise ValueError("stage-1 expansion did not produce a type-I matrix")
    return expand(mid, stage2, n2)


@dataclass(frozen=True)
class BlockIssue:
    """One failed block in a first-stage validation."""

    block_row: int
    block_col: int
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[BlockIssue, ...]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "issues": [
                {"block_row": b.block_row, "block_col": b.block_col, "reason": b.reason}
                for b in self.issues
            ],
        }


def validate_first_stage(b: BinaryMatrix, a: WeightMatrix, n1: int) -> ValidationReport:
    """Check that ``b`` is a stage-1 cyclic expansion of ``a`` by factor n1.

    Every n1 x n1 block (j, i) must be a right circulant of weight
    a[j][i].  Failing blocks are reported with their coordinates.
    """
    if b.m != a.j * n1 or b.n != a.l * n1:
        raise ValueError(
            f"shape mismatch: {b.m} x {b.n} is not ({a.j} x {n1}) x ({a.l} x {n1})"
        )
    issues = []
    for j in range(a.j):
        for i in range(a.l):
            block = b.block(j, i, n1)
            want = a.entry(j, i)
            bad = None
            if block[0].bit_count() != want:
                bad = f"row weight {block[0].bit_count()}, protomatrix wants {want}"
            else:
                for r in range(1, n1):
                    if block[r] != _rotate(block[r - 1], 1, n1):
                        bad = f"row {r} is not row {r - 1} shifted right"
                        break
            if bad is not None:
                issues.append(BlockIssue(j, i, bad))
    return ValidationReport(not issues, tuple(issues))


def lift_puncture(p: PunctureSet, n: int) -> PunctureSet:
    """Map protograph puncture columns to the expanded column set.

    Column i covers expanded columns i*n .. i*n + n - 1.
    """
    if n < 1:
        raise ValueError("expansion factor must be positive")
    cols: list[int] = []
    for i in p.columns:
        cols.extend(range(i * n, (i + 1) * n))
    return PunctureSet(tuple(cols))
