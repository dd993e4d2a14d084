"""Weight matrices, polynomial parity-check matrices, puncture sets, files.

Two file formats are defined here.  A weight-matrix file starts with a
"J L" header line followed by J rows of L nonnegative integers.  A
polynomial-matrix file starts with "N J L" followed by J rows of L
cells, each cell either "." (zero) or a comma-separated exponent list
("0,2" means 1 + x^2).  Blank lines and lines starting with '#' are
ignored, so data files can carry provenance notes; serialization always
emits the bare canonical form.

Column and row indices are 0-based throughout.  Degenerate inputs with
an all-zero column (a variable attached to no check) are rejected when
a matrix is built from user data; submatrices derived by column
selection or row removal skip that check because a legitimate row
removal can leave zero columns behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .ring import RingPoly


class MatrixFormatError(ValueError):
    """Malformed matrix file or text."""


def _check_column_indices(s: Sequence[int], l: int) -> tuple[int, ...]:
    out = tuple(int(i) for i in s)
    for i in out:
        if not 0 <= i < l:
            raise ValueError(f"column index {i} out of range for L={l}")
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ValueError(f"column set must be strictly increasing, got {out}")
    return out


def _check_row_indices(t: Iterable[int], j: int) -> tuple[int, ...]:
    out = tuple(sorted({int(r) for r in t}))
    for r in out:
        if not 0 <= r < j:
            raise ValueError(f"row index {r} out of range for J={j}")
    if len(out) == j:
        raise ValueError("cannot remove every row")
    return out


@dataclass(frozen=True)
class WeightMatrix:
    """J x L matrix of nonnegative integers (a protomatrix)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("weight matrix must have at least one row and column")
        width = len(self.rows[0])
        for r, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"ragged row {r}: {len(row)} entries, expected {width}")
            for entry in row:
                if entry < 0:
                    raise ValueError(f"negative entry {entry} in row {r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> WeightMatrix:
        """Validating constructor for user data; rejects all-zero columns."""
        m = cls(tuple(tuple(int(v) for v in row) for row in rows))
        for i in range(m.l):
            if all(row[i] == 0 for row in m.rows):
                raise ValueError(f"column {i} is all zero (variable with no checks)")
        return m

    @property
    def j(self) -> int:
        return len(self.rows)

    @property
    def l(self) -> int:
        return len(self.rows[0])

    def entry(self, j: int, i: int) -> int:
        return self.rows[j][i]

    def row(self, j: int) -> tuple[int, ...]:
        return self.rows[j]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.rows)

    @property
    def max_entry(self) -> int:
        return max(max(row) for row in self.rows)

    @property
    def is_type_one(self) -> bool:
        """True when every entry is 0 or 1 (no parallel edges)."""
        return all(v <= 1 for row in self.rows for v in row)

    def select_columns(self, s: Sequence[int]) -> WeightMatrix:
        s = _check_column_indices(s, self.l)
        if not s:
            raise ValueError("empty column selection")
        return WeightMatrix(tuple(tuple(row[i] for i in s) for row in self.rows))

    def remove_rows(self, t: Iterable[int]) -> WeightMatrix:
        t = set(_check_row_indices(t, self.j))
        if not t:
            return self
        return WeightMatrix(tuple(row for j, row in enumerate(self.rows) if j not in t))

    def serialize(self) -> str:
        lines = [f"{self.j} {self.l}"]
        lines += [" ".join(str(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PolyMatrix:
    """J x L matrix over GF(2)[x]/(x^N - 1) with a common modulus N."""

    n: int
    rows: tuple[tuple[RingPoly, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if not self.rows or not self.rows[0]:
            raise ValueError("polynomial matrix must have at least one row and column")
        width = len(self.rows[0])
        for r, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"ragged row {r}: {len(row)} entries, expected {width}")
            for p in row:
                if p.n != self.n:
                    raise ValueError(f"entry modulus {p.n} differs from matrix modulus {self.n}")

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Iterable[RingPoly]]) -> PolyMatrix:
        """Validating constructor; rejects all-zero columns."""
        m = cls(n, tuple(tuple(row) for row in rows))
        for i in range(m.l):
            if all(row[i].is_zero for row in m.rows):
                raise ValueError(f"column {i} is all zero (variable with no checks)")
        return m

    @property
    def j(self) -> int:
        return len(self.rows)

    @property
    def l(self) -> int:
        return len(self.rows[0])

    def entry(self, j: int, i: int) -> RingPoly:
        return self.rows[j][i]

    def row(self, j: int) -> tuple[RingPoly, ...]:
        return self.rows[j]

    def weight_matrix(self) -> WeightMatrix:
        return WeightMatrix(tuple(tuple(p.weight for p in row) for row in self.rows))

    def select_columns(self, s: Sequence[int]) -> PolyMatrix:
        s = _check_column_indices(s, self.l)
        if not s:
            raise ValueError("empty column selection")
        return PolyMatrix(self.n, tuple(tuple(row[i] for i in s) for row in self.rows))

    def remove_rows(self, t: Iterable[int]) -> PolyMatrix:
        t = set(_check_row_indices(t, self.j))
        if not t:
            return self
        return PolyMatrix(self.n, tuple(row for j, row in enumerate(self.rows) if j not in t))

    def serialize(self) -> str:
        lines = [f"{self.n} {self.j} {self.l}"]
        lines += [" ".join(p.to_text() for p in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def weight_matrix_of(h: PolyMatrix) -> WeightMatrix:
    """Entry-wise polynomial weight of a polynomial parity-check matrix."""
    return h.weight_matrix()


def select_columns(m: WeightMatrix | PolyMatrix, s: Sequence[int]):
    """Submatrix of just the indicated columns, order preserved."""
    return m.select_columns(s)


def remove_rows(m: WeightMatrix | PolyMatrix, t: Iterable[int]):
    """Matrix with the indicated rows deleted, remaining order preserved."""
    return m.remove_rows(t)


@dataclass(frozen=True)
class PunctureSet:
    """Strictly increasing set of column indices that are not transmitted."""

    columns: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cols = self.columns
        for c in cols:
            if c < 0:
                raise ValueError(f"negative column index {c}")
        if any(b <= a for a, b in zip(cols, cols[1:])):
            raise ValueError(f"puncture columns must be strictly increasing, got {cols}")

    @classmethod
    def from_iterable(cls, cols: Iterable[int]) -> PunctureSet:
        return cls(tuple(sorted({int(c) for c in cols})))

    @classmethod
    def from_text(cls, text: str) -> PunctureSet:
        """Parse a CLI-style comma-separated index list; empty means none."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.from_iterable(int(part) for part in text.split(","))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.columns)

    def __contains__(self, column: int) -> bool:
        return column in self.columns

    def __len__(self) -> int:
        return len(self.columns)

    def validate_for(self, j: int, l: int) -> None:
        """Check the set against a J x L matrix: indices in range, |P| < J."""
        for c in self.columns:
            if c >= l:
                raise ValueError(f"puncture column {c} out of range for L={l}")
        if len(self.columns) >= j:
            raise ValueError(
                f"puncturing {len(self.columns)} of {j} check rows' worth of columns "
                "leaves no redundancy (need |P| < J)"
            )


@dataclass(frozen=True)
class BinaryMatrix:
    """m x n matrix over GF(2); ``bits[r]`` is a column bitmask for row r."""

    m: int
    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("binary matrix dimensions must be positive")
        if len(self.bits) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.bits)}")
        limit = 1 << self.n
        for r, row in enumerate(self.bits):
            if not 0 <= row < limit:
                raise ValueError(f"row {r} has bits outside {self.n} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BinaryMatrix:
        m = len(rows)
        n = len(rows[0]) if m else 0
        bits = []
        for row in rows:
            if len(row) != n:
                raise ValueError("ragged rows")
            acc = 0
            for c, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry {v} is not a bit")
                acc |= v << c
            bits.append(acc)
        return cls(m, n, tuple(bits))

    @classmethod
    def from_weight_matrix(cls, w: WeightMatrix) -> BinaryMatrix:
        if not w.is_type_one:
            raise ValueError("weight matrix has entries above 1; not a binary (type-I) matrix")
        return cls.from_rows(w.rows)

    def entry(self, r: int, c: int) -> int:
        return (self.bits[r] >> c) & 1

    def row_list(self, r: int) -> list[int]:
        return [(self.bits[r] >> c) & 1 for c in range(self.n)]

    def as_weight_matrix(self) -> WeightMatrix:
        return WeightMatrix(tuple(tuple(self.row_list(r)) for r in range(self.m)))

    def block(self, j: int, i: int, size: int) -> tuple[int, ...]:
        """The size x size block at block position (j, i), as row bitmasks."""
        if (j + 1) * size > self.m or (i + 1) * size > self.n:
            raise ValueError(f"block ({j}, {i}) of size {size} out of range")
        mask = (1 << size) - 1
        return tuple((self.bits[j * size + r] >> (i * size)) & mask for r in range(size))


def _data_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def parse_weight_matrix(text: str) -> WeightMatrix:
    """Parse the "J L" + rows format; raises MatrixFormatError on bad input."""
    lines = _data_lines(text)
    if not lines:
        raise MatrixFormatError("empty weight matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"expected header 'J L', got {lines[0]!r}")
    try:
        j, l = int(header[0]), int(header[1])
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer header {lines[0]!r}") from exc
    if j < 1 or l < 1:
        raise MatrixFormatError(f"bad dimensions J={j}, L={l}")
    if len(lines) - 1 != j:
        raise MatrixFormatError(f"expected {j} rows, found {len(lines) - 1}")
    rows = []
    for r, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != l:
            raise MatrixFormatError(f"row {r} has {len(parts)} entries, expected {l}")
        try:
            row = [int(p) for p in parts]
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer entry in row {r}: {line!r}") from exc
        if any(v < 0 for v in row):
            raise MatrixFormatError(f"negative entry in row {r}")
        rows.append(row)
    try:
        return WeightMatrix.from_rows(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def parse_poly_matrix(text: str) -> PolyMatrix:
    """Parse the "N J L" + polynomial cells format."""
    lines = _data_lines(text)
    if not lines:
        raise MatrixFormatError("empty polynomial matrix file")
    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError(f"expected header 'N J L', got {lines[0]!r}")
    try:
        n, j, l = (int(v) for v in header)
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer header {lines[0]!r}") from exc
    if n < 1 or j < 1 or l < 1:
        raise MatrixFormatError(f"bad dimensions N={n}, J={j}, L={l}")
    if len(lines) - 1 != j:
        raise MatrixFormatError(f"expected {j} rows, found {len(lines) - 1}")
    rows = []
    for r, line in enumerate(lines[1:]):
        cells = line.split()
        if len(cells) != l:
            raise MatrixFormatError(f"row {r} has {len(cells)} cells, expected {l}")
        try:
            rows.append([RingPoly.from_text(n, cell) for cell in cells])
        except ValueError as exc:
            raise MatrixFormatError(f"row {r}: {exc}") from exc
    try:
        return PolyMatrix.from_rows(n, rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def load_weight_matrix(path: str | Path) -> WeightMatrix:
    return parse_weight_matrix(Path(path).read_text(encoding="utf-8"))


def load_poly_matrix(path: str | Path) -> PolyMatrix:
    return parse_poly_matrix(Path(path).read_text(encoding="utf-8"))


def save_weight_matrix(m: WeightMatrix, path: str | Path) -> None:
    Path(path).write_text(m.serialize(), encoding="utf-8")


def save_poly_matrix(m: PolyMatrix, path: str | Path) -> None:
    Path(path).write_text(m.serialize(), encoding="utf-8")
