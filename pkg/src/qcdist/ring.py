"""Arithmetic in GF(2)[x]/(x^N - 1) and N x N binary circulant matrices.

A polynomial is stored as a bitmask: bit e of ``bits`` is the coefficient
of x^e, with 0 <= e < N.  Addition is a single XOR and a product by a
monomial is a cyclic bit rotation, which keeps the permanent evaluations
downstream cheap.

Circulant convention (right circulants): every row equals the row above
it shifted circularly one position to the right.  The matrix attached to
a polynomial takes the matrix's first column, top to bottom, as the
coefficients in increasing order.  Under this convention the polynomial
1 maps to the identity, and matrix times column vector agrees with the
polynomial product m(x) v(x), while row vector times matrix corresponds
to x^N m(1/x) v(x) (both mod x^N - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class ModulusMismatchError(ValueError):
    """Two ring elements with different moduli were combined."""


@dataclass(frozen=True, slots=True)
class RingPoly:
    """Element of GF(2)[x]/(x^N - 1).

    ``n`` is the modulus N and ``bits`` the coefficient bitmask.  The zero
    polynomial has ``bits == 0``.  Instances are immutable and hashable,
    so they can be shared freely across threads.
    """

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"coefficient bits 0x{self.bits:x} out of range for N={self.n}")

    @classmethod
    def zero(cls, n: int) -> RingPoly:
        return cls(n, 0)

    @classmethod
    def one(cls, n: int) -> RingPoly:
        return cls(n, 1)

    @classmethod
    def monomial(cls, n: int, exponent: int) -> RingPoly:
        """x^exponent, with the exponent reduced mod N."""
        return cls(n, 1 << (exponent % n))

    @classmethod
    def from_exponents(cls, n: int, exponents: Iterable[int]) -> RingPoly:
        """Build from a collection of distinct exponents in [0, N)."""
        bits = 0
        for e in exponents:
            if not 0 <= e < n:
                raise ValueError(f"exponent {e} out of range for N={n}")
            bit = 1 << e
            if bits & bit:
                raise ValueError(f"duplicate exponent {e}")
            bits |= bit
        return cls(n, bits)

    @classmethod
    def from_text(cls, n: int, text: str) -> RingPoly:
        """Parse the file cell form: '.' for zero, else comma-separated exponents."""
        text = text.strip()
        if text == ".":
            return cls.zero(n)
        try:
            exps = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad polynomial cell {text!r}") from exc
        return cls.from_exponents(n, exps)

    @property
    def exponents(self) -> tuple[int, ...]:
        """Exponents with a nonzero coefficient, in increasing order."""
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def coefficient(self, e: int) -> int:
        return (self.bits >> (e % self.n)) & 1

    def shifted(self, s: int) -> RingPoly:
        """Multiply by x^s (a cyclic rotation of the coefficients)."""
        return RingPoly(self.n, _rotate(self.bits, s, self.n))

    def reciprocal(self) -> RingPoly:
        """x^N p(1/x): exponent e maps to (N - e) mod N."""
        return RingPoly.from_exponents(self.n, [(self.n - e) % self.n for e in self.exponents])

    def to_text(self) -> str:
        if self.bits == 0:
            return "."
        return ",".join(str(e) for e in self.exponents)

    def __add__(self, other: RingPoly) -> RingPoly:
        _check_same_modulus(self, other)
        return RingPoly(self.n, self.bits ^ other.bits)

    def __mul__(self, other: RingPoly) -> RingPoly:
        _check_same_modulus(self, other)
        return RingPoly(self.n, _mul_bits(self.bits, other.bits, self.n))

    def __str__(self) -> str:
        return self.to_text()


def _check_same_modulus(a: RingPoly, b: RingPoly) -> None:
    if a.n != b.n:
        raise ModulusMismatchError(f"modulus mismatch: N={a.n} vs N={b.n}")


def _rotate(bits: int, s: int, n: int) -> int:
    """Cyclic left rotation of an n-bit mask by s positions (x^s multiply)."""
    s %= n
    if s == 0:
        return bits
    mask = (1 << n) - 1
    return ((bits << s) | (bits >> (n - s))) & mask


def _mul_bits(a: int, b: int, n: int) -> int:
    """Carryless cyclic convolution of two n-bit coefficient masks."""
    if a == 0 or b == 0:
        return 0
    # Iterate over the sparser operand; each set exponent rotates the other.
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    bits = a
    while bits:
        low = bits & -bits
        out ^= _rotate(b, low.bit_length() - 1, n)
        bits ^= low
    return out


def poly_add(a: RingPoly, b: RingPoly) -> RingPoly:
    """Sum in GF(2)[x]/(x^N - 1): symmetric difference of exponent sets."""
    return a + b


def poly_mul(a: RingPoly, b: RingPoly) -> RingPoly:
    """Product in GF(2)[x]/(x^N - 1), exponents reduced mod N."""
    return a * b


def poly_weight(a: RingPoly) -> int:
    """Number of nonzero coefficients of ``a``."""
    return a.weight


@dataclass(frozen=True)
class CirculantMatrix:
    """N x N binary right circulant; ``rows[r]`` is a column bitmask."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("circulant size must be positive")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        mask = (1 << self.n) - 1
        for r, row in enumerate(self.rows):
            if not 0 <= row <= mask:
                raise ValueError(f"row {r} out of range")
        for r in range(1, self.n):
            if self.rows[r] != _rotate(self.rows[r - 1], 1, self.n):
                raise ValueError(f"row {r} is not the previous row shifted right")

    @classmethod
    def from_poly(cls, p: RingPoly) -> CirculantMatrix:
        n = p.n
        # Entry (r, c) is the coefficient of x^((r - c) mod N).
        first = 0
        for e in p.exponents:
            first |= 1 << ((-e) % n)
        rows = [first]
        for _ in range(n - 1):
            rows.append(_rotate(rows[-1], 1, n))
        return cls(n, tuple(rows))

    def to_poly(self) -> RingPoly:
        """Read the first column back off as coefficients of increasing order."""
        bits = 0
        for r in range(self.n):
            bits |= (self.rows[r] & 1) << r
        return RingPoly(self.n, bits)

    def entry(self, r: int, c: int) -> int:
        return (self.rows[r] >> c) & 1

    def column(self, c: int) -> int:
        """Column c as a bitmask over row indices."""
        out = 0
        for r in range(self.n):
            out |= ((self.rows[r] >> c) & 1) << r
        return out

    def mat_vec(self, v: RingPoly) -> RingPoly:
        """Matrix times column vector of v's coefficients (equals m(x) v(x))."""
        if v.n != self.n:
            raise ModulusMismatchError(f"modulus mismatch: N={self.n} vs N={v.n}")
        bits = 0
        for r in range(self.n):
            bits |= ((self.rows[r] & v.bits).bit_count() & 1) << r
        return RingPoly(self.n, bits)

    def vec_mat(self, v: RingPoly) -> RingPoly:
        """Row vector of v's coefficients times matrix (equals x^N m(1/x) v(x))."""
        if v.n != self.n:
            raise ModulusMismatchError(f"modulus mismatch: N={self.n} vs N={v.n}")
        bits = 0
        for c in range(self.n):
            bits |= ((self.column(c) & v.bits).bit_count() & 1) << c
        return RingPoly(self.n, bits)

    def __matmul__(self, other: CirculantMatrix) -> CirculantMatrix:
        """GF(2) matrix product; circulants are closed under it."""
        if self.n != other.n:
            raise ModulusMismatchError(f"size mismatch: {self.n} vs {other.n}")
        rows = []
        for r in range(self.n):
            acc = 0
            bits = self.rows[r]
            while bits:
                low = bits & -bits
                acc ^= other.rows[low.bit_length() - 1]
                bits ^= low
            rows.append(acc)
        return CirculantMatrix(self.n, tuple(rows))


def circulant_from_poly(a: RingPoly) -> CirculantMatrix:
    """The right circulant whose first column lists a's coefficients."""
    return CirculantMatrix.from_poly(a)


def poly_from_circulant(m: CirculantMatrix) -> RingPoly:
    """Inverse of :func:`circulant_from_poly`."""
    return m.to_poly()


def right_mul_vector(m: RingPoly, v: RingPoly) -> RingPoly:
    """m(x) v(x) mod x^N - 1, the circulant-times-column-vector action."""
    return m * v
