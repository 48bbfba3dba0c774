"""Module for exact matrices over the Gaussian rationals"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple


@dataclass(frozen=True)
class Gaussian:
    """
    An exact complex number re + im*i with rational parts.

    Attributes:
        re (Fraction): real part.
        im (Fraction): imaginary part.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, value: "Gaussian | int | Fraction | complex") -> "Gaussian":
        """Converts ints, Fractions and integral complex literals such as 1j."""
        if isinstance(value, Gaussian):
            return value
        if isinstance(value, complex):
            return cls(Fraction(int(value.real)), Fraction(int(value.imag)))
        return cls(Fraction(value), Fraction(0))

    def __add__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def __mul__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "Gaussian") -> "Gaussian":
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by exact zero")
        return self * Gaussian(other.re / norm, -other.im / norm)

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


ZERO = Gaussian()
ONE = Gaussian(Fraction(1))
I_UNIT = Gaussian(Fraction(0), Fraction(1))

# i^k for k = 0..3
I_POWERS = (ONE, I_UNIT, -ONE, -I_UNIT)


@dataclass(frozen=True)
class ExactMatrix:
    """
    A dense matrix of Gaussian rationals. All arithmetic is exact and
    equality is entrywise.

    Attributes:
        rows (int): number of rows.
        cols (int): number of columns.
        entries (tuple): row-major tuple of row tuples of Gaussian.
    """

    rows: int
    cols: int
    entries: Tuple[Tuple[Gaussian, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        entries = tuple(tuple(Gaussian.of(value) for value in row) for row in rows)
        width = len(entries[0]) if entries else 0
        if any(len(row) != width for row in entries):
            raise ValueError("ragged rows")
        return cls(len(entries), width, entries)

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls(size, size, tuple(tuple(ONE if i == j else ZERO for j in range(size))
                                     for i in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, index: Tuple[int, int]) -> Gaussian:
        row, col = index
        return self.entries[row][col]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(tuple(a + b for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-ONE)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = list(zip(*other.entries))
        result = []
        for row in self.entries:
            nonzero = [(k, value) for k, value in enumerate(row) if not value.is_zero()]
            out_row = []
            for column in columns:
                total = ZERO
                for k, value in nonzero:
                    if not column[k].is_zero():
                        total = total + value * column[k]
                out_row.append(total)
            result.append(tuple(out_row))
        return ExactMatrix(self.rows, other.cols, tuple(result))

    def scale(self, factor: Gaussian) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols,
                           tuple(tuple(factor * value for value in row) for row in self.entries))

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        rows = []
        for row_a in self.entries:
            for row_b in other.entries:
                rows.append(tuple(a * b for a in row_a for b in row_b))
        return ExactMatrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    def adjoint(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(tuple(value.conjugate() for value in column)
                                 for column in zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(value.is_zero() for row in self.entries for value in row)

    def column(self, index: int) -> Tuple[Gaussian, ...]:
        return tuple(row[index] for row in self.entries)

    def pivot_columns(self) -> List[int]:
        """Returns the indices of a left-to-right maximal set of independent columns."""
        pivots: List[int] = []
        reduced: List[List[Gaussian]] = []  # echelon rows of the transposed pivot columns
        lead: List[int] = []
        for index in range(self.cols):
            vector = list(self.column(index))
            for row, position in zip(reduced, lead):
                if not vector[position].is_zero():
                    factor = vector[position] / row[position]
                    vector = [v - factor * r for v, r in zip(vector, row)]
            leading = next((k for k, value in enumerate(vector) if not value.is_zero()), None)
            if leading is None:
                continue
            pivots.append(index)
            reduced.append(vector)
            lead.append(leading)
        return pivots

    def rank(self) -> int:
        return len(self.pivot_columns())

    def _check_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def product(matrices: Iterable[ExactMatrix]) -> ExactMatrix:
    """Multiplies matrices left to right."""
    return reduce(lambda left, right: left @ right, matrices)


def integer_form(vector: Sequence[Gaussian]) -> Tuple[Tuple[int, int], ...]:
    """
    Scales a nonzero vector to its smallest Gaussian-integer form: denominators
    cleared, common integer factor removed and the first nonzero entry made to
    have a positive real part (or positive imaginary part if purely imaginary).

    Returns:
        tuple: (a, b) integer pairs standing for a + b*i.
    """
    denominators = [part.denominator for value in vector for part in (value.re, value.im)]
    common = reduce(lcm, denominators, 1)
    pairs = [(int(value.re * common), int(value.im * common)) for value in vector]
    divisor = reduce(gcd, (abs(part) for pair in pairs for part in pair), 0)
    if divisor == 0:
        raise ValueError("zero vector has no integer form")
    pairs = [(a // divisor, b // divisor) for a, b in pairs]
    first = next(pair for pair in pairs if pair != (0, 0))
    if first[0] < 0 or (first[0] == 0 and first[1] < 0):
        pairs = [(-a, -b) for a, b in pairs]
    return tuple(pairs)


def same_span(first: Sequence[Sequence[Gaussian]], second: Sequence[Sequence[Gaussian]]) -> bool:
    """True if two lists of vectors span the same subspace."""
    rank_first = ExactMatrix.from_rows(first).rank() if first else 0
    rank_second = ExactMatrix.from_rows(second).rank() if second else 0
    joint = ExactMatrix.from_rows(list(first) + list(second)).rank()
    return rank_first == rank_second == joint
