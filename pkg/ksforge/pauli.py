"""Module for the N-qubit Pauli group: phased Pauli operators, signed observables
and their exact matrices"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from ksforge import config
from ksforge.errors import CapExceededError, PauliParseError, QubitMismatchError
from ksforge.exact import I_POWERS, ExactMatrix

# per-qubit letter for (x bit, z bit)
LETTERS = {(0, 0): 'I', (1, 0): 'X', (1, 1): 'Y', (0, 1): 'Z'}
BITS = {letter: bits for bits, letter in LETTERS.items()}

SINGLE_QUBIT = {
    'I': ExactMatrix.from_rows([[1, 0], [0, 1]]),
    'X': ExactMatrix.from_rows([[0, 1], [1, 0]]),
    'Y': ExactMatrix.from_rows([[0, -1j], [1j, 0]]),
    'Z': ExactMatrix.from_rows([[1, 0], [0, -1]]),
}


@dataclass(frozen=True, order=True)
class PhasedPauli:
    """
    An N-qubit Pauli operator i^phase_exp times a tensor product of I, X, Y, Z.

    Qubit 0 is the leftmost letter of the symbol and the most significant bit
    of a computational basis index; bit q of a mask belongs to qubit q.

    Attributes:
        n_qubits (int): number of qubits.
        x_mask (int): X-part per qubit.
        z_mask (int): Z-part per qubit.
        phase_exp (int): exponent k of the global phase i^k, in 0..3.
    """

    n_qubits: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("a Pauli operator needs at least one qubit")
        object.__setattr__(self, 'phase_exp', self.phase_exp % 4)

    @classmethod
    def identity(cls, n_qubits: int) -> "PhasedPauli":
        return cls(n_qubits, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str, phase_exp: int = 0) -> "PhasedPauli":
        x_mask = z_mask = 0
        for qubit, letter in enumerate(letters):
            x_bit, z_bit = BITS[letter]
            x_mask |= x_bit << qubit
            z_mask |= z_bit << qubit
        return cls(len(letters), x_mask, z_mask, phase_exp)

    @property
    def letters(self) -> str:
        return ''.join(LETTERS[(self.x_mask >> q) & 1, (self.z_mask >> q) & 1]
                       for q in range(self.n_qubits))

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp in (0, 2)

    @property
    def is_trivial(self) -> bool:
        """True when the operator is a phase times the identity."""
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def is_identity(self) -> bool:
        return self.is_trivial and self.phase_exp == 0

    @property
    def base(self) -> "PhasedPauli":
        """The same tensor product with phase 1."""
        return PhasedPauli(self.n_qubits, self.x_mask, self.z_mask, 0)

    def __mul__(self, other: "PhasedPauli") -> "PhasedPauli":
        return multiply(self, other)

    def __str__(self) -> str:
        prefix = ('', 'i', '-', '-i')[self.phase_exp]
        return prefix + self.letters


@dataclass(frozen=True, order=True)
class Observable:
    """
    A signed Hermitian Pauli observable such as -XXZ.

    Attributes:
        base (PhasedPauli): canonical positive representative, phase_exp 0, nontrivial.
        sign (int): +1 or -1.
    """

    base: PhasedPauli
    sign: int = 1

    def __post_init__(self):
        if self.base.phase_exp != 0:
            raise ValueError("an observable base must carry phase 1")
        if self.base.is_trivial:
            raise ValueError("the identity is not a nontrivial observable")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def n_qubits(self) -> int:
        return self.base.n_qubits

    @property
    def operator(self) -> PhasedPauli:
        """The observable as a phased operator, with the sign folded into the phase."""
        return PhasedPauli(self.n_qubits, self.base.x_mask, self.base.z_mask,
                           0 if self.sign == 1 else 2)

    def positive(self) -> "Observable":
        return Observable(self.base, 1)

    def __str__(self) -> str:
        return format_observable(self)


def _check_qubits(a: PhasedPauli, b: PhasedPauli) -> None:
    if a.n_qubits != b.n_qubits:
        raise QubitMismatchError(a.n_qubits, b.n_qubits)


def parse_observable(text: str) -> Observable:
    """
    Parses a symbol like "ZXX" or "-XXZ" into an Observable.

    Raises:
        PauliParseError: for an empty string, a foreign character or the identity.
    """
    stripped = text.strip()
    sign = 1
    offset = 0
    if stripped.startswith('-'):
        sign = -1
        offset = 1
    letters = stripped[offset:]
    if not letters:
        raise PauliParseError(text, offset, "no qubit letters")
    for position, letter in enumerate(letters):
        if letter not in BITS:
            raise PauliParseError(text, position + offset, f"{letter!r} is not one of I, X, Y, Z")
    base = PhasedPauli.from_letters(letters)
    if base.is_trivial:
        raise PauliParseError(text, offset, "the identity is not a nontrivial observable")
    return Observable(base, sign)


def format_observable(observable: Observable) -> str:
    return ('-' if observable.sign == -1 else '') + observable.base.letters


def multiply(a: PhasedPauli, b: PhasedPauli) -> PhasedPauli:
    """
    Returns the exact group product a*b.

    With Y = i*X*Z every operator is i^(k + |x&z|) X^x Z^z, and moving Z^z1 past
    X^x2 costs (-1)^(z1.x2).
    """
    _check_qubits(a, b)
    x_mask = a.x_mask ^ b.x_mask
    z_mask = a.z_mask ^ b.z_mask
    exponent = (a.phase_exp + b.phase_exp
                + (a.x_mask & a.z_mask).bit_count() + (b.x_mask & b.z_mask).bit_count()
                + 2 * (a.z_mask & b.x_mask).bit_count()
                - (x_mask & z_mask).bit_count())
    return PhasedPauli(a.n_qubits, x_mask, z_mask, exponent)


def multiply_all(operators: Iterable[PhasedPauli]) -> PhasedPauli:
    return reduce(multiply, operators)


def commutes(a: PhasedPauli, b: PhasedPauli) -> bool:
    """True if the symplectic form x_a.z_b + x_b.z_a vanishes mod 2."""
    _check_qubits(a, b)
    return ((a.x_mask & b.z_mask).bit_count() + (b.x_mask & a.z_mask).bit_count()) % 2 == 0


def to_matrix(pauli: PhasedPauli) -> ExactMatrix:
    """
    Returns the exact 2^N x 2^N matrix of the operator.

    Raises:
        CapExceededError: when N exceeds KSFORGE_MATRIX_CAP.
    """
    if pauli.n_qubits > config.MATRIX_CAP:
        raise CapExceededError("qubit count", pauli.n_qubits, config.MATRIX_CAP)
    matrix = reduce(lambda left, right: left.kron(right),
                    (SINGLE_QUBIT[letter] for letter in pauli.letters))
    return matrix.scale(I_POWERS[pauli.phase_exp])


def observable_matrix(observable: Observable) -> ExactMatrix:
    return to_matrix(observable.operator)


def restrict(observable: Observable, kept_qubits: Iterable[int]) -> Optional[Observable]:
    """
    Deletes the tensor factors of the qubits not kept; the sign is preserved.

    Returns:
        Observable | None: the restricted observable, or None when only the
        identity remains.
    """
    kept = sorted(set(kept_qubits))
    if not kept:
        raise ValueError("at least one qubit must be kept")
    if kept[0] < 0 or kept[-1] >= observable.n_qubits:
        raise ValueError(f"qubit indices must lie in 0..{observable.n_qubits - 1}")
    letters = observable.base.letters
    remainder = PhasedPauli.from_letters(''.join(letters[q] for q in kept))
    if remainder.is_trivial:
        return None
    return Observable(remainder, observable.sign)


def symplectic_vector(pauli: PhasedPauli) -> int:
    """Packs (x | z) into one 2N-bit integer, x in the low bits."""
    return pauli.x_mask | (pauli.z_mask << pauli.n_qubits)
