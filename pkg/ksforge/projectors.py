"""Module for the eigenvalue-signature projectors of IDs, their exact eigenspaces
and the orthogonality between them"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ksforge import config, gf2
from ksforge.catalog import IdSet
from ksforge.errors import CapExceededError
from ksforge.exact import ExactMatrix, Gaussian, integer_form, product
from ksforge.pauli import Observable, PhasedPauli, multiply_all, symplectic_vector, to_matrix

logger = logging.getLogger(__name__)

HALF = Gaussian(Fraction(1, 2))


@dataclass(frozen=True)
class Projector:
    """
    A joint eigenprojector of the members of one ID.

    The signature is written in the printed convention:
    entry k is the eigenvalue of member k as printed, so the member carrying the
    '-' of a negative ID has its value flipped and every signature multiplies to +1.

    Attributes:
        source_id (IdSet): the defining ID.
        id_index (int): position of the ID in its diagram.
        signature (tuple): printed eigenvalues, one +1/-1 per member.
        rank (int): dimension of the eigenspace, 2^(n - r) with r the GF(2) rank of the members.
        label (int): stable 0-based position in the projector pool.
    """

    source_id: IdSet
    id_index: int
    signature: Tuple[int, ...]
    rank: int
    label: int = 0

    @property
    def n_qubits(self) -> int:
        return self.source_id.n_qubits

    @cached_property
    def member_values(self) -> Dict[PhasedPauli, int]:
        """Eigenvalue of each member's positive base."""
        return {base: entry * printed
                for base, entry, printed in zip(self.source_id.bases, self.signature,
                                                self.source_id.printed_signs())}

    @cached_property
    def values(self) -> Dict[PhasedPauli, int]:
        """
        Eigenvalue of every nontrivial positive base in the group the members
        generate. A product of members equal to -B takes minus the product of
        their values on B.
        """
        members = self.source_id.bases
        member_values = self.member_values
        values: Dict[PhasedPauli, int] = {}
        for chosen in cartesian((False, True), repeat=len(members)):
            picked = [base for base, keep in zip(members, chosen) if keep]
            if not picked:
                continue
            total = multiply_all(picked)
            if total.is_trivial:
                continue
            value = 1 if total.phase_exp == 0 else -1
            for base in picked:
                value *= member_values[base]
            values[total.base] = value
        return values

    @property
    def signature_text(self) -> str:
        return ''.join('+' if entry == 1 else '-' for entry in self.signature)

    def __str__(self) -> str:
        return f"P{self.label + 1}[{self.signature_text} of {self.source_id}]"


@dataclass(frozen=True)
class Subspace:
    """
    Attributes:
        basis_vectors (tuple): independent vectors spanning the eigenspace, each
            in smallest Gaussian-integer form as (a, b) pairs for a + b*i.
    """

    basis_vectors: Tuple[Tuple[Tuple[int, int], ...], ...] = field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return len(self.basis_vectors)

    def as_gaussian(self) -> List[List[Gaussian]]:
        return [[Gaussian(Fraction(a), Fraction(b)) for a, b in vector]
                for vector in self.basis_vectors]

    def real_rows(self) -> List[Tuple[int, ...]]:
        """The vectors as plain integer tuples; only valid when every entry is real."""
        if any(b for vector in self.basis_vectors for _, b in vector):
            raise ValueError("subspace has complex entries")
        return [tuple(a for a, _ in vector) for vector in self.basis_vectors]


def id_relations(id_set: IdSet) -> Tuple[int, List[Tuple[Tuple[int, ...], int]]]:
    """
    Returns the GF(2) rank of the members and the product relations among them:
    member subsets whose product is +I or -I, as (indices, sign).
    """
    vectors = np.array([[(symplectic_vector(base) >> bit) & 1
                         for bit in range(2 * id_set.n_qubits)]
                        for base in id_set.bases], dtype=np.uint8)
    member_rank = gf2.rank(vectors)
    relations = []
    for row in gf2.kernel_basis(vectors.T):
        members = tuple(gf2.bits_to_indices(row))
        total = multiply_all(id_set.bases[index] for index in members)
        relations.append((members, 1 if total.phase_exp == 0 else -1))
    return member_rank, relations


def derive_projectors(id_set: IdSet, id_index: int = 0, first_label: int = 0) -> List[Projector]:
    """
    Returns the projectors of every realizable signature of the ID, in
    lexicographic signature order with + before -.
    """
    member_rank, relations = id_relations(id_set)
    printed = id_set.printed_signs()
    rank = 2 ** (id_set.n_qubits - member_rank)
    projectors = []
    for signature in cartesian((1, -1), repeat=id_set.size):
        values = [entry * sign for entry, sign in zip(signature, printed)]
        realizable = all(_sign_product(values, members) == sign for members, sign in relations)
        if realizable:
            projectors.append(Projector(id_set, id_index, tuple(signature), rank,
                                        first_label + len(projectors)))
    return projectors


def _sign_product(values: Sequence[int], members: Sequence[int]) -> int:
    result = 1
    for index in members:
        result *= values[index]
    return result


def sign_corrected_value(p: Projector, base: Observable | PhasedPauli) -> Optional[int]:
    """
    The projector's eigenvalue for a positive base, or None if the base is not
    in the group generated by its ID.
    """
    key = base.base if isinstance(base, Observable) else base
    return p.values.get(key)


def orthogonal(p: Projector, q: Projector) -> bool:
    """
    Signature rule: two projectors are orthogonal when they give opposite values
    to some observable lying in both generated groups, not only among the listed
    members. Projectors of the same ID are orthogonal exactly when their
    signatures differ; a projector is never orthogonal to itself.
    """
    values = q.values
    return any(values.get(base, value) != value for base, value in p.values.items())


@lru_cache(maxsize=None)
def projector_matrix(p: Projector) -> ExactMatrix:
    """
    Exact matrix of the product over members of (I + v_k O_k)/2.

    Raises:
        CapExceededError: beyond KSFORGE_MATRIX_CAP qubits.
    """
    if p.n_qubits > config.MATRIX_CAP:
        raise CapExceededError("qubit count", p.n_qubits, config.MATRIX_CAP)
    identity = ExactMatrix.identity(2 ** p.n_qubits)
    factors = []
    for base in p.source_id.bases:
        observable = to_matrix(base)
        if p.member_values[base] == -1:
            observable = observable.scale(-Gaussian.of(1))
        factors.append((identity + observable).scale(HALF))
    return product(factors)


def orthogonal_exact(p: Projector, q: Projector) -> bool:
    """Ground truth for orthogonality: the exact product P Q vanishes."""
    return (projector_matrix(p) @ projector_matrix(q)).is_zero()


def subspace(p: Projector) -> Subspace:
    """Column space of the projector: its left-to-right pivot columns in integer form."""
    matrix = projector_matrix(p)
    vectors = tuple(integer_form(matrix.column(index)) for index in matrix.pivot_columns())
    return Subspace(vectors)


def projector_pool(ids: Sequence[IdSet]) -> List[Projector]:
    """Projectors of all IDs, labelled consecutively by (ID index, signature)."""
    pool: List[Projector] = []
    for id_index, id_set in enumerate(ids):
        pool.extend(derive_projectors(id_set, id_index, len(pool)))
    logger.debug("%d projectors from %d IDs", len(pool), len(ids))
    return pool
