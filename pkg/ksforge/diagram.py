"""Module for KS diagrams: observables joined by IDs, their validity as KS proofs,
symbols, value-assignment checks and criticality"""

from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ksforge import config, gf2
from ksforge.catalog import IdSet, make_id
from ksforge.errors import CapExceededError, DiagramError, QubitMismatchError
from ksforge.pauli import Observable, PhasedPauli, restrict

logger = logging.getLogger(__name__)

SYMBOL_TERM = re.compile(r'(\d+)_(\d+)')


@dataclass(frozen=True)
class DiagramSymbol:
    """
    Multiset summary of a diagram, written like 10_2-4_3 2_4.

    Attributes:
        obs_multiplicities (dict): multiplicity i -> number A of observables occurring in i IDs.
        id_sizes (dict): ID size s -> number of IDs of that size.
    """

    obs_multiplicities: Tuple[Tuple[int, int], ...]
    id_sizes: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_counts(cls, obs_multiplicities: Dict[int, int], id_sizes: Dict[int, int]) -> "DiagramSymbol":
        return cls(tuple(sorted((m, a) for m, a in obs_multiplicities.items() if a)),
                   tuple(sorted((s, c) for s, c in id_sizes.items() if c)))

    @classmethod
    def parse(cls, text: str) -> "DiagramSymbol":
        """Parses "1_4 11_2-2_3 5_4"; terms are count_subscript, halves split by '-'."""
        halves = text.split('-')
        if len(halves) != 2:
            raise ValueError(f"symbol {text!r} needs exactly one '-'")
        counts = []
        for half in halves:
            terms = SYMBOL_TERM.findall(half)
            if not terms or SYMBOL_TERM.sub('', half).strip():
                raise ValueError(f"cannot read symbol half {half!r}")
            tally: Counter = Counter()
            for count, subscript in terms:
                tally[int(subscript)] += int(count)
            counts.append(dict(tally))
        return cls.from_counts(counts[0], counts[1])

    @property
    def observable_count(self) -> int:
        return sum(a for _, a in self.obs_multiplicities)

    @property
    def id_count(self) -> int:
        return sum(c for _, c in self.id_sizes)

    @property
    def max_multiplicity(self) -> int:
        return max(m for m, _ in self.obs_multiplicities)

    def multiplicity_map(self) -> Dict[int, int]:
        return dict(self.obs_multiplicities)

    def size_map(self) -> Dict[int, int]:
        return dict(self.id_sizes)

    def is_consistent(self) -> bool:
        """Checks sum(A*i) = sum(s * count of size-s IDs)."""
        return (sum(m * a for m, a in self.obs_multiplicities)
                == sum(s * c for s, c in self.id_sizes))

    def __str__(self) -> str:
        left = ' '.join(f"{a}_{m}" for m, a in sorted(self.obs_multiplicities, reverse=True))
        right = ' '.join(f"{c}_{s}" for s, c in self.id_sizes)
        return f"{left}-{right}"


@dataclass(frozen=True)
class ValidityReport:
    """
    Outcome of checking the two KS-proof properties of a diagram.

    Attributes:
        property_a (bool): every observable occurs in an even number of IDs.
        negative_id_count (int): number of negative IDs.
        property_b (bool): the number of negative IDs is odd.
        odd_observables (tuple): observables violating property (a).
    """

    property_a: bool
    negative_id_count: int
    property_b: bool
    odd_observables: Tuple[str, ...] = ()

    @property
    def is_ks_proof(self) -> bool:
        return self.property_a and self.property_b


@dataclass(frozen=True)
class AssignmentResult:
    """
    Result of the brute-force search for noncontextual +/-1 values.

    Attributes:
        consistent_assignment_exists (bool): some assignment obeys the product rule on every ID.
        witness (dict | None): observable symbol -> value for one such assignment.
    """

    consistent_assignment_exists: bool
    witness: Optional[Dict[str, int]] = None


@dataclass(frozen=True)
class CriticalityReport:
    """
    Attributes:
        id_irreducible (bool): no proper nonempty subset of the IDs is itself a proof.
        qubit_irreducible (bool): no restriction to fewer qubits is a proof.
        offending_id_subsets (tuple): ID index subsets that are proofs on their own.
        offending_qubit_subsets (tuple): kept-qubit sets whose restriction is a proof.
    """

    id_irreducible: bool
    qubit_irreducible: bool
    offending_id_subsets: Tuple[Tuple[int, ...], ...] = ()
    offending_qubit_subsets: Tuple[Tuple[int, ...], ...] = ()

    @property
    def is_critical(self) -> bool:
        return self.id_irreducible and self.qubit_irreducible


@dataclass(frozen=True)
class Diagram:
    """
    A KS diagram: observables and the IDs joining them.

    Attributes:
        n_qubits (int): number of qubits.
        observables (tuple): canonical positive observables in first-appearance order.
        ids (tuple): the IDs, each drawn from `observables`.
    """

    n_qubits: int
    observables: Tuple[Observable, ...]
    ids: Tuple[IdSet, ...]

    @classmethod
    def from_ids(cls, ids: Iterable[IdSet]) -> "Diagram":
        """Builds a diagram whose observables are exactly those used by the IDs."""
        ids = tuple(ids)
        if not ids:
            raise DiagramError("a diagram needs at least one ID")
        n_qubits = ids[0].n_qubits
        observables: Dict[PhasedPauli, Observable] = {}
        for id_set in ids:
            if id_set.n_qubits != n_qubits:
                raise QubitMismatchError(n_qubits, id_set.n_qubits)
            for member in id_set.members:
                observables.setdefault(member.base, member)
        return cls(n_qubits, tuple(observables.values()), ids)

    @cached_property
    def index(self) -> Dict[PhasedPauli, int]:
        return {observable.base: position for position, observable in enumerate(self.observables)}

    @cached_property
    def multiplicities(self) -> Dict[PhasedPauli, int]:
        tally = Counter(base for id_set in self.ids for base in id_set.bases)
        return {observable.base: tally[observable.base] for observable in self.observables}

    @cached_property
    def key(self) -> frozenset:
        """Identity of the diagram up to ordering of observables, IDs and members."""
        return frozenset(id_set.key for id_set in self.ids)

    def check(self) -> None:
        """
        Raises:
            DiagramError: for zero IDs, a member outside the observable set or an
            observable used by no ID.
        """
        if not self.ids:
            raise DiagramError("a diagram needs at least one ID")
        for number, id_set in enumerate(self.ids, start=1):
            for member in id_set.members:
                if member.base not in self.index:
                    raise DiagramError(f"ID {number} member {member.base.letters} "
                                       "is not an observable of the diagram")
        unused = [o.base.letters for o in self.observables if self.multiplicities[o.base] == 0]
        if unused:
            raise DiagramError(f"observables in no ID: {', '.join(unused)}")

    def incidence(self) -> np.ndarray:
        """Observable x ID 0/1 matrix."""
        matrix = np.zeros((len(self.observables), len(self.ids)), dtype=np.uint8)
        for column, id_set in enumerate(self.ids):
            for base in id_set.bases:
                matrix[self.index[base], column] = 1
        return matrix

    def restrict(self, kept_qubits: Iterable[int]) -> Optional["Diagram"]:
        """
        Ignores the qubits not kept in every observable.

        Returns:
            Diagram | None: the restricted diagram, or None when some ID stops
            being an ID (a member becomes trivial, two members coincide, or the
            product is no longer +I or -I).
        """
        kept = sorted(set(kept_qubits))
        restricted = []
        for id_set in self.ids:
            members = [restrict(member, kept) for member in id_set.members]
            if any(member is None for member in members):
                return None
            new_id = make_id(members)
            if new_id is None:
                return None
            restricted.append(new_id)
        return Diagram.from_ids(restricted)

    def fingerprint(self) -> Tuple[str, Tuple[Tuple[int, int, int, int], ...]]:
        """
        Heuristic invariant for telling non-identical diagrams apart: the symbol
        plus the sorted profile of (size, size, shared observables, sign product)
        over all ID pairs. Equal fingerprints do not certify equivalence.
        """
        profile = []
        for first, second in combinations(self.ids, 2):
            shared = len(set(first.bases) & set(second.bases))
            sizes = sorted((first.size, second.size))
            profile.append((sizes[0], sizes[1], shared, first.product_sign * second.product_sign))
        return str(symbol(self)), tuple(sorted(profile))

    def __str__(self) -> str:
        return '\n'.join(str(id_set) for id_set in self.ids)


def validate(d: Diagram) -> ValidityReport:
    """Checks property (a), every observable in an even number of IDs, and property (b),
    an odd number of negative IDs."""
    d.check()
    odd = tuple(o.base.letters for o in d.observables if d.multiplicities[o.base] % 2)
    negatives = sum(1 for id_set in d.ids if id_set.is_negative)
    return ValidityReport(property_a=not odd, negative_id_count=negatives,
                          property_b=negatives % 2 == 1, odd_observables=odd)


def symbol(d: Diagram) -> DiagramSymbol:
    multiplicities = Counter(d.multiplicities.values())
    sizes = Counter(id_set.size for id_set in d.ids)
    return DiagramSymbol.from_counts(multiplicities, sizes)


def exhaustive_assignment_check(d: Diagram) -> AssignmentResult:
    """
    Searches for +/-1 values, one per observable, such that the values in every
    ID multiply to the ID's sign. Backtracking in observable order; an ID whose
    members are all valued but one forces the last value.

    Raises:
        CapExceededError: when the diagram has more than KSFORGE_ASSIGNMENT_CAP observables.
    """
    d.check()
    count = len(d.observables)
    if count > config.ASSIGNMENT_CAP:
        raise CapExceededError("observable count", count, config.ASSIGNMENT_CAP)
    constraints = [([d.index[base] for base in id_set.bases], id_set.product_sign)
                   for id_set in d.ids]
    touching: List[List[int]] = [[] for _ in range(count)]
    for number, (members, _) in enumerate(constraints):
        for member in members:
            touching[member].append(number)
    values: List[int] = [0] * count

    def propagate(start: int, trail: List[int]) -> bool:
        queue = [start]
        while queue:
            observable = queue.pop()
            for number in touching[observable]:
                members, sign = constraints[number]
                unset = [m for m in members if values[m] == 0]
                if not unset:
                    if _product(values, members) != sign:
                        return False
                elif len(unset) == 1:
                    missing = unset[0]
                    known = _product(values, [m for m in members if m != missing])
                    values[missing] = sign * known
                    trail.append(missing)
                    queue.append(missing)
        return True

    def search(position: int) -> bool:
        while position < count and values[position] != 0:
            position += 1
        if position == count:
            return True
        for value in (1, -1):
            trail = [position]
            values[position] = value
            if propagate(position, trail) and search(position + 1):
                return True
            for undo in trail:
                values[undo] = 0
        return False

    if search(0):
        witness = {o.base.letters: values[i] for i, o in enumerate(d.observables)}
        return AssignmentResult(True, witness)
    return AssignmentResult(False)


def _product(values: Sequence[int], members: Iterable[int]) -> int:
    result = 1
    for member in members:
        result *= values[member]
    return result


def is_critical(d: Diagram) -> CriticalityReport:
    """
    Tests whether a KS-proof diagram can be reduced by dropping IDs or by ignoring qubits.

    ID subsets that keep property (a) are exactly the GF(2) kernel of the
    observable x ID incidence matrix; each kernel vector is checked for an odd
    number of negative IDs.

    Raises:
        DiagramError: when the diagram is not a KS proof.
    """
    if not validate(d).is_ks_proof:
        raise DiagramError("criticality is only defined for KS-proof diagrams")
    negative = np.array([1 if id_set.is_negative else 0 for id_set in d.ids], dtype=np.uint8)
    full = len(d.ids)
    offending_ids = []
    basis = gf2.kernel_basis(d.incidence())
    for _, vector in gf2.gray_walk(basis):
        weight = int(vector.sum())
        if 0 < weight < full and int(vector @ negative) % 2 == 1:
            offending_ids.append(tuple(gf2.bits_to_indices(vector)))
    offending_qubits = []
    for size in range(1, d.n_qubits):
        for kept in combinations(range(d.n_qubits), size):
            reduced = d.restrict(kept)
            if reduced is not None and validate(reduced).is_ks_proof:
                offending_qubits.append(kept)
    logger.debug("criticality: %d ID reductions, %d qubit reductions",
                 len(offending_ids), len(offending_qubits))
    return CriticalityReport(id_irreducible=not offending_ids,
                             qubit_irreducible=not offending_qubits,
                             offending_id_subsets=tuple(sorted(offending_ids)),
                             offending_qubit_subsets=tuple(offending_qubits))
