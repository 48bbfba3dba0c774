"""Module for enumerating observables, maximal commuting sets and IDs of the N-qubit
Pauli group"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ksforge import config
from ksforge.errors import CapExceededError, QubitMismatchError
from ksforge.pauli import LETTERS, Observable, PhasedPauli, commutes, multiply_all

logger = logging.getLogger(__name__)

DEFAULT_ID_SIZES = (3, 4)


@dataclass(frozen=True)
class IdSet:
    """
    A set of mutually commuting observables whose product is +I or -I.

    Members are canonical positive bases; the sign lives on the set. When the
    set is printed, the '-' is attached to member `sign_carrier`.

    Attributes:
        members (tuple): the observables, each with sign +1.
        product_sign (int): +1 for a positive ID, -1 for a negative one.
        sign_carrier (int): index of the member that carries a printed '-'.
    """

    members: Tuple[Observable, ...]
    product_sign: int
    sign_carrier: int = -1

    def __post_init__(self):
        carrier = self.sign_carrier % len(self.members) if self.members else 0
        object.__setattr__(self, 'sign_carrier', carrier)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def n_qubits(self) -> int:
        return self.members[0].n_qubits

    @property
    def is_negative(self) -> bool:
        return self.product_sign == -1

    @cached_property
    def bases(self) -> Tuple[PhasedPauli, ...]:
        return tuple(member.base for member in self.members)

    @cached_property
    def key(self) -> Tuple[frozenset, int]:
        """Order-free identity used to detect duplicate IDs."""
        return frozenset(self.bases), self.product_sign

    def printed_signs(self) -> Tuple[int, ...]:
        """Per-member printed sign: -1 on the carrier of a negative ID, +1 elsewhere."""
        return tuple(-1 if self.is_negative and index == self.sign_carrier else 1
                     for index in range(self.size))

    def printed_members(self) -> List[str]:
        return [('-' if sign == -1 else '') + member.base.letters
                for member, sign in zip(self.members, self.printed_signs())]

    def __str__(self) -> str:
        return ', '.join(self.printed_members())


@dataclass
class CommutingSetCatalog:
    """
    Observables, maximal commuting sets and IDs of one qubit count.

    Attributes:
        n_qubits (int): number of qubits.
        observables (list): nontrivial positive observables in symbol order.
        maximal_sets (list): sorted index tuples into `observables`.
        ids_by_size (dict): ID size -> list of IdSet.
    """

    n_qubits: int
    observables: List[Observable] = field(default_factory=list)
    maximal_sets: List[Tuple[int, ...]] = field(default_factory=list)
    ids_by_size: Dict[int, List[IdSet]] = field(default_factory=dict)

    @cached_property
    def index(self) -> Dict[PhasedPauli, int]:
        return {observable.base: position for position, observable in enumerate(self.observables)}

    def ids(self, sizes: Optional[Iterable[int]] = None) -> List[IdSet]:
        """All catalogued IDs of the given sizes, smaller sizes first."""
        wanted = sorted(self.ids_by_size) if sizes is None else sorted(set(sizes))
        return [id_set for size in wanted for id_set in self.ids_by_size.get(size, [])]


def _check_cap(n: int) -> None:
    if n < 1:
        raise ValueError("qubit count must be positive")
    if n > config.CATALOG_CAP:
        raise CapExceededError("qubit count", n, config.CATALOG_CAP)


def enumerate_observables(n: int) -> List[Observable]:
    """Returns the 4^n - 1 nontrivial positive observables in lexicographic symbol order."""
    _check_cap(n)
    letters = sorted(LETTERS.values())
    observables = []
    for word in cartesian(letters, repeat=n):
        base = PhasedPauli.from_letters(''.join(word))
        if not base.is_trivial:
            observables.append(Observable(base))
    return observables


def commutation_graph(observables: Sequence[Observable]) -> nx.Graph:
    """Graph on observable indices with an edge for every commuting pair."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(observables)))
    for i, j in combinations(range(len(observables)), 2):
        if commutes(observables[i].base, observables[j].base):
            graph.add_edge(i, j)
    return graph


def enumerate_maximal_commuting_sets(n: int,
                                     observables: Optional[Sequence[Observable]] = None
                                     ) -> List[Tuple[int, ...]]:
    """
    Returns the maximal sets of mutually commuting observables as sorted index
    tuples. A maximal clique of the commutation graph is closed under products,
    so every clique found has 2^n - 1 members.
    """
    _check_cap(n)
    if observables is None:
        observables = enumerate_observables(n)
    graph = commutation_graph(observables)
    sets = sorted(tuple(sorted(clique)) for clique in nx.find_cliques(graph))
    logger.info("%d maximal commuting sets for %d qubits", len(sets), n)
    return sets


def product_sign(observables: Sequence[Observable]) -> Optional[int]:
    """
    Classifies a list of observables.

    Returns:
        int | None: +1 or -1 when the list is pairwise commuting and multiplies
        to +I or -I, otherwise None.

    Raises:
        QubitMismatchError: when the observables act on different qubit counts.
    """
    if not observables:
        return None
    n_qubits = observables[0].n_qubits
    for observable in observables:
        if observable.n_qubits != n_qubits:
            raise QubitMismatchError(n_qubits, observable.n_qubits)
    operators = [observable.operator for observable in observables]
    for a, b in combinations(operators, 2):
        if not commutes(a, b):
            return None
    total = multiply_all(operators)
    if not total.is_trivial or not total.is_hermitian:
        return None
    return 1 if total.phase_exp == 0 else -1


def make_id(observables: Sequence[Observable]) -> Optional[IdSet]:
    """Builds an IdSet from signed observables, moving any signs onto the set."""
    bases = [observable.positive() for observable in observables]
    if len({member.base for member in bases}) != len(bases):
        return None
    sign = product_sign(bases)
    if sign is None:
        return None
    return IdSet(tuple(bases), sign)


def enumerate_ids(n: int, m: int, observables: Optional[Sequence[Observable]] = None,
                  maximal_sets: Optional[Sequence[Tuple[int, ...]]] = None) -> List[IdSet]:
    """
    Returns every ID of size m, found as size-m subsets of maximal commuting sets
    whose product is +I or -I, deduplicated and ordered by member index tuple.
    """
    if m < 3:
        raise ValueError("an ID has at least three members")
    if observables is None:
        observables = enumerate_observables(n)
    if maximal_sets is None:
        maximal_sets = enumerate_maximal_commuting_sets(n, observables)
    found: Dict[Tuple[int, ...], IdSet] = {}
    for maximal_set in maximal_sets:
        for subset in combinations(maximal_set, m):
            if subset in found:
                continue
            id_set = make_id([observables[index] for index in subset])
            if id_set is not None:
                found[subset] = id_set
    return [found[subset] for subset in sorted(found)]


def build_catalog(n: int, sizes: Optional[Iterable[int]] = None) -> CommutingSetCatalog:
    """
    Builds the catalog of one qubit count. By default only ID3s and ID4s are
    listed, the only IDs that occur in proofs of up to three qubits.
    """
    logger.info("building catalog for %d qubits", n)
    observables = enumerate_observables(n)
    maximal_sets = enumerate_maximal_commuting_sets(n, observables)
    if sizes is None:
        sizes = DEFAULT_ID_SIZES
    catalog = CommutingSetCatalog(n, observables, maximal_sets)
    for size in sizes:
        if size > 2 ** n - 1:
            continue
        catalog.ids_by_size[size] = enumerate_ids(n, size, observables, maximal_sets)
        logger.info("%d ID%ds for %d qubits", len(catalog.ids_by_size[size]), size, n)
    return catalog
