"""Module for projector systems: the projectors of a diagram, their orthogonality
graph, the bases they form and the pure/hybrid classification of those bases"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx
import numpy as np

from ksforge.diagram import Diagram, validate
from ksforge.errors import DiagramError
from ksforge.projectors import Projector, orthogonal, orthogonal_exact, projector_pool

logger = logging.getLogger(__name__)

PURE = 'pure'
HYBRID = 'hybrid'
OTHER = 'other'


def detailed_symbol(multiplicities: Mapping[int, Mapping[int, int]],
                    basis_sizes: Mapping[int, int]) -> str:
    """
    Writes a detailed symbol such as "4_2 12_4 **12_2 2_4**-5_8 4_6 6_4".

    Args:
        multiplicities: rank -> (multiplicity -> number of projectors). Rank-1
            groups are written plainly, higher ranks in bold, each by ascending
            multiplicity.
        basis_sizes: basis size -> number of bases, written by descending size.
    """
    groups = []
    for rank in sorted(multiplicities):
        terms = ' '.join(f"{count}_{multiplicity}"
                         for multiplicity, count in sorted(multiplicities[rank].items()) if count)
        if not terms:
            continue
        groups.append(terms if rank == 1 else f"**{terms}**")
    right = ' '.join(f"{count}_{size}" for size, count in sorted(basis_sizes.items(), reverse=True)
                     if count)
    return f"{' '.join(groups)}-{right}"


@dataclass
class ProjectorSystem:
    """
    Projectors of a diagram together with their orthogonalities and bases.

    Attributes:
        n_qubits (int): number of qubits.
        projectors (list): the projector pool, `label` equal to list position.
        orthogonality (nx.Graph): edge between every orthogonal pair of labels.
        bases (list): sorted label tuples of projectors whose ranks sum to 2^n.
    """

    n_qubits: int
    projectors: List[Projector]
    orthogonality: nx.Graph
    bases: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return 2 ** self.n_qubits

    @cached_property
    def incidence(self) -> np.ndarray:
        """Projector x basis 0/1 matrix."""
        matrix = np.zeros((len(self.projectors), len(self.bases)), dtype=np.uint8)
        for column, basis in enumerate(self.bases):
            matrix[list(basis), column] = 1
        return matrix

    @cached_property
    def ranks(self) -> np.ndarray:
        return np.array([p.rank for p in self.projectors], dtype=np.int64)

    def projector_multiplicities(self) -> List[int]:
        """Number of bases each projector lies in."""
        return [int(count) for count in self.incidence.sum(axis=1)]

    def degree(self, label: int) -> int:
        """Number of projectors orthogonal to the given one."""
        return self.orthogonality.degree(label)

    def unsaturated_pairs(self) -> List[Tuple[int, int]]:
        """Orthogonal pairs that share no basis; empty for a saturated basis table."""
        together = set()
        for basis in self.bases:
            together.update(combinations(basis, 2))
        return sorted(tuple(sorted(edge)) for edge in self.orthogonality.edges
                      if tuple(sorted(edge)) not in together)

    def is_saturated(self) -> bool:
        return not self.unsaturated_pairs()

    @property
    def brief_symbol(self) -> str:
        return f"{len(self.projectors)}-{len(self.bases)}"

    @property
    def symbol(self) -> str:
        multiplicities: Dict[int, Counter] = defaultdict(Counter)
        for projector, count in zip(self.projectors, self.projector_multiplicities()):
            multiplicities[projector.rank][count] += 1
        return detailed_symbol(multiplicities, Counter(len(basis) for basis in self.bases))


def orthogonality_graph(projectors: Sequence[Projector]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(p.label for p in projectors)
    for p, q in combinations(projectors, 2):
        if orthogonal(p, q):
            graph.add_edge(p.label, q.label)
    return graph


def enumerate_bases(projectors: Sequence[Projector], orthogonality: nx.Graph,
                    dimension: int) -> List[Tuple[int, ...]]:
    """
    Returns every set of mutually orthogonal projectors whose ranks sum to the
    dimension, in lexicographic order of sorted labels. Cliques are extended by
    increasing label and abandoned as soon as the rank sum would pass the dimension.
    """
    rank = {p.label: p.rank for p in projectors}
    labels = sorted(rank)
    found: List[Tuple[int, ...]] = []

    def extend(clique: List[int], total: int, candidates: List[int]) -> None:
        if total == dimension:
            found.append(tuple(clique))
            return
        for position, label in enumerate(candidates):
            if total + rank[label] > dimension:
                continue
            neighbours = orthogonality[label]
            clique.append(label)
            extend(clique, total + rank[label],
                   [other for other in candidates[position + 1:] if other in neighbours])
            clique.pop()

    extend([], 0, labels)
    return found


def derive_system(d: Diagram) -> ProjectorSystem:
    """
    Builds the projector system of a KS-proof diagram.

    Raises:
        DiagramError: when the diagram is not a KS proof.
    """
    if not validate(d).is_ks_proof:
        raise DiagramError("a projector system is only derived from a KS-proof diagram")
    projectors = projector_pool(d.ids)
    graph = orthogonality_graph(projectors)
    bases = enumerate_bases(projectors, graph, 2 ** d.n_qubits)
    system = ProjectorSystem(d.n_qubits, projectors, graph, bases)
    logger.info("projector system %s, detailed symbol %s", system.brief_symbol, system.symbol)
    if not system.is_saturated():
        logger.warning("basis table is not saturated: %d orthogonal pairs share no basis",
                       len(system.unsaturated_pairs()))
    return system


def orthogonality_disagreements(projectors: Sequence[Projector]) -> Iterator[Tuple[int, int]]:
    """Yields label pairs where the signature rule and the exact matrix product disagree."""
    for p, q in combinations(projectors, 2):
        if orthogonal(p, q) != orthogonal_exact(p, q):
            yield p.label, q.label


@dataclass
class BasisClassification:
    """
    Attributes:
        kinds (list): PURE, HYBRID or OTHER per basis.
        pure_of_id (dict): ID index -> index of its eigenbasis.
        hybridization (dict): (pure basis, pure basis) -> hybrids drawing half their rank from each.
    """

    kinds: List[str]
    pure_of_id: Dict[int, int]
    hybridization: Dict[Tuple[int, int], List[int]]

    def indices(self, kind: str) -> List[int]:
        return [index for index, value in enumerate(self.kinds) if value == kind]


def classify_bases(system: ProjectorSystem) -> BasisClassification:
    """
    Labels each basis pure (the complete eigenbasis of one ID), hybrid (half of
    the dimension from each of two IDs) or other.
    """
    by_id: Dict[int, set] = defaultdict(set)
    for projector in system.projectors:
        by_id[projector.id_index].add(projector.label)
    half = system.dimension // 2
    kinds: List[str] = []
    pure_of_id: Dict[int, int] = {}
    pairs: Dict[int, Tuple[int, int]] = {}
    for index, basis in enumerate(system.bases):
        weight: Counter = Counter()
        for label in basis:
            projector = system.projectors[label]
            weight[projector.id_index] += projector.rank
        if len(weight) == 1:
            id_index = next(iter(weight))
            if set(basis) == by_id[id_index]:
                kinds.append(PURE)
                pure_of_id[id_index] = index
                continue
        if len(weight) == 2 and all(value == half for value in weight.values()):
            kinds.append(HYBRID)
            pairs[index] = tuple(sorted(weight))
            continue
        kinds.append(OTHER)
    hybridization: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for index, (first, second) in pairs.items():
        if first in pure_of_id and second in pure_of_id:
            hybridization[(pure_of_id[first], pure_of_id[second])].append(index)
    if OTHER in kinds:
        logger.info("%d bases are neither pure nor hybrid", kinds.count(OTHER))
    return BasisClassification(kinds, pure_of_id, dict(hybridization))
