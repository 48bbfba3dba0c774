"""Module for parity proofs: odd sets of bases in which every projector occurs an
even number of times, found as the odd-weight vectors of the GF(2) kernel of the
projector x basis incidence matrix"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
import pandas as pd

from ksforge import config, gf2
from ksforge.bases import ProjectorSystem, detailed_symbol
from ksforge.errors import KernelCapError

logger = logging.getLogger(__name__)

CENSUS_COLUMNS = ['type_PB', 'detailed_symbol', 'count', 'example_basis_indices']
ORACLE_PROJECTOR_LIMIT = 40


@dataclass(frozen=True)
class ParityProof:
    """
    Attributes:
        basis_indices (tuple): 0-based indices of the bases, ascending.
        projector_multiplicities (dict): projector label -> number of chosen bases
            containing it, for the projectors that occur at all.
        symbol (str): detailed symbol, e.g. "28_2 8_4-11_8".
    """

    basis_indices: Tuple[int, ...]
    projector_multiplicities: Dict[int, int] = field(hash=False, compare=False)
    symbol: str = field(compare=False)

    @property
    def bases(self) -> int:
        return len(self.basis_indices)

    @property
    def projectors(self) -> int:
        return len(self.projector_multiplicities)

    @property
    def type_pb(self) -> str:
        return f"{self.projectors}-{self.bases}"

    def matches(self, type_filter: Optional[str]) -> bool:
        """A filter is either a brief type such as "36-11" or a full detailed symbol."""
        return type_filter is None or type_filter in (self.type_pb, self.symbol)


@dataclass
class ParityReport:
    """
    Outcome of checking a candidate parity proof.

    Attributes:
        odd_basis_count (bool): the number of bases is odd.
        even_multiplicities (bool): every projector occurs an even number of times.
        unassignable (bool | None): the 0/1 oracle found no way to pick exactly
            one projector per basis; None when the oracle was skipped.
        odd_projectors (list): labels occurring an odd number of times.
    """

    odd_basis_count: bool
    even_multiplicities: bool
    unassignable: Optional[bool] = None
    odd_projectors: List[int] = field(default_factory=list)

    @property
    def is_parity_proof(self) -> bool:
        return self.odd_basis_count and self.even_multiplicities and self.unassignable is not False


@dataclass
class ParityResult:
    """
    Attributes:
        kernel_dimension (int): dimension of the GF(2) kernel of the incidence matrix.
        total (int): parity proofs counted (after the type filter).
        census (pd.DataFrame): one row per detailed symbol, sorted by (B, P, symbol).
        proofs (list): the proofs themselves when collected.
    """

    kernel_dimension: int
    total: int
    census: pd.DataFrame
    proofs: List[ParityProof] = field(default_factory=list)

    def by_type(self) -> pd.DataFrame:
        """Counts grouped by the brief P-B type alone."""
        grouped = self.census.groupby(['B', 'P', 'type_PB'], as_index=False)['count'].sum()
        return grouped[['type_PB', 'count']].reset_index(drop=True)


def _symbol(ranks: np.ndarray, sizes: np.ndarray, counts: np.ndarray, chosen: np.ndarray) -> str:
    multiplicities: Dict[int, Counter] = defaultdict(Counter)
    for label in np.flatnonzero(counts):
        multiplicities[int(ranks[label])][int(counts[label])] += 1
    return detailed_symbol(multiplicities, Counter(int(size) for size in sizes[chosen]))


def proof_symbol(system: ProjectorSystem, proof: ParityProof | Iterable[int]) -> str:
    """Detailed symbol of a set of bases, e.g. "12_2 **12_2**-1_8 4_6 4_4"."""
    indices = list(proof.basis_indices if isinstance(proof, ParityProof) else proof)
    vector = np.zeros(len(system.bases), dtype=np.int64)
    vector[indices] = 1
    counts = system.incidence.astype(np.int64) @ vector
    return _symbol(system.ranks, _basis_sizes(system), counts, vector.astype(bool))


def _basis_sizes(system: ProjectorSystem) -> np.ndarray:
    return np.array([len(basis) for basis in system.bases], dtype=np.int64)


def _walk(incidence: np.ndarray, ranks: np.ndarray, sizes: np.ndarray, kernel: np.ndarray,
          fixed: Tuple[int, ...], type_filter: Optional[str], collect: bool):
    """
    Walks one partition of the kernel. Projector counts and the weight are
    updated incrementally on every Gray-code step.
    """
    incidence = incidence.astype(np.int64)
    counter: Counter = Counter()
    examples: Dict[Tuple[int, int, str], Tuple[int, ...]] = {}
    proofs: List[ParityProof] = []
    counts = np.zeros(incidence.shape[0], dtype=np.int64)
    weight = 0
    for flipped, vector in gf2.gray_walk(kernel, fixed):
        if flipped < 0:
            counts = incidence @ vector.astype(np.int64)
            weight = int(vector.sum())
        else:
            columns = np.flatnonzero(kernel[flipped])
            signs = 2 * vector[columns].astype(np.int64) - 1
            counts += incidence[:, columns] @ signs
            weight += int(signs.sum())
        if weight % 2 == 0:
            continue
        chosen = vector.astype(bool)
        symbol = _symbol(ranks, sizes, counts, chosen)
        key = (weight, int(np.count_nonzero(counts)), symbol)
        if type_filter is not None and type_filter not in (f"{key[1]}-{key[0]}", symbol):
            continue
        counter[key] += 1
        indices = tuple(gf2.bits_to_indices(vector))
        examples.setdefault(key, indices)
        if collect:
            multiplicities = {int(label): int(counts[label]) for label in np.flatnonzero(counts)}
            proofs.append(ParityProof(indices, multiplicities, symbol))
    return counter, examples, proofs


def _prefixes(dimension: int, workers: int) -> List[Tuple[int, ...]]:
    fixed = min(dimension, (workers - 1).bit_length()) if workers > 1 else 0
    return list(cartesian((0, 1), repeat=fixed))


def _census(counter: Counter, examples: Dict) -> pd.DataFrame:
    rows = []
    for key in sorted(counter):
        bases, projectors, symbol = key
        rows.append({'type_PB': f"{projectors}-{bases}",
                     'detailed_symbol': symbol,
                     'count': counter[key],
                     'example_basis_indices': ' '.join(str(i + 1) for i in examples[key]),
                     'P': projectors,
                     'B': bases})
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS + ['P', 'B'])


def find_parity_proofs(system: ProjectorSystem, max_kernel_dim: Optional[int] = None,
                       type_filter: Optional[str] = None, collect: bool = False,
                       workers: Optional[int] = None) -> ParityResult:
    """
    Enumerates every parity proof of a projector system.

    Args:
        system: the projector system.
        max_kernel_dim: refuse kernels above this dimension, KSFORGE_KERNEL_CAP by default.
        type_filter: keep only proofs of this brief type ("36-11") or detailed symbol.
        collect: keep the proofs, not just the census.
        workers: processes sharing the walk, KSFORGE_THREADS by default. The kernel
            is split by fixing its leading coordinates.

    Raises:
        KernelCapError: when the kernel dimension exceeds the cap.
    """
    cap = config.KERNEL_CAP if max_kernel_dim is None else max_kernel_dim
    workers = config.THREADS if workers is None else max(1, workers)
    kernel = gf2.kernel_basis(system.incidence)
    dimension = kernel.shape[0]
    if dimension > cap:
        raise KernelCapError(dimension, cap)
    logger.info("kernel of the %dx%d incidence matrix has dimension %d",
                *system.incidence.shape, dimension)

    sizes = _basis_sizes(system)
    jobs = [(system.incidence, system.ranks, sizes, kernel, prefix, type_filter, collect)
            for prefix in _prefixes(dimension, workers)]
    if len(jobs) == 1:
        results = [_walk(*jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_walk, *zip(*jobs)))

    counter: Counter = Counter()
    examples: Dict = {}
    proofs: List[ParityProof] = []
    for partial, partial_examples, partial_proofs in results:
        counter.update(partial)
        for key, example in partial_examples.items():
            examples.setdefault(key, example)
        proofs.extend(partial_proofs)
    total = sum(counter.values())
    if type_filter is None and total != gf2.odd_weight_count(kernel):
        logger.error("walk counted %d proofs, kernel predicts %d", total, gf2.odd_weight_count(kernel))
    logger.info("%d parity proofs of %d types", total, len(counter))
    return ParityResult(dimension, total, _census(counter, examples), proofs)


def iter_parity_proofs(system: ProjectorSystem, max_kernel_dim: Optional[int] = None,
                       type_filter: Optional[str] = None) -> Iterator[ParityProof]:
    """Streams parity proofs in Gray-code order without keeping them."""
    cap = config.KERNEL_CAP if max_kernel_dim is None else max_kernel_dim
    kernel = gf2.kernel_basis(system.incidence)
    if kernel.shape[0] > cap:
        raise KernelCapError(kernel.shape[0], cap)
    incidence = system.incidence.astype(np.int64)
    sizes = _basis_sizes(system)
    for _, vector in gf2.gray_walk(kernel):
        if vector.sum() % 2 == 0:
            continue
        counts = incidence @ vector.astype(np.int64)
        proof = ParityProof(tuple(gf2.bits_to_indices(vector)),
                            {int(label): int(counts[label]) for label in np.flatnonzero(counts)},
                            _symbol(system.ranks, sizes, counts, vector.astype(bool)))
        if proof.matches(type_filter):
            yield proof


def verify_parity_proof(system: ProjectorSystem, basis_indices: Iterable[int],
                        oracle: bool = True) -> ParityReport:
    """
    Checks a set of 0-based basis indices: odd count, even projector
    multiplicities and, for at most ORACLE_PROJECTOR_LIMIT projectors, an
    independent search for a 0/1 assignment with exactly one 1 per basis.
    """
    indices = sorted(set(basis_indices))
    if any(index < 0 or index >= len(system.bases) for index in indices):
        raise IndexError(f"basis index out of range 0..{len(system.bases) - 1}")
    counts: Counter = Counter(label for index in indices for label in system.bases[index])
    odd = sorted(label for label, count in counts.items() if count % 2)
    report = ParityReport(len(indices) % 2 == 1, not odd, odd_projectors=odd)
    if oracle and indices and len(counts) <= ORACLE_PROJECTOR_LIMIT:
        report.unassignable = not _has_exact_cover([system.bases[index] for index in indices])
    return report


def _has_exact_cover(bases: Sequence[Sequence[int]]) -> bool:
    """
    Whether some projectors can be given the value 1 so that each basis holds
    exactly one of them.
    """
    containing: Dict[int, List[int]] = defaultdict(list)
    for number, basis in enumerate(bases):
        for label in basis:
            containing[label].append(number)

    def cover(uncovered: Set[int], blocked: Set[int]) -> bool:
        if not uncovered:
            return True
        number = min(uncovered, key=lambda b: sum(1 for p in bases[b] if p not in blocked))
        for label in bases[number]:
            if label in blocked:
                continue
            hits = containing[label]
            if any(other not in uncovered for other in hits):
                continue
            newly_blocked = {p for other in hits for p in bases[other]} - blocked
            if cover(uncovered - set(hits), blocked | newly_blocked):
                return True
        return False

    return cover(set(range(len(bases))), set())
