"""Module for growing KS diagrams with a target symbol out of the ID catalog"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set

from ksforge.catalog import CommutingSetCatalog, IdSet
from ksforge.diagram import Diagram, DiagramSymbol, symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchLimits:
    """
    Bounds on a diagram search.

    Attributes:
        max_diagrams (int | None): stop after this many diagrams.
        max_seconds (float | None): stop after this much wall time.
        max_nodes (int | None): stop after visiting this many search nodes.
    """

    max_diagrams: Optional[int] = None
    max_seconds: Optional[float] = None
    max_nodes: Optional[int] = None

    def __post_init__(self):
        for name in ('max_diagrams', 'max_seconds', 'max_nodes'):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SearchOutcome:
    """
    Bookkeeping of a finished (or stopped) search.

    Attributes:
        found (int): diagrams emitted.
        nodes (int): search nodes visited.
        exhausted (bool): the whole search space was explored, so a zero count
            means no diagram exists.
        stop_reason (str): which limit ended the search, empty when exhausted.
    """

    found: int = 0
    nodes: int = 0
    exhausted: bool = False
    stop_reason: str = ''


class _LimitReached(Exception):
    pass


@dataclass
class _State:
    chosen: List[int] = field(default_factory=list)
    multiplicity: Counter = field(default_factory=Counter)
    sizes: Counter = field(default_factory=Counter)
    negatives: int = 0


class DiagramSearch:
    """
    Depth-first growth of diagrams over an ID catalog.

    Each search starts from a seed ID and only adds IDs that come later in
    catalog order, so every diagram is reached from its first ID. At each step
    the open observable (one in an odd number of IDs) with the fewest usable
    IDs is closed by adding one of them; a state with no open observable is
    checked against the target.

    Attributes:
        catalog (CommutingSetCatalog): source of IDs.
        target (DiagramSymbol): wanted symbol.
        id4_overlap (int | None): require two ID4s sharing exactly this many observables.
        limits (SearchLimits): bounds on the search.
        outcome (SearchOutcome): filled in while searching.
    """

    def __init__(self, catalog: CommutingSetCatalog, target: DiagramSymbol,
                 id4_overlap: Optional[int] = None, limits: SearchLimits = SearchLimits()):
        self.catalog = catalog
        self.target = target
        self.id4_overlap = id4_overlap
        self.limits = limits
        self.outcome = SearchOutcome()
        self.sizes = target.size_map()
        largest = 2 ** catalog.n_qubits - 1
        missing = sorted(size for size in self.sizes
                         if size < 3 or (size <= largest and size not in catalog.ids_by_size))
        if missing:
            raise ValueError(f"catalog lists no ID{missing[0]}s for target {target}")
        self.ids: List[IdSet] = catalog.ids(self.sizes)
        self.members: List[List[int]] = [[catalog.index[base] for base in id_set.bases]
                                         for id_set in self.ids]
        self.by_observable: Dict[int, List[int]] = {}
        for number, members in enumerate(self.members):
            for member in members:
                self.by_observable.setdefault(member, []).append(number)
        self.max_multiplicity = target.max_multiplicity
        self.max_observables = target.observable_count
        self.total_slots = sum(s * c for s, c in target.id_sizes)
        # at most this many observables may exceed multiplicity t
        self.above = {t: sum(a for m, a in target.obs_multiplicities if m > t)
                      for t in range(self.max_multiplicity + 1)}
        self._seen: Set[frozenset] = set()
        self._deadline: Optional[float] = None

    def run(self) -> Iterator[Diagram]:
        """Yields matching KS-proof diagrams in deterministic order."""
        if self.limits.max_seconds is not None:
            self._deadline = time.monotonic() + self.limits.max_seconds
        try:
            for seed in range(len(self.ids)):
                state = _State()
                if not self._add(state, seed):
                    continue
                logger.debug("seed %d: %s", seed, self.ids[seed])
                for diagram in self._grow(state, seed):
                    yield diagram
                    if self.limits.max_diagrams is not None \
                            and self.outcome.found >= self.limits.max_diagrams:
                        raise _LimitReached("diagram limit reached")
            self.outcome.exhausted = True
        except _LimitReached as reason:
            self.outcome.stop_reason = str(reason)
            logger.info("search stopped: %s", reason)

    def _tick(self) -> None:
        self.outcome.nodes += 1
        if self.limits.max_nodes is not None and self.outcome.nodes > self.limits.max_nodes:
            raise _LimitReached("node limit reached")
        if self._deadline is not None and self.outcome.nodes % 256 == 0 \
                and time.monotonic() > self._deadline:
            raise _LimitReached("time limit reached")

    def _fits(self, state: _State, number: int) -> bool:
        size = len(self.members[number])
        if state.sizes[size] + 1 > self.sizes.get(size, 0):
            return False
        new = 0
        for member in self.members[number]:
            count = state.multiplicity[member]
            if count + 1 > self.max_multiplicity:
                return False
            if count == 0:
                new += 1
        if len(state.multiplicity) + new > self.max_observables:
            return False
        return True

    def _add(self, state: _State, number: int) -> bool:
        if not self._fits(state, number):
            return False
        state.chosen.append(number)
        state.sizes[len(self.members[number])] += 1
        for member in self.members[number]:
            state.multiplicity[member] += 1
        if self.ids[number].is_negative:
            state.negatives += 1
        return True

    def _remove(self, state: _State) -> None:
        number = state.chosen.pop()
        state.sizes[len(self.members[number])] -= 1
        for member in self.members[number]:
            state.multiplicity[member] -= 1
            if state.multiplicity[member] == 0:
                del state.multiplicity[member]
        if self.ids[number].is_negative:
            state.negatives -= 1

    def _feasible(self, state: _State, open_count: int) -> bool:
        for threshold, allowed in self.above.items():
            if sum(1 for count in state.multiplicity.values() if count > threshold) > allowed:
                return False
        used = sum(state.multiplicity.values())
        return open_count <= self.total_slots - used

    def _grow(self, state: _State, seed: int) -> Iterator[Diagram]:
        self._tick()
        open_observables = [o for o, count in state.multiplicity.items() if count % 2]
        if not self._feasible(state, len(open_observables)):
            return
        if not open_observables:
            diagram = self._match(state)
            if diagram is not None:
                yield diagram
            candidates = sorted({n for o, count in state.multiplicity.items()
                                 if count < self.max_multiplicity
                                 for n in self.by_observable.get(o, ())
                                 if n > seed and n not in state.chosen})
        else:
            candidates = None
            for observable in sorted(open_observables):
                usable = [n for n in self.by_observable.get(observable, ())
                          if n > seed and n not in state.chosen and self._fits(state, n)]
                if candidates is None or len(usable) < len(candidates):
                    candidates = usable
                if not usable:
                    return
        for number in candidates:
            if self._add(state, number):
                yield from self._grow(state, seed)
                self._remove(state)

    def _match(self, state: _State) -> Optional[Diagram]:
        if state.negatives % 2 == 0:
            return None
        if dict(+state.sizes) != self.sizes:
            return None
        chosen = [self.ids[number] for number in sorted(state.chosen)]
        diagram = Diagram.from_ids(chosen)
        if symbol(diagram) != self.target:
            return None
        if self.id4_overlap is not None and not _has_id4_overlap(chosen, self.id4_overlap):
            return None
        if diagram.key in self._seen:
            return None
        self._seen.add(diagram.key)
        self.outcome.found += 1
        logger.info("found diagram %d (%s)", self.outcome.found, symbol(diagram))
        return diagram


def _has_id4_overlap(ids: List[IdSet], overlap: int) -> bool:
    fours = [set(id_set.bases) for id_set in ids if id_set.size == 4]
    return any(len(first & second) == overlap
               for i, first in enumerate(fours) for second in fours[i + 1:])


def search_diagrams(catalog: CommutingSetCatalog, target: DiagramSymbol | str,
                    id4_overlap: Optional[int] = None,
                    limits: SearchLimits = SearchLimits()) -> Iterator[Diagram]:
    """
    Streams KS-proof diagrams with the target symbol, stopping at the limits.
    Use DiagramSearch directly to read the SearchOutcome afterwards.
    """
    if isinstance(target, str):
        target = DiagramSymbol.parse(target)
    yield from DiagramSearch(catalog, target, id4_overlap, limits).run()
