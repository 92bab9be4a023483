"""The four graph measures: energy, diagram, groupoid and reduced-diagram,
with their weighted generalization.  All arithmetic is exact rational."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .diagrams import (
    EDGE_INJECTIVE,
    DiagramPolicy,
    enumerate_diagram_set,
    enumerate_reduced_diagram_set,
    is_basic,
)
from .graphs import ShadowedGraph
from .words import Word, enumerate_words, is_reduced


class MeasureDomainError(ValueError):
    """A set element lies outside the space's universe."""


class UnboundedUniverseError(ValueError):
    """A total was requested for a universe that is not finite."""


class SpaceKind(enum.Enum):
    ENERGY = "energy"  # all words
    DIAGRAM = "diagram"  # diagram-fixed words
    GROUPOID = "groupoid"  # reduce-fixed words
    REDUCED_DIAGRAM = "reduced-diagram"  # both


@dataclass(frozen=True)
class MeasureSpace:
    """A (graph, universe kind, policy) triple.  The sigma-algebra is the
    power set of the universe; every finite word set is measurable.

    Energy and groupoid universes are infinite whenever the graph has a
    cycle, so enumeration of those takes an explicit cap (`max_len`,
    defaulting to twice the edge count)."""

    graph: ShadowedGraph
    kind: SpaceKind
    policy: DiagramPolicy = EDGE_INJECTIVE
    max_len: int | None = None

    @property
    def effective_max_len(self) -> int:
        if self.max_len is not None:
            return self.max_len
        return 2 * len(self.graph.base.edges)

    def contains(self, w: Word) -> bool:
        """Universe membership, independent of any enumeration cap."""
        if w.is_empty:
            return False
        if w.context is not self.graph:
            return False
        if self.kind is SpaceKind.ENERGY:
            return True
        if self.kind is SpaceKind.GROUPOID:
            return is_reduced(w)
        if self.kind is SpaceKind.DIAGRAM:
            return is_basic(w, self.policy)
        return is_reduced(w) and is_basic(w, self.policy, reduced=True)

    def universe(self, max_len: int | None = None) -> tuple[Word, ...]:
        """The universe, truncated at max_len for the unbounded kinds."""
        cap = self.effective_max_len if max_len is None else max_len
        return _universe_cached(self.graph, self.kind, self.policy, cap)

    @property
    def is_bounded(self) -> bool:
        return (
            self.kind in (SpaceKind.DIAGRAM, SpaceKind.REDUCED_DIAGRAM)
            and self.policy is EDGE_INJECTIVE
        )


@functools.lru_cache(maxsize=None)
def _universe_cached(
    graph: ShadowedGraph, kind: SpaceKind, policy: DiagramPolicy, cap: int
) -> tuple[Word, ...]:
    if kind is SpaceKind.ENERGY:
        return tuple(enumerate_words(graph, cap, reduced_only=False))
    if kind is SpaceKind.GROUPOID:
        return tuple(enumerate_words(graph, cap, reduced_only=True))
    if kind is SpaceKind.DIAGRAM:
        return tuple(enumerate_diagram_set(graph, policy, cap))
    return tuple(enumerate_reduced_diagram_set(graph, policy, cap))


def word_measure(space: MeasureSpace, w: Word) -> Fraction:
    """Singleton measure: vertex weight for vertices (default 0), summed
    edge weights for paths (default length)."""
    if w.is_vertex:
        return space.graph.base.vertex_weight(w.vertex)
    return sum((space.graph.weight(r) for r in w.edges), Fraction(0))


def measure(space: MeasureSpace, words: Iterable[Word]) -> Fraction:
    """Finitely additive measure of an explicit word set.  Duplicates are
    collapsed; the empty word contributes nothing; any element outside the
    universe is a domain error."""
    total = Fraction(0)
    for w in set(words):
        if w.is_empty:
            continue
        if not space.contains(w):
            raise MeasureDomainError(
                f"word {w} is not in the {space.kind.value} universe"
            )
        total += word_measure(space, w)
    return total


def total_reduced_measure(space: MeasureSpace) -> Fraction:
    """Measure of the full universe; finite only for the diagram kinds
    under the edge-injective policy."""
    if not space.is_bounded:
        raise UnboundedUniverseError(
            f"the {space.kind.value} universe under policy "
            f"{space.policy.value} is not a bounded measure space"
        )
    return measure(space, space.universe())


def boundedness_report(
    space: MeasureSpace, caps: Iterable[int]
) -> list[tuple[int, Fraction]]:
    """Measures of the truncated universes at each cap.  Strictly
    increasing values are evidence of an unbounded measure; a bounded
    space saturates at its finite total."""
    return [(cap, measure(space, space.universe(max_len=cap))) for cap in caps]
