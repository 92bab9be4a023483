"""Diagram and reduced-diagram maps and their fixed-point sets.

Two readings of the collapse onto a word's graphical image are supported:

* run_collapse -- each maximal run of one repeated EdgeRef becomes a single
  occurrence.
* edge_injective -- run collapse followed by truncation at the first EdgeRef
  (base + orientation) already present in the prefix.  This is the reading
  under which the fixed-point sets are finite without a length cap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import EdgeRef, ShadowedGraph
from .words import Word, WordError, is_reduced, reduce


class DiagramPolicy(enum.Enum):
    RUN_COLLAPSE = "run-collapse"
    EDGE_INJECTIVE = "edge-injective"


RUN_COLLAPSE = DiagramPolicy.RUN_COLLAPSE
EDGE_INJECTIVE = DiagramPolicy.EDGE_INJECTIVE


def diagram(w: Word, policy: DiagramPolicy = EDGE_INJECTIVE) -> Word:
    """Collapse a word onto its diagram.  Idempotent; preserves the source;
    a loop-edge power collapses to the single loop edge."""
    if w.is_empty or w.is_vertex:
        return w
    collapsed: list[EdgeRef] = []
    for ref in w.edges:
        if collapsed and collapsed[-1] == ref:
            continue
        collapsed.append(ref)
    if policy is EDGE_INJECTIVE:
        seen: set[EdgeRef] = set()
        prefix: list[EdgeRef] = []
        for ref in collapsed:
            if ref in seen:
                break
            seen.add(ref)
            prefix.append(ref)
        collapsed = prefix
    return Word.path(w.context, tuple(collapsed))


def reduced_diagram(w: Word, policy: DiagramPolicy = EDGE_INJECTIVE) -> Word:
    """Collapse-and-cancel to a joint fixpoint: apply the diagram map, then
    full reduction, and repeat until stable.  The result is both reduced and
    diagram-fixed, the map is idempotent, and composing with the diagram map
    first changes nothing (diagram is idempotent, so the first iteration
    already coincides)."""
    if w.is_empty:
        return w
    while True:
        nxt = reduce(diagram(w, policy))
        if nxt == w:
            return nxt
        w = nxt


def is_basic(w: Word, policy: DiagramPolicy = EDGE_INJECTIVE, reduced: bool = False) -> bool:
    """True iff w is fixed by the (reduced) diagram map."""
    if w.is_empty:
        raise WordError("the empty word is not classified")
    if reduced:
        return reduced_diagram(w, policy) == w
    return diagram(w, policy) == w


@dataclass(frozen=True)
class DiagramSet:
    """The ordered fixed-point set of the diagram map (tag "D") or of the
    reduced diagram map (tag "D_r") under one policy."""

    elements: tuple[Word, ...]
    universe: str  # "D" | "D_r"
    policy: DiagramPolicy

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def vertex_part(self) -> tuple[Word, ...]:
        return tuple(w for w in self.elements if w.is_vertex)

    @property
    def path_part(self) -> tuple[Word, ...]:
        return tuple(w for w in self.elements if w.is_path)


class EnumerationLimitExceeded(RuntimeError):
    """The fixed-point set grew past the caller's element limit."""


def _enumerate_fixed(
    context: ShadowedGraph,
    policy: DiagramPolicy,
    max_len: int,
    reduced: bool,
    limit: int | None = None,
) -> list[Word]:
    # DFS over admissible extensions; pruning keeps exactly the fixed words:
    # no adjacent repeat (run collapse), no revisited EdgeRef under
    # edge_injective, no adjacent inverse pair when reduced.
    if policy is EDGE_INJECTIVE:
        depth_cap = 2 * len(context.base.edges)
    else:
        depth_cap = max_len
    out: list[Word] = [Word.at_vertex(context, v) for v in context.vertices]
    used: set[EdgeRef] = set()

    def extend(prefix: list[EdgeRef]) -> None:
        if len(prefix) >= depth_cap:
            return
        at = context.target(prefix[-1]) if prefix else None
        candidates = (
            context.refs_from(at)
            if at is not None
            else sorted(context.edge_refs(), key=lambda r: r.sort_key)
        )
        for ref in candidates:
            if prefix and ref == prefix[-1]:
                continue
            if reduced and prefix and ref == prefix[-1].flip():
                continue
            if policy is EDGE_INJECTIVE and ref in used:
                continue
            prefix.append(ref)
            used.add(ref)
            out.append(Word.path(context, tuple(prefix)))
            if limit is not None and len(out) > limit:
                raise EnumerationLimitExceeded(f"more than {limit} elements")
            extend(prefix)
            prefix.pop()
            used.discard(ref)

    extend([])
    out.sort(key=Word.sort_key)
    return out


def enumerate_diagram_set(
    context: ShadowedGraph,
    policy: DiagramPolicy = EDGE_INJECTIVE,
    max_len: int = 0,
    limit: int | None = None,
) -> DiagramSet:
    """All diagram-fixed words.  Under edge_injective the set is finite and
    max_len is ignored; under run_collapse it bounds the path lengths."""
    elements = _enumerate_fixed(context, policy, max_len, reduced=False, limit=limit)
    return DiagramSet(tuple(elements), "D", policy)


def enumerate_reduced_diagram_set(
    context: ShadowedGraph,
    policy: DiagramPolicy = EDGE_INJECTIVE,
    max_len: int = 0,
    limit: int | None = None,
) -> DiagramSet:
    """The diagram-fixed words that are additionally reduce-fixed."""
    elements = _enumerate_fixed(context, policy, max_len, reduced=True, limit=limit)
    return DiagramSet(tuple(elements), "D_r", policy)


def loops_of(diagram_set: DiagramSet) -> tuple[Word, ...]:
    """Path elements with equal source and target."""
    if diagram_set.universe != "D_r":
        raise WordError("loops are taken from a reduced diagram set")
    return tuple(w for w in diagram_set.path_part if w.is_loop)
