"""Words over a shadowed graph: construction, admissibility, concatenation,
inversion, powers, reduction to normal form, and bounded enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graphs import EdgeRef, ShadowedGraph


class WordError(ValueError):
    """Invalid word construction or usage."""


@dataclass(frozen=True)
class Word:
    """An element of the free semigroupoid of a shadowed graph: the empty
    word, a vertex, or an admissible sequence of EdgeRefs.

    Vertices have length 0 and act as units at their own location.  The
    empty word is absorbing under concatenation and excluded from all
    enumerations.
    """

    context: ShadowedGraph
    kind: str  # "empty" | "vertex" | "path"
    vertex: str | None = None
    edges: tuple[EdgeRef, ...] = ()

    @staticmethod
    def empty(context: ShadowedGraph) -> "Word":
        return Word(context, "empty")

    @staticmethod
    def at_vertex(context: ShadowedGraph, vid: str) -> "Word":
        if vid not in context.vertices:
            raise WordError(f"unknown vertex {vid}")
        return Word(context, "vertex", vertex=vid)

    @staticmethod
    def path(context: ShadowedGraph, refs) -> "Word":
        refs = tuple(refs)
        if not refs:
            raise WordError("path words need at least one edge")
        for a, b in zip(refs, refs[1:]):
            if context.target(a) != context.source(b):
                raise WordError(f"inadmissible pair {a}.{b}")
        return Word(context, "path", edges=refs)

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    @property
    def is_path(self) -> bool:
        return self.kind == "path"

    @property
    def source(self) -> str:
        if self.kind == "vertex":
            return self.vertex
        if self.kind == "path":
            return self.context.source(self.edges[0])
        raise WordError("empty word has no source")

    @property
    def target(self) -> str:
        if self.kind == "vertex":
            return self.vertex
        if self.kind == "path":
            return self.context.target(self.edges[-1])
        raise WordError("empty word has no target")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_loop(self) -> bool:
        return self.kind != "empty" and self.source == self.target

    def sort_key(self):
        if self.kind == "empty":
            return (0, ())
        if self.kind == "vertex":
            return (1, (self.vertex,))
        return (2 + self.length, tuple(r.sort_key for r in self.edges))

    def __str__(self) -> str:
        if self.kind == "empty":
            return "0"
        if self.kind == "vertex":
            return self.vertex
        return ".".join(str(r) for r in self.edges)


def _check_context(w1: Word, w2: Word) -> None:
    if w1.context is not w2.context:
        raise WordError("words live over different graphs")


def concat(w1: Word, w2: Word) -> Word:
    """Admissible product; the empty word when the endpoints do not meet.
    No reduction is performed."""
    _check_context(w1, w2)
    ctx = w1.context
    if w1.is_empty or w2.is_empty:
        return Word.empty(ctx)
    if w1.is_vertex and w2.is_vertex:
        return w1 if w1.vertex == w2.vertex else Word.empty(ctx)
    if w1.is_vertex:
        return w2 if w1.vertex == w2.source else Word.empty(ctx)
    if w2.is_vertex:
        return w1 if w1.target == w2.vertex else Word.empty(ctx)
    if w1.target != w2.source:
        return Word.empty(ctx)
    return Word.path(ctx, w1.edges + w2.edges)


def inverse(w: Word) -> Word:
    """Reverse the sequence and flip every orientation."""
    if w.is_empty:
        raise WordError("the empty word has no inverse")
    if w.is_vertex:
        return w
    return Word.path(w.context, tuple(r.flip() for r in reversed(w.edges)))


def reduce(w: Word) -> Word:
    """Normal form: cancel every adjacent (ref, flipped ref) pair.  A fully
    cancelling path collapses to its source vertex.  Single linear stack
    pass; confluent."""
    if not w.is_path:
        return w
    stack: list[EdgeRef] = []
    for ref in w.edges:
        if stack and stack[-1] == ref.flip():
            stack.pop()
        else:
            stack.append(ref)
    if not stack:
        return Word.at_vertex(w.context, w.source)
    return Word.path(w.context, tuple(stack))


def is_reduced(w: Word) -> bool:
    if not w.is_path:
        return True
    return all(b != a.flip() for a, b in zip(w.edges, w.edges[1:]))


def power(w: Word, n: int) -> Word:
    """|n| self-concatenations of w (or its inverse for n < 0), with no
    reduction applied.  n = 0 is rejected; the constant function is defined
    separately in the integral calculus."""
    if n == 0:
        raise WordError("power 0 is not defined for words")
    if w.is_empty:
        return w
    if w.is_vertex:
        return w
    base = w if n > 0 else inverse(w)
    if abs(n) == 1:
        return base
    if not w.is_loop:
        return Word.empty(w.context)
    return Word.path(w.context, base.edges * abs(n))


def enumerate_words(
    context: ShadowedGraph, max_len: int, reduced_only: bool = False
) -> list[Word]:
    """All vertices plus all admissible paths of length 1..max_len, in
    deterministic (length, edge-key) order.  With reduced_only, exactly the
    reduce-fixed words: a bounded window onto the graph groupoid."""
    if max_len < 0:
        raise WordError("max_len must be nonnegative")
    out: list[Word] = [Word.at_vertex(context, v) for v in context.vertices]

    def extend(prefix: list[EdgeRef]) -> None:
        if len(prefix) >= max_len:
            return
        at = context.target(prefix[-1]) if prefix else None
        candidates = (
            context.refs_from(at)
            if at is not None
            else sorted(context.edge_refs(), key=lambda r: r.sort_key)
        )
        for ref in candidates:
            if reduced_only and prefix and ref == prefix[-1].flip():
                continue
            prefix.append(ref)
            out.append(Word.path(context, tuple(prefix)))
            extend(prefix)
            prefix.pop()

    extend([])
    out.sort(key=Word.sort_key)
    return out


# ---------------------------------------------------------------------------
# word literals: vertex `v1`, path `e1.e2^-1`, empty `0`


def parse_word(context: ShadowedGraph, text: str) -> Word:
    text = text.strip()
    if text == "0":
        return Word.empty(context)
    if "." not in text and not text.endswith("^-1") and text in context.vertices:
        return Word.at_vertex(context, text)
    refs = []
    known = set(context.base.edge_ids)
    for token in text.split("."):
        token = token.strip()
        if token.endswith("^-1"):
            base, forward = token[:-3], False
        else:
            base, forward = token, True
        if base not in known:
            raise WordError(f"unknown edge id {base!r} in word literal {text!r}")
        refs.append(EdgeRef(base, forward))
    try:
        return Word.path(context, refs)
    except WordError as exc:
        raise WordError(f"bad word literal {text!r}: {exc}") from exc


def format_word(w: Word) -> str:
    return str(w)
