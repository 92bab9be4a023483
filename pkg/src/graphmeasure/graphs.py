"""Finite directed graphs, shadowed (two-colored) graphs, parsing and isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional


class GraphError(ValueError):
    """Invalid graph construction or usage."""


class GraphParseError(GraphError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class DirectedGraph:
    """A finite directed graph with optional positive edge weights and
    nonnegative vertex weights.  Defaults (edge weight 1, vertex weight 0)
    give the plain length/zero measures downstream.

    `vertices` and `edges` keep declaration order; edges are (id, src, dst).
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    edge_weights: dict[str, Fraction] = field(default_factory=dict)
    vertex_weights: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not self.vertices:
            raise GraphError("graph must have at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex id")
        vset = set(self.vertices)
        eids = [e[0] for e in self.edges]
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge id")
        for eid, src, dst in self.edges:
            if src not in vset or dst not in vset:
                raise GraphError(f"edge {eid} has undeclared endpoint")
        for eid, w in self.edge_weights.items():
            if w <= 0:
                raise GraphError(f"edge {eid} has nonpositive weight {w}")
        for vid, w in self.vertex_weights.items():
            if w < 0:
                raise GraphError(f"vertex {vid} has negative weight {w}")

    # identity-based hashing: graphs are immutable values shared by reference
    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    def edge_endpoints(self, eid: str) -> tuple[str, str]:
        for e, s, t in self.edges:
            if e == eid:
                return s, t
        raise GraphError(f"unknown edge id {eid}")

    def edge_weight(self, eid: str) -> Fraction:
        return self.edge_weights.get(eid, Fraction(1))

    def vertex_weight(self, vid: str) -> Fraction:
        return self.vertex_weights.get(vid, Fraction(0))

    def out_degree(self, vid: str) -> int:
        return sum(1 for _, s, _ in self.edges if s == vid)

    def in_degree(self, vid: str) -> int:
        return sum(1 for _, _, t in self.edges if t == vid)


@dataclass(frozen=True, order=True)
class EdgeRef:
    """A directed edge of the shadowed graph: a base edge taken forward or
    as its shadow (reversed).  Orientation doubles as the two-coloring."""

    base: str
    forward: bool = True

    def flip(self) -> "EdgeRef":
        return EdgeRef(self.base, not self.forward)

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.base, 0 if self.forward else 1)

    def __str__(self) -> str:
        return self.base if self.forward else f"{self.base}^-1"


class ShadowedGraph:
    """The union of a directed graph with its shadow: every edge present in
    both orientations, vertex set unchanged."""

    def __init__(self, base: DirectedGraph):
        self.base = base
        self._endpoints = {e: (s, t) for e, s, t in base.edges}

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.base.vertices

    def edge_refs(self) -> tuple[EdgeRef, ...]:
        fwd = tuple(EdgeRef(e, True) for e in self.base.edge_ids)
        shd = tuple(EdgeRef(e, False) for e in self.base.edge_ids)
        return fwd + shd

    def source(self, ref: EdgeRef) -> str:
        s, t = self._endpoints[ref.base]
        return s if ref.forward else t

    def target(self, ref: EdgeRef) -> str:
        s, t = self._endpoints[ref.base]
        return t if ref.forward else s

    def weight(self, ref: EdgeRef) -> Fraction:
        return self.base.edge_weight(ref.base)

    def refs_from(self, vid: str) -> list[EdgeRef]:
        out = [r for r in self.edge_refs() if self.source(r) == vid]
        out.sort(key=lambda r: r.sort_key)
        return out


def shadow(graph: DirectedGraph) -> ShadowedGraph:
    return ShadowedGraph(graph)


@dataclass(frozen=True)
class GraphMapping:
    """An incidence-preserving bijection between two graphs.

    For plain digraph isomorphisms `edge_map` maps edge ids; for shadow
    isomorphisms it maps EdgeRefs (orientation may flip unless colored).
    """

    vertex_map: dict[str, str]
    edge_map: dict
    colored: bool = False

    def map_ref(self, ref: EdgeRef) -> EdgeRef:
        if ref in self.edge_map:
            return self.edge_map[ref]
        # id-level map: orientation carries over
        image = self.edge_map[ref.base]
        return EdgeRef(image, ref.forward)


# ---------------------------------------------------------------------------
# graph file format


def parse_graph(text: str) -> DirectedGraph:
    """Parse the line-oriented graph file format.

    Statements: `vertex <id>`, `edge <id> <src> <dst> [weight]`,
    `vweight <id> <value>`, `# comment`.  Weights are decimal or `p/q`.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    edge_weights: dict[str, Fraction] = {}
    vertex_weights: dict[str, Fraction] = {}
    seen_v: set[str] = set()
    seen_e: set[str] = set()

    def parse_weight(token: str, lineno: int) -> Fraction:
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise GraphParseError(f"bad weight {token!r}", lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "vertex":
            if len(parts) != 2:
                raise GraphParseError("vertex takes exactly one id", lineno)
            vid = parts[1]
            if vid in seen_v:
                raise GraphParseError(f"duplicate vertex id {vid}", lineno)
            seen_v.add(vid)
            vertices.append(vid)
        elif kw == "edge":
            if len(parts) not in (4, 5):
                raise GraphParseError("edge takes id, src, dst and optional weight", lineno)
            eid, src, dst = parts[1], parts[2], parts[3]
            if eid in seen_e:
                raise GraphParseError(f"duplicate edge id {eid}", lineno)
            if src not in seen_v:
                raise GraphParseError(f"edge {eid}: undeclared source {src}", lineno)
            if dst not in seen_v:
                raise GraphParseError(f"edge {eid}: undeclared target {dst}", lineno)
            seen_e.add(eid)
            edges.append((eid, src, dst))
            if len(parts) == 5:
                w = parse_weight(parts[4], lineno)
                if w <= 0:
                    raise GraphParseError(f"edge {eid}: nonpositive weight {w}", lineno)
                edge_weights[eid] = w
        elif kw == "vweight":
            if len(parts) != 3:
                raise GraphParseError("vweight takes id and value", lineno)
            vid = parts[1]
            if vid not in seen_v:
                raise GraphParseError(f"vweight for undeclared vertex {vid}", lineno)
            w = parse_weight(parts[2], lineno)
            if w < 0:
                raise GraphParseError(f"vertex {vid}: negative weight {w}", lineno)
            vertex_weights[vid] = w
        else:
            raise GraphParseError(f"unknown statement {kw!r}", lineno)

    if not vertices:
        raise GraphParseError("graph has no vertices", max(1, len(text.splitlines())))
    return DirectedGraph(tuple(vertices), tuple(edges), edge_weights, vertex_weights)


def serialize_graph(graph: DirectedGraph) -> str:
    """Canonical file form: vertices first, then edges, declaration order."""
    lines = [f"vertex {v}" for v in graph.vertices]
    for eid, src, dst in graph.edges:
        w = graph.edge_weights.get(eid)
        if w is None:
            lines.append(f"edge {eid} {src} {dst}")
        else:
            lines.append(f"edge {eid} {src} {dst} {w}")
    for vid in graph.vertices:
        w = graph.vertex_weights.get(vid)
        if w is not None and w != 0:
            lines.append(f"vweight {vid} {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# isomorphism search (exhaustive backtracking, desk-scale graphs)


def _pair_counts(edges) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for _, s, t in edges:
        counts[(s, t)] = counts.get((s, t), 0) + 1
    return counts


def _degree_sig(graph: DirectedGraph, vid: str) -> tuple[int, int, int]:
    loops = sum(1 for _, s, t in graph.edges if s == vid and t == vid)
    return (graph.out_degree(vid), graph.in_degree(vid), loops)


def find_digraph_isomorphism(
    g1: DirectedGraph, g2: DirectedGraph
) -> Optional[GraphMapping]:
    """First incidence-preserving bijection in lexicographic backtracking
    order, or None.  Multi-edges and loops are respected via count matrices."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    c1, c2 = _pair_counts(g1.edges), _pair_counts(g2.edges)
    sig1 = {v: _degree_sig(g1, v) for v in g1.vertices}
    sig2 = {v: _degree_sig(g2, v) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    order = list(g1.vertices)
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in g2.vertices:
            if b in used or sig1[a] != sig2[b]:
                continue
            ok = c1.get((a, a), 0) == c2.get((b, b), 0)
            if ok:
                for x, y in assignment.items():
                    if c1.get((a, x), 0) != c2.get((b, y), 0) or c1.get(
                        (x, a), 0
                    ) != c2.get((y, b), 0):
                        ok = False
                        break
            if not ok:
                continue
            assignment[a] = b
            used.add(b)
            if extend(i + 1):
                return True
            del assignment[a]
            used.remove(b)
        return False

    if not extend(0):
        return None

    # pair up multi-edge classes deterministically by id order
    edge_map: dict[str, str] = {}
    by_pair2: dict[tuple[str, str], list[str]] = {}
    for eid, s, t in g2.edges:
        by_pair2.setdefault((s, t), []).append(eid)
    for ids in by_pair2.values():
        ids.sort()
    by_pair1: dict[tuple[str, str], list[str]] = {}
    for eid, s, t in g1.edges:
        by_pair1.setdefault((s, t), []).append(eid)
    for (s, t), ids in by_pair1.items():
        targets = by_pair2[(assignment[s], assignment[t])]
        for src_id, dst_id in zip(sorted(ids), targets):
            edge_map[src_id] = dst_id
    return GraphMapping(dict(assignment), edge_map, colored=False)


def find_shadow_isomorphism(
    s1: ShadowedGraph, s2: ShadowedGraph, colored: bool
) -> Optional[GraphMapping]:
    """Isomorphism of two shadowed graphs viewed as directed multigraphs.

    When `colored`, the forward/shadow coloring must be preserved, which is
    equivalent to plain isomorphism of the underlying graphs."""
    g1, g2 = s1.base, s2.base
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None

    def ref_edges(s: ShadowedGraph):
        return [(r, s.source(r), s.target(r)) for r in s.edge_refs()]

    e1, e2 = ref_edges(s1), ref_edges(s2)

    def counts(edges, with_color):
        out: dict = {}
        for r, s, t in edges:
            key = (s, t, r.forward) if with_color else (s, t)
            out[key] = out.get(key, 0) + 1
        return out

    c1, c2 = counts(e1, colored), counts(e2, colored)

    def sig(s: ShadowedGraph, vid: str):
        outd = sum(1 for r in s.edge_refs() if s.source(r) == vid)
        ind = sum(1 for r in s.edge_refs() if s.target(r) == vid)
        loops = sum(
            1 for r in s.edge_refs() if s.source(r) == vid and s.target(r) == vid
        )
        return (outd, ind, loops)

    sig1 = {v: sig(s1, v) for v in g1.vertices}
    sig2 = {v: sig(s2, v) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    order = list(g1.vertices)
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def count_between(c, a, b, color=None):
        if colored:
            return c.get((a, b, color), 0)
        return c.get((a, b), 0)

    def compatible(a: str, b: str) -> bool:
        pairs = list(assignment.items()) + [(a, b)]
        for x, gx in pairs:
            keys = [(a, x, b, gx), (x, a, gx, b)]
            for s1v, t1v, s2v, t2v in keys:
                if colored:
                    for color in (True, False):
                        if c1.get((s1v, t1v, color), 0) != c2.get(
                            (s2v, t2v, color), 0
                        ):
                            return False
                else:
                    if c1.get((s1v, t1v), 0) != c2.get((s2v, t2v), 0):
                        return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in g2.vertices:
            if b in used or sig1[a] != sig2[b]:
                continue
            if not compatible(a, b):
                continue
            assignment[a] = b
            used.add(b)
            if extend(i + 1):
                return True
            del assignment[a]
            used.remove(b)
        return False

    if not extend(0):
        return None

    # match EdgeRefs class-by-class; classes keyed by mapped endpoints
    # (and color when required), broken lexicographically
    def classes(edges, vmap=None, with_color=colored):
        out: dict = {}
        for r, s, t in edges:
            if vmap is not None:
                s, t = vmap[s], vmap[t]
            key = (s, t, r.forward) if with_color else (s, t)
            out.setdefault(key, []).append(r)
        for refs in out.values():
            refs.sort(key=lambda r: r.sort_key)
        return out

    cls1 = classes(e1, vmap=assignment)
    cls2 = classes(e2)
    edge_map: dict[EdgeRef, EdgeRef] = {}
    for key, refs in cls1.items():
        targets = cls2.get(key, [])
        if len(targets) != len(refs):
            return None
        for r, t in zip(refs, targets):
            edge_map[r] = t
    return GraphMapping(dict(assignment), edge_map, colored=colored)


def find_colored_shadow_isomorphism(
    s1: ShadowedGraph, s2: ShadowedGraph
) -> Optional[GraphMapping]:
    return find_shadow_isomorphism(s1, s2, colored=True)


def verify_mapping(
    m: GraphMapping, s1: ShadowedGraph, s2: ShadowedGraph
) -> bool:
    """Edge-by-edge incidence (and color, when claimed) check."""
    if sorted(m.vertex_map.keys()) != sorted(s1.vertices):
        return False
    if sorted(m.vertex_map.values()) != sorted(s2.vertices):
        return False
    for ref in s1.edge_refs():
        image = m.map_ref(ref)
        if m.vertex_map[s1.source(ref)] != s2.source(image):
            return False
        if m.vertex_map[s1.target(ref)] != s2.target(image):
            return False
        if m.colored and ref.forward != image.forward:
            return False
    return True
