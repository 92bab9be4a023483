"""Shared randomized-corpus helpers.  Every suite uses a fixed seed so runs
are reproducible; graphs whose reduced diagram set would explode are
rejected at generation time."""

from __future__ import annotations

import random
from fractions import Fraction

import graphmeasure as gm
from graphmeasure.diagrams import EnumerationLimitExceeded, enumerate_reduced_diagram_set

DR_LIMIT = 1200


def random_graph(rng: random.Random, max_v=5, max_e=6, weighted=False) -> gm.DirectedGraph:
    nv = rng.randint(1, max_v)
    vertices = tuple(f"v{i}" for i in range(1, nv + 1))
    ne = rng.randint(0, max_e)
    edges = tuple(
        (f"e{i}", rng.choice(vertices), rng.choice(vertices))
        for i in range(1, ne + 1)
    )
    edge_weights: dict[str, Fraction] = {}
    vertex_weights: dict[str, Fraction] = {}
    if weighted:
        for eid, _, _ in edges:
            if rng.random() < 0.5:
                edge_weights[eid] = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        for v in vertices:
            if rng.random() < 0.3:
                vertex_weights[v] = Fraction(rng.randint(0, 4))
    return gm.DirectedGraph(vertices, edges, edge_weights, vertex_weights)


def bounded_random_graph(
    rng: random.Random, max_v=5, max_e=6, weighted=False, limit=DR_LIMIT
) -> gm.DirectedGraph:
    """A random graph whose reduced diagram set stays below `limit`."""
    while True:
        g = random_graph(rng, max_v, max_e, weighted)
        try:
            enumerate_reduced_diagram_set(gm.shadow(g), limit=limit)
        except EnumerationLimitExceeded:
            continue
        return g


def random_walk_word(rng: random.Random, ctx: gm.ShadowedGraph, max_len: int) -> gm.Word:
    """A random vertex word or admissible random walk (possibly reducible)."""
    start = rng.choice(ctx.vertices)
    length = rng.randint(0, max_len)
    refs = []
    at = start
    for _ in range(length):
        options = ctx.refs_from(at)
        if not options:
            break
        ref = rng.choice(options)
        refs.append(ref)
        at = ctx.target(ref)
    if not refs:
        return gm.Word.at_vertex(ctx, start)
    return gm.Word.path(ctx, tuple(refs))


def load_fixture(name: str) -> gm.DirectedGraph:
    import pathlib

    path = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / name
    return gm.parse_graph(path.read_text())


def relabel(rng: random.Random, g: gm.DirectedGraph) -> tuple[gm.DirectedGraph, dict, dict]:
    """A vertex/edge-renamed, order-shuffled copy plus the rename maps."""
    vperm = list(g.vertices)
    rng.shuffle(vperm)
    vmap = {old: f"w{i}" for i, old in enumerate(vperm, start=1)}
    eperm = list(g.edges)
    rng.shuffle(eperm)
    emap = {eid: f"f{i}" for i, (eid, _, _) in enumerate(eperm, start=1)}
    vertices = tuple(vmap[v] for v in vperm)
    edges = tuple((emap[eid], vmap[s], vmap[t]) for eid, s, t in eperm)
    edge_weights = {emap[eid]: w for eid, w in g.edge_weights.items()}
    vertex_weights = {vmap[v]: w for v, w in g.vertex_weights.items()}
    return (
        gm.DirectedGraph(vertices, edges, edge_weights, vertex_weights),
        vmap,
        emap,
    )
