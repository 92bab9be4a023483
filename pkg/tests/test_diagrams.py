import random

import pytest

import graphmeasure as gm
from graphmeasure.diagrams import (
    EDGE_INJECTIVE,
    RUN_COLLAPSE,
    EnumerationLimitExceeded,
    enumerate_reduced_diagram_set,
)
from graphmeasure.words import WordError
from conftest import bounded_random_graph, load_fixture, random_walk_word


def test_run_collapse_collapses_runs():
    ctx = gm.shadow(load_fixture("g2.graph"))
    w = gm.parse_word(ctx, "l1.l1.l1.l2.l2.l1")
    assert str(gm.diagram(w, RUN_COLLAPSE)) == "l1.l2.l1"
    assert str(gm.diagram(w, EDGE_INJECTIVE)) == "l1.l2"


def test_diagram_fixes_vertices_and_preserves_source():
    rng = random.Random(6)
    for _ in range(300):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        w = random_walk_word(rng, ctx, 8)
        for policy in (RUN_COLLAPSE, EDGE_INJECTIVE):
            d = gm.diagram(w, policy)
            assert gm.diagram(d, policy) == d  # idempotent
            assert d.source == w.source
            dr = gm.reduced_diagram(w, policy)
            assert gm.reduced_diagram(dr, policy) == dr


def test_reduced_diagram_commutes_past_diagram_under_run_collapse():
    rng = random.Random(7)
    for _ in range(300):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        w = random_walk_word(rng, ctx, 8)
        lhs = gm.reduced_diagram(w, RUN_COLLAPSE)
        rhs = gm.reduced_diagram(gm.diagram(w, RUN_COLLAPSE), RUN_COLLAPSE)
        assert lhs == rhs


def test_is_basic_and_empty_rejected():
    ctx = gm.shadow(load_fixture("tree.graph"))
    assert gm.is_basic(gm.parse_word(ctx, "e1"))
    assert not gm.is_basic(gm.parse_word(ctx, "e1.e1^-1"), reduced=True)
    with pytest.raises(WordError):
        gm.is_basic(gm.Word.empty(ctx))


def test_tree_reduced_diagram_set_listing():
    ctx = gm.shadow(load_fixture("tree.graph"))
    ds = gm.enumerate_reduced_diagram_set(ctx)
    assert ds.universe == "D_r"
    assert sorted(str(w) for w in ds) == sorted(
        ["v1", "v2", "v3", "e1", "e2", "e1^-1", "e2^-1", "e1^-1.e2", "e2^-1.e1"]
    )
    assert len(ds.vertex_part) == 3 and len(ds.path_part) == 6
    assert gm.loops_of(ds) == ()  # trees carry no reduced loops


def test_triangle_reduced_diagram_set_census():
    ctx = gm.shadow(load_fixture("triangle.graph"))
    ds = gm.enumerate_reduced_diagram_set(ctx)
    assert len(ds) == 21
    assert len(gm.loops_of(ds)) == 6
    by_len = {}
    for w in ds.path_part:
        by_len[w.length] = by_len.get(w.length, 0) + 1
    assert by_len == {1: 6, 2: 6, 3: 6}


def test_circulant_census_formula():
    for name, n in (("c3.graph", 3), ("c4.graph", 4)):
        ctx = gm.shadow(load_fixture(name))
        ds = gm.enumerate_reduced_diagram_set(ctx)
        assert len(ds.path_part) == 2 * n * n


def test_fixed_point_lengths_bounded_by_double_edge_count():
    rng = random.Random(8)
    for _ in range(20):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        cap = 2 * len(g.edges)
        for ds in (
            gm.enumerate_diagram_set(ctx),
            gm.enumerate_reduced_diagram_set(ctx),
        ):
            assert all(w.length <= cap for w in ds)
            # membership predicate and enumeration agree
            for w in ds:
                assert gm.is_basic(w, ds.policy, reduced=(ds.universe == "D_r"))


def test_enumeration_elements_are_exactly_the_fixed_points():
    rng = random.Random(9)
    g = bounded_random_graph(rng, max_v=3, max_e=3)
    ctx = gm.shadow(g)
    ds = set(gm.enumerate_reduced_diagram_set(ctx))
    for w in gm.enumerate_words(ctx, 2 * len(g.edges)):
        expected = gm.is_reduced(w) and gm.is_basic(w, reduced=True)
        assert (w in ds) == expected


def test_enumeration_limit():
    ctx = gm.shadow(load_fixture("g3.graph"))
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_reduced_diagram_set(ctx, limit=10)


def test_diagram_fibers_form_equivalence_classes():
    # grouping words by diagram image is a partition: reflexive, symmetric
    # and transitive by construction of the hash grouping
    ctx = gm.shadow(load_fixture("triangle.graph"))
    fibers = {}
    for w in gm.enumerate_words(ctx, 4):
        fibers.setdefault(gm.diagram(w), set()).add(w)
    seen = set()
    for image, members in fibers.items():
        assert image in members or gm.diagram(image) == image
        assert not (members & seen)
        seen |= members
