import random

import pytest

import graphmeasure as gm
from graphmeasure.oracle import oracle_reduce
from graphmeasure.words import WordError
from conftest import bounded_random_graph, load_fixture, random_walk_word


def tree_ctx():
    return gm.shadow(load_fixture("tree.graph"))


def test_word_constructors():
    ctx = tree_ctx()
    v = gm.Word.at_vertex(ctx, "v1")
    assert v.is_vertex and v.source == v.target == "v1" and v.length == 0
    p = gm.parse_word(ctx, "e1")
    assert p.is_path and p.source == "v1" and p.target == "v2" and p.length == 1
    z = gm.Word.empty(ctx)
    assert z.is_empty
    with pytest.raises(WordError):
        z.source


def test_inadmissible_path_rejected():
    ctx = tree_ctx()
    with pytest.raises(WordError):
        gm.Word.path(ctx, (gm.EdgeRef("e1"), gm.EdgeRef("e2")))


def test_concat_unit_and_absorbing_rules():
    ctx = tree_ctx()
    v1 = gm.parse_word(ctx, "v1")
    v2 = gm.parse_word(ctx, "v2")
    e1 = gm.parse_word(ctx, "e1")
    zero = gm.Word.empty(ctx)
    assert gm.concat(v1, v1) == v1
    assert gm.concat(v1, v2).is_empty
    assert gm.concat(v1, e1) == e1  # unit on the left at the source
    assert gm.concat(e1, v2) == e1  # unit on the right at the target
    assert gm.concat(e1, v1).is_empty
    assert gm.concat(zero, e1).is_empty and gm.concat(e1, zero).is_empty
    assert gm.concat(e1, e1).is_empty  # v2 != v1


def test_inverse_involutive_and_antihomomorphic():
    rng = random.Random(3)
    for _ in range(200):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        w = random_walk_word(rng, ctx, 6)
        assert gm.inverse(gm.inverse(w)) == w
        u = random_walk_word(rng, ctx, 6)
        prod = gm.concat(w, u)
        if not prod.is_empty:
            assert gm.inverse(prod) == gm.concat(gm.inverse(u), gm.inverse(w))


def test_reduce_examples():
    ctx = tree_ctx()
    w = gm.parse_word(ctx, "e1.e1^-1")
    assert gm.reduce(w) == gm.parse_word(ctx, "v1")
    w2 = gm.parse_word(ctx, "e1^-1.e1")
    assert gm.reduce(w2) == gm.parse_word(ctx, "v2")
    w3 = gm.parse_word(ctx, "e1^-1.e2")
    assert gm.reduce(w3) == w3 and gm.is_reduced(w3)


def test_reduce_idempotent_and_endpoint_preserving():
    rng = random.Random(4)
    for _ in range(300):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        w = random_walk_word(rng, ctx, 8)
        r = gm.reduce(w)
        assert gm.reduce(r) == r
        assert gm.is_reduced(r)
        assert r.source == w.source and r.target == w.target
        assert oracle_reduce(w) == r


def test_reduce_word_times_inverse_is_source_vertex():
    rng = random.Random(5)
    for _ in range(200):
        g = bounded_random_graph(rng, max_v=4, max_e=4)
        ctx = gm.shadow(g)
        w = random_walk_word(rng, ctx, 6)
        if w.is_vertex:
            continue
        prod = gm.concat(w, gm.inverse(w))
        assert gm.reduce(prod) == gm.Word.at_vertex(ctx, w.source)


def test_power():
    ctx = tree_ctx()
    e1 = gm.parse_word(ctx, "e1")
    v1 = gm.parse_word(ctx, "v1")
    assert gm.power(v1, 5) == v1
    assert gm.power(e1, 1) == e1
    assert gm.power(e1, -1) == gm.inverse(e1)
    assert gm.power(e1, 2).is_empty  # non-loop squares vanish
    with pytest.raises(WordError):
        gm.power(e1, 0)
    g2 = gm.shadow(load_fixture("g2.graph"))
    l1 = gm.parse_word(g2, "l1")
    assert gm.power(l1, 3) == gm.parse_word(g2, "l1.l1.l1")
    assert gm.power(l1, -2) == gm.parse_word(g2, "l1^-1.l1^-1")


def test_enumerate_words_deterministic_and_complete():
    ctx = tree_ctx()
    words = gm.enumerate_words(ctx, 2)
    texts = [str(w) for w in words]
    assert words == sorted(words, key=gm.Word.sort_key)
    assert "v1" in texts and "e1" in texts and "e1.e1^-1" in texts
    assert all(w.length <= 2 for w in words)
    reduced = gm.enumerate_words(ctx, 2, reduced_only=True)
    assert all(gm.is_reduced(w) for w in reduced)
    assert "e1.e1^-1" not in [str(w) for w in reduced]
    assert words == gm.enumerate_words(ctx, 2)  # stable across calls


def test_word_literals_round_trip():
    ctx = tree_ctx()
    for text in ("0", "v2", "e1", "e1^-1.e2", "e2^-1.e1"):
        assert gm.format_word(gm.parse_word(ctx, text)) == text
    with pytest.raises(WordError):
        gm.parse_word(ctx, "e9")
    with pytest.raises(WordError):
        gm.parse_word(ctx, "e1.e2")  # inadmissible
