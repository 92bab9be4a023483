"""Brute-force reference implementations.  These favor obviousness over
speed and exist to cross-validate the engine modules in the test suite;
nothing here is used on the release path."""

from __future__ import annotations

from fractions import Fraction

from .diagrams import reduced_diagram
from .measures import MeasureSpace, word_measure
from .words import Word, concat, enumerate_words, inverse


def oracle_reduce(w: Word) -> Word:
    """Repeated full-scan cancellation of any one adjacent inverse pair
    until no pair remains.  No stack, no single-pass cleverness."""
    if not w.is_path:
        return w
    refs = list(w.edges)
    changed = True
    while changed:
        changed = False
        for i in range(len(refs) - 1):
            if refs[i + 1] == refs[i].flip():
                del refs[i : i + 2]
                changed = True
                break
    if not refs:
        return Word.at_vertex(w.context, w.source)
    return Word.path(w.context, tuple(refs))


def oracle_image_sets(
    w: Word, max_len: int
) -> tuple[frozenset[Word], frozenset[Word]]:
    """Collapsed images of the admissibility sets of w, by exhaustion.

    Left set: collapse of every word u with w.u nonempty; right set: the
    same for u.w, collapsed from the right (the collapse keeps the word's
    source stable, so words sharing a target are mirrored through inversion
    first).  Enumerates all words up to max_len with no pruning."""
    left: set[Word] = set()
    right: set[Word] = set()
    for u in enumerate_words(w.context, max_len):
        if not concat(w, u).is_empty:
            left.add(reduced_diagram(u))
        if not concat(u, w).is_empty:
            right.add(inverse(reduced_diagram(inverse(u))))
    return frozenset(left), frozenset(right)


def oracle_integral(space: MeasureSpace, f) -> object:
    """Termwise evaluation of a simple function's integral: for each term,
    sum the singleton measures of its distinct words, then scale."""
    total_re, total_im = Fraction(0), Fraction(0)
    for (re, im), words in f.terms:
        mass = Fraction(0)
        for u in set(words):
            if not u.is_empty:
                mass += word_measure(space, u)
        total_re += re * mass
        total_im += im * mass
    return total_re if total_im == 0 else (total_re, total_im)
