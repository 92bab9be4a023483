"""Simple functions and the graph integral.

A simple function is a finite linear combination of set indicators over one
measure space.  Coefficients are exact rationals; complex coefficients are
accepted as (real, imaginary) pairs of rationals and results stay exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .diagrams import reduced_diagram
from .measures import MeasureSpace, MeasureDomainError, measure, total_reduced_measure
from .words import Word, WordError, inverse, power

Scalar = Union[int, Fraction, tuple]


def _pair(c: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(c, tuple):
        re, im = c
        return (Fraction(re), Fraction(im))
    return (Fraction(c), Fraction(0))


def _unpair(p: tuple[Fraction, Fraction]) -> Scalar:
    return p[0] if p[1] == 0 else p


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


@dataclass(frozen=True)
class SimpleFunction:
    """sum of coefficient * indicator(set) over a fixed measure space."""

    space: MeasureSpace
    terms: tuple[tuple[tuple[Fraction, Fraction], frozenset[Word]], ...]

    def value_map(self) -> dict[Word, tuple[Fraction, Fraction]]:
        """Pointwise values: the canonical disjoint-set form."""
        values: dict[Word, tuple[Fraction, Fraction]] = {}
        for coef, words in self.terms:
            for w in words:
                values[w] = _add(values.get(w, (Fraction(0), Fraction(0))), coef)
        return values


def simple_function(
    space: MeasureSpace, terms: Iterable[tuple[Scalar, Iterable[Word]]]
) -> SimpleFunction:
    normalized = []
    for coef, words in terms:
        wordset = frozenset(w for w in words if not w.is_empty)
        for w in wordset:
            if not space.contains(w):
                raise MeasureDomainError(
                    f"word {w} is not in the {space.kind.value} universe"
                )
        normalized.append((_pair(coef), wordset))
    return SimpleFunction(space, tuple(normalized))


def indicator(space: MeasureSpace, words: Iterable[Word]) -> SimpleFunction:
    return simple_function(space, [(1, words)])


def integrate(f: SimpleFunction, space: MeasureSpace | None = None) -> Scalar:
    """sum of coefficient * measure(set); linear and independent of the
    set-refinement representation."""
    if space is not None and space != f.space:
        raise MeasureDomainError("function belongs to a different space")
    total = (Fraction(0), Fraction(0))
    for coef, words in f.terms:
        m = measure(f.space, words)
        total = _add(total, _mul(coef, (m, Fraction(0))))
    return _unpair(total)


def multiply(f: SimpleFunction, g: SimpleFunction) -> SimpleFunction:
    """Pointwise product: indicators multiply by set intersection."""
    if f.space != g.space:
        raise MeasureDomainError("cannot multiply functions over different spaces")
    terms = []
    for cf, sf in f.terms:
        for cg, sg in g.terms:
            inter = sf & sg
            if inter:
                terms.append((_mul(cf, cg), inter))
    return SimpleFunction(f.space, tuple(terms))


def add(f: SimpleFunction, g: SimpleFunction) -> SimpleFunction:
    if f.space != g.space:
        raise MeasureDomainError("cannot add functions over different spaces")
    return SimpleFunction(f.space, f.terms + g.terms)


def scale(c: Scalar, f: SimpleFunction) -> SimpleFunction:
    cp = _pair(c)
    return SimpleFunction(f.space, tuple((_mul(cp, coef), s) for coef, s in f.terms))


def support_of(f: SimpleFunction) -> frozenset[Word]:
    """Universe elements where the canonical-form value is nonzero."""
    return frozenset(
        w for w, v in f.value_map().items() if v != (Fraction(0), Fraction(0))
    )


# ---------------------------------------------------------------------------
# element functions and the named integral families


def element_function(w: Word, space: MeasureSpace) -> SimpleFunction:
    """Indicator of the elements reachable before or after w: those whose
    source is w's target, united with those whose target is w's source.

    Reduction preserves endpoints, so this endpoint filter equals the
    reduced-diagram image of the (infinite) left/right admissibility sets;
    the brute-force oracle validates the identification at bounded length.
    """
    if not space.contains(w):
        raise MeasureDomainError(
            f"word {w} is not in the {space.kind.value} universe"
        )
    support = [
        u
        for u in space.universe()
        if u.source == w.target or u.target == w.source
    ]
    return indicator(space, support)


@functools.lru_cache(maxsize=None)
def _endpoint_mass(space: MeasureSpace, tgt: str, src: str) -> Fraction:
    # The integral of an element function depends only on the word's
    # endpoints, so it is cached per (space, target, source) pair.  The
    # support is drawn from the universe, so no membership check is needed.
    from .measures import word_measure

    total = Fraction(0)
    for u in space.universe():
        if u.source == tgt or u.target == src:
            total += word_measure(space, u)
    return total


def monomial_integral(space: MeasureSpace, n: int) -> Scalar:
    """Integral of x -> element_function(collapse(x^n)): the sum over the
    universe of the element-function integrals of the collapsed powers.
    Non-loop paths contribute nothing for |n| >= 2."""
    if n == 0:
        raise WordError("exponent 0 is the constant function, not a power")
    total = Fraction(0)
    for w in space.universe():
        x = power(w, n)
        if x.is_empty:
            continue
        u = reduced_diagram(x, space.policy)
        total += _endpoint_mass(space, u.target, u.source)
    return total


def _closed_and_direct_check(closed, direct):
    if _pair(closed) != _pair(direct):
        raise AssertionError(
            f"closed form {closed} disagrees with direct sum {direct}"
        )
    return _unpair(_pair(closed))


def polynomial_integral(space: MeasureSpace, coefficients: Sequence[Scalar]) -> Scalar:
    """Integral of a polynomial sum a_n * g_n with g_0 the constant 1.

    Closed form: a_0 * total + a_1 * I(g_1) + (sum_{k>=2} a_k) * I(g_2);
    cross-checked against the direct termwise sum."""
    coeffs = [_pair(c) for c in coefficients]
    total_mass = total_reduced_measure(space) if space.is_bounded else measure(
        space, space.universe()
    )
    closed = _mul(coeffs[0], _pair(total_mass)) if coeffs else (Fraction(0), Fraction(0))
    if len(coeffs) > 1:
        closed = _add(closed, _mul(coeffs[1], _pair(monomial_integral(space, 1))))
    if len(coeffs) > 2:
        tail = (Fraction(0), Fraction(0))
        for c in coeffs[2:]:
            tail = _add(tail, c)
        closed = _add(closed, _mul(tail, _pair(monomial_integral(space, 2))))

    direct = _mul(coeffs[0], _pair(total_mass)) if coeffs else (Fraction(0), Fraction(0))
    for idx, c in enumerate(coeffs[1:], start=1):
        direct = _add(direct, _mul(c, _pair(monomial_integral(space, idx))))
    return _closed_and_direct_check(_unpair(closed), _unpair(direct))


def trig_polynomial_integral(
    space: MeasureSpace, coefficients: Mapping[int, Scalar]
) -> Scalar:
    """Integral of a two-sided sum a_n * g_n, n from -M to N, g_0 = 1.

    Closed form: a_0 * total + (a_1 + a_{-1}) * I(g_1)
    + (sum of all |n| >= 2 coefficients) * I(g_2)."""
    coeffs = {n: _pair(c) for n, c in coefficients.items()}
    total_mass = total_reduced_measure(space) if space.is_bounded else measure(
        space, space.universe()
    )
    zero = (Fraction(0), Fraction(0))
    closed = _mul(coeffs.get(0, zero), _pair(total_mass))
    first = _add(coeffs.get(1, zero), coeffs.get(-1, zero))
    closed = _add(closed, _mul(first, _pair(monomial_integral(space, 1))))
    tail = zero
    for n, c in coeffs.items():
        if abs(n) >= 2:
            tail = _add(tail, c)
    if tail != zero:
        closed = _add(closed, _mul(tail, _pair(monomial_integral(space, 2))))

    direct = _mul(coeffs.get(0, zero), _pair(total_mass))
    for n, c in coeffs.items():
        if n != 0:
            direct = _add(direct, _mul(c, _pair(monomial_integral(space, n))))
    return _closed_and_direct_check(_unpair(closed), _unpair(direct))
