"""Command-line front end.

Subcommands: info, enumerate, measure, integrate, compare, fingerprint.
Output is a plain table by default or a stable JSON document with --json.
Exit codes: 0 success, 1 parse/validation error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .diagrams import DiagramPolicy, EDGE_INJECTIVE
from .equivalence import check_measure_equivalence, measure_fingerprint
from .graphs import (
    DirectedGraph,
    GraphError,
    ShadowedGraph,
    find_colored_shadow_isomorphism,
    parse_graph,
    shadow,
)
from .integrals import (
    SimpleFunction,
    indicator,
    integrate,
    monomial_integral,
    polynomial_integral,
    simple_function,
    trig_polynomial_integral,
)
from .measures import (
    MeasureDomainError,
    MeasureSpace,
    SpaceKind,
    UnboundedUniverseError,
    measure,
    total_reduced_measure,
    word_measure,
)
from .words import Word, WordError, parse_word


class CliError(Exception):
    """Validation failure surfaced with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


# ---------------------------------------------------------------------------
# literals


def parse_word_set(context: ShadowedGraph, text: str) -> frozenset[Word]:
    """Set literal: `{e1, e2^-1.e1, v1}`."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise WordError(f"set literal must be brace-delimited: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(parse_word(context, tok) for tok in body.split(","))


def parse_simple_function(
    space: MeasureSpace, text: str
) -> SimpleFunction:
    """Function literal: terms `coef*{...}` joined by `+`; a bare set
    literal is an indicator.  Coefficients are rationals like `3` or
    `-2/5`."""
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if "*" in chunk:
            coef_text, set_text = chunk.split("*", 1)
            try:
                coef = Fraction(coef_text.strip())
            except (ValueError, ZeroDivisionError):
                raise WordError(f"bad coefficient {coef_text.strip()!r}")
        else:
            coef, set_text = Fraction(1), chunk
        terms.append((coef, parse_word_set(space.graph, set_text)))
    return simple_function(space, terms)


def _fraction_text(value) -> str:
    if isinstance(value, tuple):
        return f"{value[0]} + {value[1]}i"
    return str(value)


def _fraction_json(value):
    if isinstance(value, tuple):
        return {"real": str(value[0]), "imag": str(value[1])}
    return str(value)


# ---------------------------------------------------------------------------
# worked-example errata annotations

_TREE_TEXT = """
vertex v1
vertex v2
vertex v3
edge e1 v1 v2
edge e2 v1 v3
"""


def _is_plain_tree_case(graph: DirectedGraph, space: MeasureSpace) -> bool:
    if space.kind is not SpaceKind.REDUCED_DIAGRAM:
        return False
    if space.policy is not EDGE_INJECTIVE:
        return False
    if graph.edge_weights or graph.vertex_weights:
        return False
    reference = shadow(parse_graph(_TREE_TEXT))
    return find_colored_shadow_isomorphism(shadow(graph), reference) is not None


def _errata_notes(graph, space, args, computed) -> list[str]:
    """Annotate results whose published worked-example totals disagree with
    the value the formal definitions produce."""
    if not _is_plain_tree_case(graph, space):
        return []
    notes = []
    if args.monomial is not None:
        published = 16 if abs(args.monomial) == 1 else 8
        if computed != published:
            notes.append(
                f"paper_errata: published worked example reports {published} "
                f"for the degree-{args.monomial} monomial on this graph; "
                f"the formal definition yields {computed}"
            )
    elif args.poly is not None:
        coeffs = _parse_poly(args.poly)
        degree = len(coeffs) - 1
        if degree >= 2 and all(c == 1 for c in coeffs):
            published = 8 * degree + 17
            if computed != published:
                notes.append(
                    f"paper_errata: published worked example reports "
                    f"{published} for the all-ones degree-{degree} polynomial "
                    f"on this graph; the formal definition yields {computed}"
                )
    elif args.trig is not None:
        coeffs = _parse_trig(args.trig)
        lo, hi = min(coeffs), max(coeffs)
        if lo <= -2 and hi >= 2 and all(c == 1 for c in coeffs.values()):
            published = 8 * (hi + (-lo)) + 33
            if computed != published:
                notes.append(
                    f"paper_errata: published worked example reports "
                    f"{published} for the all-ones trigonometric polynomial "
                    f"of degrees {lo}..{hi} on this graph; the formal "
                    f"definition yields {computed}"
                )
    return notes


# ---------------------------------------------------------------------------
# argument plumbing


def _parse_poly(text: str) -> list[Fraction]:
    try:
        return [Fraction(tok.strip()) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad polynomial coefficients {text!r}: {exc}")


def _parse_trig(text: str) -> dict[int, Fraction]:
    """`lowest:a,a,...` — coefficients for consecutive exponents starting
    at `lowest` (exponent 0 is the constant term)."""
    if ":" not in text:
        raise CliError("trig literal is lowest_exponent:a,a,...")
    head, body = text.split(":", 1)
    try:
        lo = int(head)
        coeffs = [Fraction(tok.strip()) for tok in body.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad trig coefficients {text!r}: {exc}")
    return {lo + i: c for i, c in enumerate(coeffs)}


def _load_graph(path: str) -> DirectedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")


def _space_for(args, graph: DirectedGraph) -> MeasureSpace:
    kind = SpaceKind(args.space)
    policy = DiagramPolicy(args.policy)
    return MeasureSpace(shadow(graph), kind, policy, args.max_len)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--space",
        choices=[k.value for k in SpaceKind],
        default=SpaceKind.REDUCED_DIAGRAM.value,
    )
    p.add_argument(
        "--policy",
        choices=[pol.value for pol in DiagramPolicy],
        default=DiagramPolicy.EDGE_INJECTIVE.value,
    )
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphmeasure")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="summary of a graph and its spaces")
    p_info.add_argument("graph")
    _add_common(p_info)

    p_enum = sub.add_parser("enumerate", help="list a universe with measures")
    p_enum.add_argument("graph")
    _add_common(p_enum)

    p_measure = sub.add_parser("measure", help="measure of an explicit set")
    p_measure.add_argument("graph")
    p_measure.add_argument("--set", required=True, dest="word_set")
    _add_common(p_measure)

    p_int = sub.add_parser("integrate", help="integrate a simple function")
    p_int.add_argument("graph")
    group = p_int.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", dest="word_set")
    group.add_argument("--monomial", type=int)
    group.add_argument("--poly")
    group.add_argument("--trig")
    _add_common(p_int)

    p_cmp = sub.add_parser("compare", help="decide measure equivalence")
    p_cmp.add_argument("graph1")
    p_cmp.add_argument("graph2")
    _add_common(p_cmp)

    p_fp = sub.add_parser("fingerprint", help="relabel-invariant summary")
    p_fp.add_argument("graph")
    _add_common(p_fp)

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies


def _emit(args, payload: dict, table_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in table_lines:
            print(line)
        for note in payload.get("annotations", []):
            print(note)


def _cmd_info(args) -> int:
    graph = _load_graph(args.graph)
    space = _space_for(args, graph)
    ctx = space.graph
    payload = {
        "command": "info",
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "shadow_edge_count": len(ctx.edge_refs()),
        "space": space.kind.value,
        "policy": space.policy.value,
        "max_len": space.effective_max_len,
        "universe_size": len(space.universe()),
        "bounded": space.is_bounded,
        "annotations": [],
    }
    if space.is_bounded:
        payload["total_measure"] = str(total_reduced_measure(space))
    lines = [
        f"vertices: {len(graph.vertices)} ({', '.join(graph.vertices)})",
        f"edges: {len(graph.edges)}",
        f"shadow edges: {payload['shadow_edge_count']}",
        f"space: {space.kind.value} (policy {space.policy.value}, "
        f"max_len {space.effective_max_len})",
        f"universe size: {payload['universe_size']}",
        f"bounded: {space.is_bounded}",
    ]
    if space.is_bounded:
        lines.append(f"total measure: {payload['total_measure']}")
    _emit(args, payload, lines)
    return 0


def _cmd_enumerate(args) -> int:
    graph = _load_graph(args.graph)
    space = _space_for(args, graph)
    rows = [(str(w), word_measure(space, w)) for w in space.universe()]
    payload = {
        "command": "enumerate",
        "space": space.kind.value,
        "policy": space.policy.value,
        "max_len": space.effective_max_len,
        "elements": [{"word": w, "measure": str(m)} for w, m in rows],
        "annotations": [],
    }
    lines = [f"{w}\t{m}" for w, m in rows]
    _emit(args, payload, lines)
    return 0


def _cmd_measure(args) -> int:
    graph = _load_graph(args.graph)
    space = _space_for(args, graph)
    words = parse_word_set(space.graph, args.word_set)
    value = measure(space, words)
    payload = {
        "command": "measure",
        "space": space.kind.value,
        "set_size": len(words),
        "measure": str(value),
        "annotations": [],
    }
    _emit(args, payload, [str(value)])
    return 0


def _cmd_integrate(args) -> int:
    graph = _load_graph(args.graph)
    space = _space_for(args, graph)
    if args.word_set is not None:
        f = indicator(space, parse_word_set(space.graph, args.word_set))
        value = integrate(f)
        what = "indicator"
    elif args.monomial is not None:
        value = monomial_integral(space, args.monomial)
        what = f"monomial {args.monomial}"
    elif args.poly is not None:
        value = polynomial_integral(space, _parse_poly(args.poly))
        what = "polynomial"
    else:
        value = trig_polynomial_integral(space, _parse_trig(args.trig))
        what = "trigonometric polynomial"
    notes = _errata_notes(graph, space, args, value)
    payload = {
        "command": "integrate",
        "space": space.kind.value,
        "function": what,
        "integral": _fraction_json(value),
        "annotations": notes,
    }
    _emit(args, payload, [_fraction_text(value)])
    return 0


def _cmd_compare(args) -> int:
    g1 = _load_graph(args.graph1)
    g2 = _load_graph(args.graph2)
    verdict = check_measure_equivalence(
        g1, g2, max_len=args.max_len, seed=args.seed
    )
    payload = {"command": "compare", "annotations": [], **verdict}
    lines = [f"verdict: {verdict['verdict']}"]
    if "distinguisher" in verdict:
        lines.append(f"distinguisher: {verdict['distinguisher']}")
    if "witness" in verdict:
        vm = verdict["witness"]["vertex_map"]
        lines.append(
            "witness vertex map: "
            + ", ".join(f"{a}->{b}" for a, b in sorted(vm.items()))
        )
    lines.append(f"checked sets: {verdict['checked_sets']}")
    _emit(args, payload, lines)
    return 0


def _cmd_fingerprint(args) -> int:
    graph = _load_graph(args.graph)
    fp = measure_fingerprint(graph)
    payload = {
        "command": "fingerprint",
        "vertex_count": fp.vertex_count,
        "edge_count": fp.edge_count,
        "total_reduced_measure": str(fp.total_reduced_measure),
        "length_histogram": [list(p) for p in fp.length_histogram],
        "element_integrals": [str(v) for v in fp.element_integrals],
        "degree_pairs": [list(p) for p in fp.degree_pairs],
        "annotations": [],
    }
    lines = [
        f"vertices: {fp.vertex_count}",
        f"edges: {fp.edge_count}",
        f"total reduced measure: {fp.total_reduced_measure}",
        "length histogram: "
        + ", ".join(f"{ln}x{ct}" for ln, ct in fp.length_histogram),
        "element integrals: "
        + ", ".join(str(v) for v in fp.element_integrals),
        "degree pairs: "
        + ", ".join(f"({o},{i})" for o, i in fp.degree_pairs),
    ]
    _emit(args, payload, lines)
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "enumerate": _cmd_enumerate,
    "measure": _cmd_measure,
    "integrate": _cmd_integrate,
    "compare": _cmd_compare,
    "fingerprint": _cmd_fingerprint,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MeasureDomainError, UnboundedUniverseError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
