"""Command-line interface.

Every library capability is exposed as a subcommand working on ideal or
graph files (``-`` reads stdin).  Output is deterministic plain text, or a
machine-readable mirror with stable key order under ``--json``.

Exit codes: 0 success, 1 failed check or internal consistency violation,
2 parse/validation error, 3 refused resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomposition import (
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
)
from .errors import (
    ConsistencyError,
    DimensionMismatch,
    DomainError,
    FormatError,
    ResourceLimitExceeded,
)
from .fixtures import ALL_FIXTURES, fixture, fixture_checks
from .graphs import (
    DEFAULT_COVER_VERTEX_LIMIT,
    alexander_dual,
    classify,
    cover_ideal,
    cover_partition,
    edge_ideal,
    format_graph,
    parse_graph,
    strong_covers,
)
from .ideals import format_ideal, format_monomial, parse_ideal
from .polyhedra import (
    DEFAULT_CONSTRAINT_LIMIT,
    DEFAULT_DIMENSION_LIMIT,
    covering_polyhedron,
    emit_constraint_block,
    enumerate_vertices,
    format_fraction_vector,
    integral_closure_power,
    newton_hrep,
    newton_vertices,
    parse_constraint_block,
    polyhedral_conditions_check,
)
from .symbolic import compare_powers, is_ntf_up_to, symbolic_power_ass, symbolic_power_min


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_ideal(args):
    return parse_ideal(_read(args.path), num_vars=args.vars)


def _load_graph(args):
    return parse_graph(_read(args.path))


def _flag(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _prime_text(prime) -> str:
    return str(prime)


def _set_text(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


# ------------------------------------------------------------ subcommands


def _cmd_decompose(args):
    dec = irreducible_decomposition(_load_ideal(args))
    payload = {
        "num_vars": dec.num_vars,
        "components": [
            {"alpha": list(c.alpha), "text": str(c)} for c in dec.components
        ],
    }
    return payload, [str(c) for c in dec.components], 0


def _cmd_ass(args):
    ideal = _load_ideal(args)
    ass = associated_primes(ideal)
    minimal = minimal_primes(ideal)
    ordered = sorted(ass, key=lambda p: p.sort_key())
    payload = {
        "primes": [
            {
                "support": sorted(p.support),
                "kind": "minimal" if p in minimal else "embedded",
                "text": _prime_text(p),
            }
            for p in ordered
        ]
    }
    lines = [
        f"{'minimal' if p in minimal else 'embedded'} {_prime_text(p)}"
        for p in ordered
    ]
    return payload, lines, 0


def _cmd_symbolic(args):
    ideal = _load_ideal(args)
    power = (symbolic_power_ass if args.ass else symbolic_power_min)(ideal, args.n)
    payload = {
        "n": args.n,
        "kind": "ass" if args.ass else "min",
        "gens": [list(g) for g in power.gens],
        "text": format_ideal(power),
    }
    return payload, [format_ideal(power)], 0


def _cmd_compare(args):
    report = compare_powers(_load_ideal(args), args.n)
    payload = {
        "n": report.n,
        "ordinary": [list(g) for g in report.ordinary.gens],
        "symbolic_ass": [list(g) for g in report.symbolic_ass.gens],
        "symbolic_min": [list(g) for g in report.symbolic_min.gens],
        "equal_min": report.equal_min,
        "equal_ass": report.equal_ass,
        "witnesses": [list(w) for w in report.witnesses],
    }
    lines = [
        f"n: {report.n}",
        f"I^n: {format_ideal(report.ordinary)}",
        f"I<n>: {format_ideal(report.symbolic_ass)}",
        f"I^(n): {format_ideal(report.symbolic_min)}",
        f"equal_min: {_flag(report.equal_min)}",
        f"equal_ass: {_flag(report.equal_ass)}",
    ]
    if report.witnesses:
        lines.append("witnesses:")
        lines.extend(f"  {format_monomial(w)}" for w in report.witnesses)
    else:
        lines.append("witnesses: none")
    return payload, lines, 0


def _cmd_ntf(args):
    report = is_ntf_up_to(_load_ideal(args), args.max_n)
    base = report.ass_by_power[0][1]
    ordered_base = sorted(base, key=lambda p: p.sort_key())
    lines = ["ass: " + "; ".join(_prime_text(p) for p in ordered_base)]
    per_n = []
    for n, ass_n in report.ass_by_power:
        gained = sorted(ass_n - base, key=lambda p: p.sort_key())
        lost = sorted(base - ass_n, key=lambda p: p.sort_key())
        per_n.append(
            {
                "n": n,
                "stable": not gained and not lost,
                "gained": [sorted(p.support) for p in gained],
                "lost": [sorted(p.support) for p in lost],
            }
        )
        if not gained and not lost:
            lines.append(f"n={n}: stable")
        else:
            parts = []
            if gained:
                parts.append("gained " + "; ".join(_prime_text(p) for p in gained))
            if lost:
                parts.append("lost " + "; ".join(_prime_text(p) for p in lost))
            lines.append(f"n={n}: " + ", ".join(parts))
    lines.append(f"holds: {_flag(report.holds)}")
    payload = {
        "bound": report.bound,
        "holds": report.holds,
        "ass": [sorted(p.support) for p in ordered_base],
        "per_n": per_n,
    }
    return payload, lines, 0


def _cmd_wog_classify(args):
    report = classify(_load_graph(args))
    fields = [
        ("square", report.square),
        ("all_powers", report.all_powers),
        ("ntf", report.ntf),
        ("all_heavy_are_sinks", report.all_heavy_are_sinks),
        (
            "heavy_non_sinks",
            ",".join(str(v) for v in report.heavy_non_sinks) or None,
        ),
        ("has_triangle", report.has_triangle),
        ("is_bipartite", report.is_bipartite),
        ("odd_girth", report.odd_girth),
        ("has_embedded_primes", report.has_embedded_primes),
    ]
    payload = {
        "square": report.square,
        "all_powers": report.all_powers,
        "ntf": report.ntf,
        "all_heavy_are_sinks": report.all_heavy_are_sinks,
        "heavy_non_sinks": list(report.heavy_non_sinks),
        "has_triangle": report.has_triangle,
        "is_bipartite": report.is_bipartite,
        "odd_girth": report.odd_girth,
        "has_embedded_primes": report.has_embedded_primes,
    }
    return payload, [f"{k}: {_flag(v)}" for k, v in fields], 0


def _cmd_wog_covers(args):
    graph = _load_graph(args)
    covers = strong_covers(graph, max_vertices=args.max_covers)
    entries = []
    lines = []
    for cover in covers:
        part = cover_partition(graph, cover)
        ideal = cover_ideal(graph, cover)
        entries.append(
            {
                "cover": sorted(cover),
                "l1": sorted(part.l1),
                "l2": sorted(part.l2),
                "l3": sorted(part.l3),
                "ideal": str(ideal),
                "alpha": list(ideal.alpha),
            }
        )
        lines.append(
            f"{_set_text(cover)} L1={_set_text(part.l1)} L2={_set_text(part.l2)} "
            f"L3={_set_text(part.l3)} ideal={ideal}"
        )
    if not lines:
        lines = ["no strong covers"]
    return {"covers": entries}, lines, 0


def _cmd_wog_ideal(args):
    ideal = edge_ideal(_load_graph(args))
    payload = {
        "num_vars": ideal.num_vars,
        "gens": [list(g) for g in ideal.gens],
        "text": format_ideal(ideal),
    }
    return payload, [format_ideal(ideal)], 0


def _cmd_wog_dual(args):
    dual = alexander_dual(_load_graph(args))
    payload = {
        "ideal": format_ideal(dual.ideal),
        "gens": [list(g) for g in dual.ideal.gens],
        "components": [
            {"alpha": list(c.alpha), "text": str(c)}
            for c in dual.decomposition.components
        ],
    }
    lines = [f"J: {format_ideal(dual.ideal)}", "components:"]
    lines.extend(f"  {c}" for c in dual.decomposition.components)
    return payload, lines, 0


def _looks_like_constraints(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0] == "amb_space"
    return False


def _cmd_poly_vertices(args):
    text = _read(args.path)
    if _looks_like_constraints(text):
        poly = parse_constraint_block(text)
    else:
        poly = covering_polyhedron(parse_ideal(text, num_vars=args.vars))
    vertices = enumerate_vertices(
        poly, max_dim=args.max_vars, max_constraints=args.max_constraints
    )
    payload = {
        "num_vars": poly.num_vars,
        "columns": [[str(x) for x in c] for c in poly.columns],
        "vertices": [[str(x) for x in v] for v in vertices],
    }
    if args.normaliz_format:
        block = emit_constraint_block(poly, vertices)
        return payload, block.rstrip("\n").split("\n"), 0
    return payload, [format_fraction_vector(v) for v in vertices], 0


def _cmd_newton(args):
    ideal = _load_ideal(args)
    verts = newton_vertices(
        ideal, max_dim=args.max_vars, max_constraints=args.max_constraints
    )
    hrep = newton_hrep(
        ideal, max_dim=args.max_vars, max_constraints=args.max_constraints
    )
    payload = {
        "vertices": [list(v) for v in verts],
        "hrep_columns": [[str(x) for x in c] for c in hrep.columns],
    }
    return payload, [format_monomial(v) for v in verts], 0


def _cmd_closure(args):
    closure = integral_closure_power(_load_ideal(args), args.n)
    payload = {
        "n": args.n,
        "gens": [list(g) for g in closure.gens],
        "text": format_ideal(closure),
    }
    return payload, [format_ideal(closure)], 0


def _cmd_normal(args):
    ideal = _load_ideal(args)
    lines = []
    per_n = []
    normal = True
    for n in range(1, args.max_n + 1):
        closure = integral_closure_power(ideal, n)
        power = ideal ** n
        closed = closure == power
        normal = normal and closed
        joins = [g for g in closure.gens if not power.contains(g)]
        per_n.append(
            {"n": n, "closed": closed, "joins": [list(g) for g in joins]}
        )
        if closed:
            lines.append(f"n={n}: closed")
        else:
            lines.append(
                f"n={n}: not closed ({format_monomial(joins[0])} joins)"
            )
    lines.append(f"normal: {_flag(normal)}")
    payload = {"bound": args.max_n, "normal": normal, "per_n": per_n}
    return payload, lines, 0


def _cmd_thm41(args):
    ideal = _load_ideal(args)
    powers_equal = all(
        compare_powers(ideal, n).equal_min for n in range(1, args.max_n + 1)
    )
    report = polyhedral_conditions_check(
        ideal,
        args.max_n,
        powers_equal=powers_equal,
        max_dim=args.max_vars,
        max_constraints=args.max_constraints,
    )
    per_power = (
        ", ".join(f"n={n} {_flag(ok)}" for n, ok in report.closure_per_power)
        if report.closure_per_power
        else "skipped"
    )
    lines = [
        f"bound: {report.bound}",
        f"powers_equal: {_flag(report.powers_equal)}",
        f"minimal_decomposition: {_flag(report.minimal)}",
        f"closure_intersections: {_flag(report.closure_intersections)} ({per_power})",
        f"newton_equals_irreducible: {_flag(report.newton_equals_irreducible)}",
        f"vertices_are_component_inverses: {_flag(report.vertices_are_component_inverses)}",
        f"consistent: {_flag(report.consistent)}",
    ]
    payload = {
        "bound": report.bound,
        "powers_equal": report.powers_equal,
        "minimal_decomposition": report.minimal,
        "closure_intersections": report.closure_intersections,
        "closure_per_power": [
            {"n": n, "holds": ok} for n, ok in (report.closure_per_power or ())
        ],
        "newton_equals_irreducible": report.newton_equals_irreducible,
        "vertices_are_component_inverses": report.vertices_are_component_inverses,
        "consistent": report.consistent,
    }
    return payload, lines, 1 if report.consistent is False else 0


def _cmd_examples(args):
    if args.list:
        payload = {
            "fixtures": [
                {"name": f.name, "summary": f.summary} for f in ALL_FIXTURES
            ]
        }
        return payload, [f"{f.name}: {f.summary}" for f in ALL_FIXTURES], 0
    if args.name is not None and args.show:
        named = fixture(args.name)
        text = format_graph(named.graph)
        return (
            {"name": named.name, "graph": text},
            text.rstrip("\n").split("\n"),
            0,
        )
    names = [args.name] if args.name else [f.name for f in ALL_FIXTURES]
    lines = []
    results = []
    passed = failed = 0
    for name in names:
        for label, ok in fixture_checks(name):
            results.append({"fixture": name, "check": label, "ok": ok})
            lines.append(f"[{name}] {label}: {'PASS' if ok else 'FAIL'}")
            if ok:
                passed += 1
            else:
                failed += 1
    lines.append(f"{passed} passed, {failed} failed")
    payload = {"checks": results, "passed": passed, "failed": failed}
    return payload, lines, 1 if failed else 0


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monideal",
        description=(
            "exact computations with monomial ideals, edge ideals of weighted "
            "oriented graphs, and their polyhedra"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a JSON mirror of the report"
    )

    ideal_arg = argparse.ArgumentParser(add_help=False)
    ideal_arg.add_argument("path", help="ideal file, or - for stdin")
    ideal_arg.add_argument(
        "--vars",
        type=_positive,
        default=None,
        help="number of variables (default: inferred)",
    )

    graph_arg = argparse.ArgumentParser(add_help=False)
    graph_arg.add_argument("path", help="graph file, or - for stdin")

    n_arg = argparse.ArgumentParser(add_help=False)
    n_arg.add_argument("--n", type=_positive, default=1, help="power (default 1)")

    bound_arg = argparse.ArgumentParser(add_help=False)
    bound_arg.add_argument(
        "--max-n",
        "--power-bound",
        dest="max_n",
        type=_positive,
        default=4,
        help="largest power checked (default 4)",
    )

    poly_limits = argparse.ArgumentParser(add_help=False)
    poly_limits.add_argument(
        "--max-vars",
        type=_positive,
        default=DEFAULT_DIMENSION_LIMIT,
        help=f"dimension limit for vertex enumeration (default {DEFAULT_DIMENSION_LIMIT})",
    )
    poly_limits.add_argument(
        "--max-constraints",
        type=_positive,
        default=DEFAULT_CONSTRAINT_LIMIT,
        help=f"constraint limit for vertex enumeration (default {DEFAULT_CONSTRAINT_LIMIT})",
    )

    def register(name, handler, parents, help_text):
        p = sub.add_parser(name, parents=[common] + parents, help=help_text)
        p.set_defaults(handler=handler)
        return p

    register(
        "decompose", _cmd_decompose, [ideal_arg], "irreducible decomposition"
    )
    register("ass", _cmd_ass, [ideal_arg], "associated primes, minimal/embedded")
    symbolic = register(
        "symbolic", _cmd_symbolic, [ideal_arg, n_arg], "symbolic power I^(n) or I<n>"
    )
    mode = symbolic.add_mutually_exclusive_group()
    mode.add_argument(
        "--min",
        action="store_true",
        help="intersect over minimal primes (default)",
    )
    mode.add_argument(
        "--ass",
        action="store_true",
        help="intersect over maximal associated primes",
    )
    register(
        "compare",
        _cmd_compare,
        [ideal_arg, n_arg],
        "ordinary vs symbolic powers with witnesses",
    )
    register(
        "ntf",
        _cmd_ntf,
        [ideal_arg, bound_arg],
        "stability of Ass(I^n) up to a bound",
    )
    register("wog-classify", _cmd_wog_classify, [graph_arg], "power-equality classification")
    covers = register(
        "wog-covers", _cmd_wog_covers, [graph_arg], "strong vertex covers with partitions"
    )
    covers.add_argument(
        "--max-covers",
        type=_positive,
        default=DEFAULT_COVER_VERTEX_LIMIT,
        help=f"vertex limit for cover enumeration (default {DEFAULT_COVER_VERTEX_LIMIT})",
    )
    register("wog-ideal", _cmd_wog_ideal, [graph_arg], "edge ideal of a graph")
    register("wog-dual", _cmd_wog_dual, [graph_arg], "dual edge ideal and its components")
    poly = register(
        "poly-vertices",
        _cmd_poly_vertices,
        [ideal_arg, poly_limits],
        "vertices of a covering-form polyhedron (ideal file or constraint block)",
    )
    poly.add_argument(
        "--normaliz-format",
        action="store_true",
        help="emit the solver exchange block instead of bare vertices",
    )
    register(
        "newton",
        _cmd_newton,
        [ideal_arg, poly_limits],
        "generators lying on vertices of the Newton polyhedron",
    )
    register(
        "closure", _cmd_closure, [ideal_arg, n_arg], "integral closure of I^n"
    )
    register(
        "normal",
        _cmd_normal,
        [ideal_arg, bound_arg],
        "compare each I^n with its integral closure",
    )
    register(
        "thm41",
        _cmd_thm41,
        [ideal_arg, bound_arg, poly_limits],
        "polyhedral conditions accompanying power equality",
    )
    examples = register("examples", _cmd_examples, [], "run the built-in fixtures")
    examples.add_argument("name", nargs="?", help="run a single fixture")
    examples.add_argument(
        "--list", action="store_true", help="list fixture names and summaries"
    )
    examples.add_argument(
        "--show", action="store_true", help="print the named fixture's graph file"
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, lines, code = args.handler(args)
    except (FormatError, DomainError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
