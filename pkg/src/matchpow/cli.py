"""``matchpow`` command line tool.

Every subcommand reads an ideal file (``-i FILE`` or stdin). Commands that
produce an ideal print it as an ideal file, so they can be piped::

    matchpow power --k 3 -i d3.ideal | matchpow linrel
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

import jsonschema

from .graphs import GraphWarning, WeightedOrientedGraph, edge_ideal, edge_ideal_oriented, graph_from_json
from .homology import DEFAULT_FACE_CAP, DEFAULT_LATTICE_CAP, betti_table, g_function, is_linearly_related
from .ideals import DEFAULT_MAX_GRADE_GENERATORS, ComplexityError, MonomialIdeal, matching_power, matching_product, monomial_grade, polarize_ideal
from .monomials import Monomial, parse_field
from .parser import ParseError, parse_monomial, parse_ring, read_ideal, render_ideal_file

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 1, 2

IDEAL_SCHEMA = {
    "type": "object",
    "properties": {
        "field": {"type": "string"},
        "vars": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "generators": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["field", "vars", "generators"],
    "additionalProperties": False,
}

GRADE_SCHEMA = {
    "type": "object",
    "properties": {"nu": {"type": "integer", "minimum": 1}},
    "required": ["nu"],
    "additionalProperties": False,
}

LINREL_SCHEMA = {
    "type": "object",
    "properties": {"linearly_related": {"type": "boolean"}},
    "required": ["linearly_related"],
    "additionalProperties": False,
}

BOUNDING_SCHEMA = {
    "type": "object",
    "properties": {
        "vars": {"type": "array", "items": {"type": "string"}},
        "multidegree": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "size": {"type": "integer", "minimum": 0},
    },
    "required": ["vars", "multidegree", "size"],
    "additionalProperties": False,
}

MONOMIAL_SCHEMA = {
    "type": "object",
    "properties": {
        "monomial": {"type": "string"},
        "multidegree": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": ["monomial", "multidegree"],
    "additionalProperties": False,
}


class InputError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # bad flags are input errors (exit 1); exit 2 is reserved for size caps
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"error: {message}\n")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load(args) -> MonomialIdeal:
    return read_ideal(_read_text(args.input), args.field)


def _caps(args) -> dict:
    return {"threads": args.threads, "lattice_cap": args.lattice_cap, "face_cap": args.face_cap}


def _ideal_json(I: MonomialIdeal) -> dict:
    return {
        "field": I.context.field,
        "vars": list(I.context.variables),
        "generators": [str(u) for u in I.generators],
    }


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _emit_ideal(args, I: MonomialIdeal) -> None:
    _emit(args, render_ideal_file(I).rstrip("\n"), _ideal_json(I))


def cmd_power(args) -> None:
    if args.k < 1:
        raise InputError("--k must be at least 1")
    _emit_ideal(args, matching_power(_load(args), args.k))


def cmd_product(args) -> None:
    I = _load(args)
    J = read_ideal(_read_text(args.other), args.field)
    if I.context.variables != J.context.variables:
        raise InputError("the two ideal files declare different variables")
    _emit_ideal(args, matching_product(I, J))


def cmd_grade(args) -> None:
    nu = monomial_grade(_load(args), args.grade_cap)
    _emit(args, str(nu), {"nu": nu})


def cmd_linrel(args) -> None:
    res = is_linearly_related(_load(args))
    _emit(args, "true" if res else "false", {"linearly_related": res})


def cmd_polarize(args) -> None:
    _emit_ideal(args, polarize_ideal(_load(args)))


def cmd_betti(args) -> None:
    B = betti_table(_load(args), **_caps(args))
    if args.quotient:
        B = B.quotient()
    _emit(args, f"field: {B.to_json()['field']}\n{B}", B.to_json())


def cmd_gfunction(args) -> None:
    prof = g_function(_load(args), **_caps(args))
    text = "\n".join(
        [
            f"field: {prof.field}",
            f"nu: {prof.nu}",
            "g: " + " ".join(map(str, prof.values)),
            "depth: " + " ".join(map(str, prof.depth)),
            "indeg: " + " ".join(map(str, prof.indeg)),
        ]
    )
    _emit(args, text, prof.to_json())


def cmd_bounding(args) -> None:
    I = _load(args)
    deg = I.bounding_multidegree
    _emit(
        args,
        "(" + ", ".join(map(str, deg)) + ")",
        {"vars": list(I.context.variables), "multidegree": list(deg), "size": sum(deg)},
    )


def cmd_edge_ideal(args) -> None:
    try:
        data = json.loads(_read_text(args.graph))
    except json.JSONDecodeError as e:
        raise InputError(f"graph file is not valid JSON: {e}") from None
    G = graph_from_json(data)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GraphWarning)
        if isinstance(G, WeightedOrientedGraph):
            for a, b in G.antiparallel_pairs():
                print(f"warning: edges {a}->{b} and {b}->{a} both present; two generators kept", file=sys.stderr)
            I = edge_ideal_oriented(G, parse_field(args.field))
        else:
            I = edge_ideal(G, parse_field(args.field))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit_ideal(args, I)


def cmd_monomial(args) -> None:
    if args.vars is not None:
        ctx = parse_ring(args.vars, args.field)
    else:
        ctx = _load(args).context
    if (args.from_vector is None) == (args.to_vector is None):
        raise InputError("give exactly one of --from-vector and --to-vector")
    if args.from_vector is not None:
        try:
            a = [int(t) for t in args.from_vector.replace(",", " ").split()]
        except ValueError:
            raise InputError(f"not an integer vector: {args.from_vector!r}") from None
        u = Monomial(ctx, tuple(a))
        _emit(args, str(u), {"monomial": str(u), "multidegree": list(u.exponents)})
    else:
        u = parse_monomial(ctx, args.to_vector)
        _emit(
            args,
            "(" + ", ".join(map(str, u.exponents)) + ")",
            {"monomial": str(u), "multidegree": list(u.exponents)},
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="ideal file (default: stdin)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", default="QQ", help="coefficient field: QQ or F<p> (default QQ)")
    common.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for Betti computations (default: all cores)",
    )
    common.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP, help="max lcm lattice size")
    common.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP, help="max faces per complex")
    common.add_argument(
        "--grade-cap",
        type=int,
        default=DEFAULT_MAX_GRADE_GENERATORS,
        help="max generator count for the monomial grade search",
    )

    parser = _ArgumentParser(prog="matchpow", description="Matching powers of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", parents=[common], help="k-th matching power")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("product", parents=[common], help="matching product of two ideals")
    p.add_argument("-j", "--other", required=True, help="second ideal file")
    p.set_defaults(func=cmd_product)

    for name, func, text in [
        ("grade", cmd_grade, "monomial grade"),
        ("linrel", cmd_linrel, "test whether the ideal is linearly related"),
        ("polarize", cmd_polarize, "polarization"),
        ("gfunction", cmd_gfunction, "normalized depth function"),
        ("bounding-degree", cmd_bounding, "bounding multidegree"),
    ]:
        sub.add_parser(name, parents=[common], help=text).set_defaults(func=func)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("--quotient", action="store_true", help="report the table of S/I instead of I")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("edge-ideal", parents=[common], help="edge ideal of a graph JSON file")
    p.add_argument("--graph", required=True, help="graph JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_edge_ideal)

    p = sub.add_parser("monomial", parents=[common], help="convert between monomials and exponent vectors")
    p.add_argument("--vars", help="variable list, e.g. 'x1..x4, a..c' (default: ring of -i)")
    p.add_argument("--from-vector", metavar="A", help="exponent vector such as '2,0,1'")
    p.add_argument("--to-vector", metavar="U", help="monomial such as 'x^2*z'")
    p.set_defaults(func=cmd_monomial)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.field = parse_field(args.field)
        args.func(args)
    except ComplexityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, InputError, ValueError, KeyError, jsonschema.ValidationError) as e:
        if isinstance(e, jsonschema.ValidationError):
            msg = f"invalid graph file: {e.message}"
        else:
            msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
