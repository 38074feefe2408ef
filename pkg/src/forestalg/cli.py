"""Command-line front end.

Every subcommand reads forests in bracket notation (``-`` reads stdin) and
prints its result on stdout in ``text``, ``json`` or ``latex`` form.
Exit status: 0 on success, 1 on bad input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brackets import ParseError, parse_forest, serialize_forest
from .bseries import (
    BUILTIN_TABLEAUX,
    CoefficientMap,
    check_order,
    compose_maps,
    exact_coefficients,
    load_tableau,
    order_conditions,
    rk_elementary_weights,
)
from .forest import enumerate_trees, gamma, order, sigma
from .graphalg import graft_graph, integer_graph, rooted
from .render import texify, texify_vector, text_vector, to_json, write_latex_document
from .treealg import connes_kreimer, deshuffle, exp_graft, graft_forest, grossman_larson
from .vecspace import GradedVector, bilinear, term, vector_from_terms


class InputError(Exception):
    pass


def _read(value: str | None, flag: str) -> str:
    if value is None:
        raise InputError(f"{flag} is required")
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _forest(args, flag="left"):
    return parse_forest(_read(getattr(args, flag), f"--{flag}"))


def _emit_vector(v: GradedVector, fmt: str) -> str:
    v = v.canonical()
    if fmt == "json":
        return to_json(v)
    if fmt == "latex":
        return texify_vector(v)
    return text_vector(v)


def _emit_scalar(x, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"value": str(x)})
    if fmt == "latex":
        return texify(Fraction(x))
    return str(x)


def _emit_list(rows: list[dict], fmt: str, text_row, latex_row=None) -> str:
    if fmt == "json":
        return json.dumps(rows, separators=(",", ":"))
    if fmt == "latex" and latex_row is not None:
        return "\n".join(latex_row(r) for r in rows)
    return "\n".join(text_row(r) for r in rows)


def _coefficient_map(spec: str) -> CoefficientMap:
    if spec == "exact":
        return exact_coefficients()
    if spec in BUILTIN_TABLEAUX:
        return rk_elementary_weights(BUILTIN_TABLEAUX[spec])
    try:
        return rk_elementary_weights(load_tableau(spec))
    except FileNotFoundError:
        raise InputError(f"unknown map {spec!r}: not a built-in name or tableau file") from None


def _graph(data: dict, want_root: bool):
    try:
        g = integer_graph(data["vertices"], [tuple(e) for e in data.get("edges", [])])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad graph {data!r}: {exc}") from None
    if not want_root:
        return g
    if "root" not in data:
        raise InputError("rooted graph needs a \"root\" field")
    return rooted(g, data["root"])


def _graph_vector(text: str, want_root: bool) -> GradedVector:
    """A graph object, or a list of {"coeff": "p/q", "graph": {...}} entries."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad graph JSON: {exc}") from None
    entries = data if isinstance(data, list) else [{"graph": data}]
    return vector_from_terms(term(e.get("coeff", "1"), _graph(e["graph"], want_root))
                             for e in entries)


def cmd_parse(args):
    pi = _forest(args)
    if args.format == "json":
        return json.dumps({"forest": serialize_forest(pi), "trees": len(pi), "order": order(pi)})
    if args.format == "latex":
        return texify(pi)
    return serialize_forest(pi)


def cmd_serialize(args):
    pi = _forest(args)
    if args.format == "json":
        return json.dumps(serialize_forest(pi))
    if args.format == "latex":
        return texify(pi)
    return serialize_forest(pi)


def cmd_sigma(args):
    return _emit_scalar(sigma(_forest(args)), args.format)


def cmd_gamma(args):
    return _emit_scalar(gamma(_forest(args)), args.format)


def cmd_order(args):
    return _emit_scalar(order(_forest(args)), args.format)


def cmd_enumerate(args):
    if args.order is None or args.order < 1:
        raise InputError("--order must be a positive integer")
    rows = [{"tree": serialize_forest(t), "sigma": sigma(t), "gamma": gamma(t)}
            for t in enumerate_trees(args.order)]
    return _emit_list(rows, args.format, lambda r: r["tree"],
                      lambda r: texify(parse_forest(r["tree"])))


def cmd_deshuffle(args):
    return _emit_vector(deshuffle(_forest(args)), args.format)


def cmd_graft(args):
    return _emit_vector(graft_forest(_forest(args), _forest(args, "right")), args.format)


def cmd_gl(args):
    return _emit_vector(grossman_larson(_forest(args), _forest(args, "right")), args.format)


def cmd_ck(args):
    return _emit_vector(connes_kreimer(_forest(args)), args.format)


def cmd_exp_graft(args):
    if args.truncate is None:
        raise InputError("exp-graft needs --truncate N")
    return _emit_vector(exp_graft(args.truncate), args.format)


def cmd_compose(args):
    a = _coefficient_map(_read(args.left, "--left"))
    b = _coefficient_map(_read(args.right, "--right"))
    ab = compose_maps(a, b)
    top = args.max_order or 3
    rows = [{"tree": serialize_forest(t), "value": str(ab(t))}
            for n in range(1, top + 1) for t in enumerate_trees(n)]
    return _emit_list(rows, args.format, lambda r: f"{r['tree']}\t{r['value']}")


def cmd_order_check(args):
    if args.tableau is None:
        raise InputError("--tableau is required")
    tab = BUILTIN_TABLEAUX.get(args.tableau) or load_tableau(args.tableau)
    p = check_order(tab, args.max_order or 4)
    return _emit_scalar(p, args.format)


def cmd_order_conditions(args):
    p = args.order or args.max_order
    if p is None or p < 1:
        raise InputError("--order must be a positive integer")
    rows = [{"tree": serialize_forest(t), "target": str(c)} for t, c in order_conditions(p)]
    return _emit_list(rows, args.format, lambda r: f"{r['tree']}\t{r['target']}")


def cmd_graph_graft(args):
    left = _graph_vector(_read(args.left, "--left"), want_root=True)
    right = _graph_vector(_read(args.right, "--right"), want_root=False)
    return _emit_vector(bilinear(graft_graph, left, right), args.format)


def _vector_from_json(text: str) -> GradedVector:
    data = json.loads(text)
    terms = []
    for layer in data["layers"]:
        for t in layer["terms"]:
            terms.append(term(t["coeff"], parse_forest(t["basis"])))
    return vector_from_terms(terms)


def cmd_render(args):
    if args.input is not None:
        v = _vector_from_json(_read(args.input, "--input") if args.input == "-"
                              else open(args.input, encoding="utf-8").read())
    else:
        v = GradedVector.of(_forest(args))
    if args.output is not None:
        write_latex_document(v.canonical(), args.output)
        return None
    return _emit_vector(v, args.format)


COMMANDS = {
    "parse": (cmd_parse, "parse a forest and print its canonical form"),
    "serialize": (cmd_serialize, "print the canonical bracket string of a forest"),
    "sigma": (cmd_sigma, "symmetry coefficient of a forest"),
    "gamma": (cmd_gamma, "tree factorial"),
    "order": (cmd_order, "number of vertices"),
    "enumerate": (cmd_enumerate, "all undecorated trees of a given order"),
    "deshuffle": (cmd_deshuffle, "deshuffle coproduct"),
    "graft": (cmd_graft, "grafting product LEFT -> RIGHT"),
    "gl": (cmd_gl, "Grossman-Larson product"),
    "ck": (cmd_ck, "Connes-Kreimer coproduct"),
    "exp-graft": (cmd_exp_graft, "grafting exponential of the single vertex"),
    "compose": (cmd_compose, "composition of two coefficient maps on small trees"),
    "order-check": (cmd_order_check, "order of a Runge-Kutta tableau"),
    "order-conditions": (cmd_order_conditions, "trees with their targets 1/gamma"),
    "graph-graft": (cmd_graph_graft, "grafting of labelled graphs"),
    "render": (cmd_render, "render a forest or JSON vector; --output writes a LaTeX file"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--left", help="forest in bracket notation, map name, or '-' for stdin")
    common.add_argument("--right", help="second operand")
    common.add_argument("--order", type=int)
    common.add_argument("--truncate", type=int, help="highest grade kept")
    common.add_argument("--tableau", help="tableau JSON file or built-in name")
    common.add_argument("--max-order", type=int)
    common.add_argument("--input", help="vector JSON file (render)")
    common.add_argument("--output", help="LaTeX output path (render)")

    parser = argparse.ArgumentParser(prog="forestalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args)
    except (InputError, ParseError, ValueError, KeyError, OSError) as exc:
        print(f"forestalg {args.command}: {exc}", file=sys.stderr)
        return 1
    if out is not None:
        sys.stdout.write(out + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
