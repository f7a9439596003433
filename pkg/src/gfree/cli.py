"""Command-line interface.

Exit codes: 0 = success or affirmative answer, 1 = well-formed negative
answer, 2 = input error.  Output is deterministic: identical inputs give
byte-identical output.  `--json` wraps every report in an object with
fields command, inputs, verdict, optional witness, and stats.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .automorphism import automorphisms, check_no_z3
from .cotree import (
    decompose,
    interpret_tree_from_graph,
    least_module,
    least_strong_module,
    realize,
    tree_lift,
    validate_cotree,
)
from .embedding import (
    antichain_graph,
    antichain_params,
    delete_vertex_cotree,
    label_meet_embed,
)
from .errors import GfreeError, NotCographError
from .gadget import decode_psi, encode_phi, gadget_params
from .graphs import Graph, complement, is_isomorphic
from .textio import (
    format_cotree,
    format_graph,
    parse_cotree,
    parse_graph,
    parse_plain_tree,
)
from .typeslogic import ConstantedGraph, type_fragment

__all__ = ["CommandResult", "run_command", "main"]


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _payload(
    args: argparse.Namespace,
    verdict: str,
    witness=None,
    stats: dict | None = None,
    inputs: dict | None = None,
) -> str:
    doc = {
        "command": args.command,
        "inputs": inputs or {},
        "verdict": verdict,
        "stats": stats or {},
    }
    if witness is not None:
        doc["witness"] = witness
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _graph_stats(g: Graph) -> dict:
    return {"vertices": g.n, "edges": g.m}


def _path_str(path: tuple[int, ...]) -> str:
    return "/" + "/".join(str(i) for i in path) if path else "/"


def _not_cograph(args, exc: NotCographError, inputs: dict) -> CommandResult:
    witness = " ".join(exc.witness)
    if args.json:
        return CommandResult(
            1, _payload(args, "not a cograph", list(exc.witness), inputs=inputs)
        )
    return CommandResult(1, f"not a cograph; witness: {witness}\n")


def _cmd_recognize(args) -> CommandResult:
    inputs = {"graph": args.graph}
    g = _load_graph(args.graph)
    try:
        decompose(g)
    except NotCographError as exc:
        return _not_cograph(args, exc, inputs)
    if args.json:
        return CommandResult(
            0, _payload(args, "cograph", stats=_graph_stats(g), inputs=inputs)
        )
    return CommandResult(0, "cograph\n")


def _cmd_decompose(args) -> CommandResult:
    inputs = {"graph": args.graph}
    g = _load_graph(args.graph)
    try:
        tree = decompose(g)
    except NotCographError as exc:
        return _not_cograph(args, exc, inputs)
    text = format_cotree(tree)
    if args.json:
        return CommandResult(
            0, _payload(args, "cograph", text, _graph_stats(g), inputs)
        )
    return CommandResult(0, text + "\n")


def _cmd_realize(args) -> CommandResult:
    inputs = {"cotree": args.cotree}
    tree = parse_cotree(_read(args.cotree))
    g = realize(tree)
    if args.json:
        return CommandResult(
            0, _payload(args, "realized", format_graph(g), _graph_stats(g), inputs)
        )
    return CommandResult(0, format_graph(g))


def _cmd_validate(args) -> CommandResult:
    inputs = {"cotree": args.cotree}
    tree = parse_cotree(_read(args.cotree), strict=False)
    report = validate_cotree(tree)
    if report.ok:
        if args.json:
            return CommandResult(0, _payload(args, "valid", inputs=inputs))
        return CommandResult(0, "valid\n")
    if args.json:
        witness = [
            {"path": _path_str(v.path), "message": v.message}
            for v in report.violations
        ]
        return CommandResult(
            1,
            _payload(
                args,
                "invalid",
                witness,
                {"violations": len(report.violations)},
                inputs,
            ),
        )
    lines = [
        f"violation at {_path_str(v.path)}: {v.message}" for v in report.violations
    ]
    return CommandResult(1, "\n".join(lines) + "\n")


def _cmd_iso(args) -> CommandResult:
    inputs = {"first": args.first, "second": args.second}
    g = _load_graph(args.first)
    h = _load_graph(args.second)
    found = is_isomorphic(g, h)
    if found is None:
        if args.json:
            return CommandResult(1, _payload(args, "not isomorphic", inputs=inputs))
        return CommandResult(1, "not isomorphic\n")
    if args.json:
        return CommandResult(
            0, _payload(args, "isomorphic", found.as_dict(), inputs=inputs)
        )
    lines = ["isomorphic"] + [f"{u} -> {v}" for u, v in found.pairs]
    return CommandResult(0, "\n".join(lines) + "\n")


def _cmd_embed(args) -> CommandResult:
    inputs = {"pattern": args.pattern, "host": args.host}
    g = _load_graph(args.pattern)
    h = _load_graph(args.host)
    emb = label_meet_embed(decompose(g), decompose(h))
    if emb is None:
        if args.json:
            return CommandResult(1, _payload(args, "does not embed", inputs=inputs))
        return CommandResult(1, "does not embed\n")
    witness = [
        {"from": _path_str(sp), "to": _path_str(tp)} for sp, tp in emb.pairs
    ]
    if args.json:
        return CommandResult(0, _payload(args, "embeds", witness, inputs=inputs))
    return CommandResult(0, "embeds\n")


def _cmd_delete_leaf(args) -> CommandResult:
    inputs = {"cotree": args.cotree, "leaf": args.leaf}
    tree = parse_cotree(_read(args.cotree))
    result = delete_vertex_cotree(tree, args.leaf)
    text = format_cotree(result)
    if args.json:
        return CommandResult(0, _payload(args, "deleted", text, inputs=inputs))
    return CommandResult(0, text + "\n")


def _module_command(args, strong: bool) -> CommandResult:
    inputs = {"graph": args.graph, "u": args.u, "v": args.v}
    g = _load_graph(args.graph)
    op = least_strong_module if strong else least_module
    members = sorted(op(g, args.u, args.v).members)
    if args.json:
        return CommandResult(
            0, _payload(args, "ok", members, {"size": len(members)}, inputs)
        )
    return CommandResult(0, " ".join(members) + "\n")


def _cmd_module(args) -> CommandResult:
    return _module_command(args, strong=False)


def _cmd_strong_module(args) -> CommandResult:
    return _module_command(args, strong=True)


def _cmd_interpret_tree(args) -> CommandResult:
    inputs = {"graph": args.graph}
    g = _load_graph(args.graph)
    tree = interpret_tree_from_graph(g)
    text = format_cotree(tree)
    if args.json:
        return CommandResult(0, _payload(args, "ok", text, inputs=inputs))
    return CommandResult(0, text + "\n")


def _cmd_tree_lift(args) -> CommandResult:
    inputs = {"tree": args.tree, "k": args.k}
    plain = parse_plain_tree(_read(args.tree))
    tree = tree_lift(plain, args.k)
    text = format_cotree(tree)
    if args.json:
        return CommandResult(0, _payload(args, "ok", text, inputs=inputs))
    return CommandResult(0, text + "\n")


def _cmd_antichain(args) -> CommandResult:
    inputs = {"forbidden": args.forbidden, "indices": args.indices}
    forbidden = _load_graph(args.forbidden)
    g = antichain_graph(forbidden, args.indices)
    complemented, m = antichain_params(forbidden)
    stats = dict(_graph_stats(g), complemented=complemented, m=m)
    if args.json:
        return CommandResult(0, _payload(args, "ok", format_graph(g), stats, inputs))
    return CommandResult(0, format_graph(g))


def _cmd_types(args) -> CommandResult:
    inputs = {"base": args.base, "forbidden": args.forbidden, "k": args.k}
    g = _load_graph(args.base)
    forbidden = _load_graph(args.forbidden)
    target = ConstantedGraph(g, g.vertices)
    formulas = [phi.render() for phi in type_fragment(target, forbidden, args.k)]
    if args.json:
        return CommandResult(
            0, _payload(args, "ok", formulas, {"formulas": len(formulas)}, inputs)
        )
    return CommandResult(0, "\n".join(formulas) + "\n")


def _cmd_encode(args) -> CommandResult:
    inputs = {"forbidden": args.forbidden, "input": args.input}
    forbidden = _load_graph(args.forbidden)
    h = _load_graph(args.input)
    params = gadget_params(forbidden)
    enc = encode_phi(h, params)
    if args.sidecar:
        lines = [f"hub {v} {hub}" for v, hub in enc.hub_of]
        Path(args.sidecar).write_text(
            "".join(line + "\n" for line in lines), encoding="utf-8"
        )
    out = enc.deliverable
    stats = dict(
        _graph_stats(out),
        complemented=params.complemented,
        hub_cycle=params.hub_cycle,
        edge_cycle=params.edge_cycle,
        non_edge_cycle=params.non_edge_cycle,
        path_len=params.path_len,
    )
    if args.json:
        return CommandResult(0, _payload(args, "encoded", format_graph(out), stats, inputs))
    return CommandResult(0, format_graph(out))


def _cmd_decode(args) -> CommandResult:
    inputs = {"forbidden": args.forbidden, "encoded": args.encoded}
    forbidden = _load_graph(args.forbidden)
    e = _load_graph(args.encoded)
    params = gadget_params(forbidden)
    pre = complement(e) if params.complemented else e
    g = decode_psi(pre, params)
    if args.json:
        return CommandResult(
            0, _payload(args, "decoded", format_graph(g), _graph_stats(g), inputs)
        )
    return CommandResult(0, format_graph(g))


def _cmd_roundtrip(args) -> CommandResult:
    inputs = {"forbidden": args.forbidden, "input": args.input}
    forbidden = _load_graph(args.forbidden)
    h = _load_graph(args.input)
    params = gadget_params(forbidden)
    enc = encode_phi(h, params)
    decoded = decode_psi(enc.graph, params)
    found = is_isomorphic(h, decoded)
    stats = dict(_graph_stats(enc.deliverable), complemented=params.complemented)
    if found is None:
        if args.json:
            return CommandResult(
                1, _payload(args, "decoded graph differs", stats=stats, inputs=inputs)
            )
        return CommandResult(1, "decoded graph is NOT isomorphic to the input\n")
    if args.json:
        return CommandResult(
            0, _payload(args, "roundtrip ok", found.as_dict(), stats, inputs)
        )
    return CommandResult(0, "decoded graph isomorphic to the input\n")


def _cmd_aut(args) -> CommandResult:
    inputs = {"graph": args.graph}
    g = _load_graph(args.graph)
    perms = automorphisms(g)
    if args.json:
        witness = [p.as_dict() for p in perms]
        return CommandResult(
            0, _payload(args, "ok", witness, {"count": len(perms)}, inputs)
        )
    lines = [f"count {len(perms)}"]
    for p in perms:
        cyc = p.cycles()
        lines.append(
            "id" if not cyc else "".join("(" + " ".join(c) + ")" for c in cyc)
        )
    return CommandResult(0, "\n".join(lines) + "\n")


def _cmd_no_z3(args) -> CommandResult:
    inputs = {"max_n": args.max_n}
    report = check_no_z3(args.max_n)
    stats = {
        "examined": {str(n): count for n, count in report.examined},
        "total": report.total,
    }
    if report.ok:
        if args.json:
            return CommandResult(
                0, _payload(args, "no order-3 automorphism group", stats=stats, inputs=inputs)
            )
        lines = [f"n={n}: {count} cograph(s) examined" for n, count in report.examined]
        lines.append("no order-3 automorphism group found")
        return CommandResult(0, "\n".join(lines) + "\n")
    witness = [format_graph(g) for g in report.offenders]
    if args.json:
        return CommandResult(1, _payload(args, "offenders found", witness, stats, inputs))
    return CommandResult(
        1,
        "\n".join(["order-3 automorphism group found on:"] + witness),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfree",
        description="Cographs, decomposition trees, and forbidden-subgraph tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    p = cmd("recognize", _cmd_recognize, "test whether a graph is a cograph")
    p.add_argument("graph")

    p = cmd("decompose", _cmd_decompose, "print the decomposition tree of a cograph")
    p.add_argument("graph")

    p = cmd("realize", _cmd_realize, "print the graph a cotree realizes")
    p.add_argument("cotree")

    p = cmd("validate", _cmd_validate, "report structural violations of a cotree file")
    p.add_argument("cotree")

    p = cmd("iso", _cmd_iso, "test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")

    p = cmd("embed", _cmd_embed, "induced-subgraph test for cographs, on the trees")
    p.add_argument("pattern")
    p.add_argument("host")

    p = cmd("delete-leaf", _cmd_delete_leaf, "remove one leaf from a cotree")
    p.add_argument("cotree")
    p.add_argument("leaf")

    p = cmd("module", _cmd_module, "least module containing two vertices")
    p.add_argument("graph")
    p.add_argument("u")
    p.add_argument("v")

    p = cmd("strong-module", _cmd_strong_module, "least strong module of two vertices")
    p.add_argument("graph")
    p.add_argument("u")
    p.add_argument("v")

    p = cmd(
        "interpret-tree",
        _cmd_interpret_tree,
        "rebuild the decomposition tree from pair modules",
    )
    p.add_argument("graph")

    p = cmd("tree-lift", _cmd_tree_lift, "lift a plain rooted tree to a cotree")
    p.add_argument("tree")
    p.add_argument("-k", type=int, default=2, help="fresh leaves per node (default 2)")

    p = cmd("antichain", _cmd_antichain, "cycle-family graph for an index set")
    p.add_argument("--forbidden", required=True)
    p.add_argument("indices", nargs="+", type=int)

    p = cmd("types", _cmd_types, "k-bounded existential type fragment")
    p.add_argument("--base", required=True)
    p.add_argument("--forbidden", required=True)
    p.add_argument("-k", type=int, default=4, help="fresh-vertex bound (default 4)")

    p = cmd("encode", _cmd_encode, "encode a graph into a forbidden-free graph")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--sidecar", help="write a hub map file")

    p = cmd("decode", _cmd_decode, "decode an encoded graph")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--input", required=True, dest="encoded")

    p = cmd("roundtrip", _cmd_roundtrip, "encode, decode, and compare")
    p.add_argument("--forbidden", required=True)
    p.add_argument("input")

    p = cmd("aut", _cmd_aut, "list all automorphisms of a graph")
    p.add_argument("graph")

    p = cmd("no-z3", _cmd_no_z3, "exhaustive order-3 automorphism group search")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")

    return parser


def run_command(argv: list[str]) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(code, "")
    try:
        return args.func(args)
    except GfreeError as exc:
        if getattr(args, "json", False):
            doc = {
                "command": args.command,
                "inputs": {},
                "verdict": "error",
                "message": str(exc),
                "stats": {},
            }
            return CommandResult(2, json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return CommandResult(2, f"error: {exc}\n")
    except OSError as exc:
        return CommandResult(2, f"error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
