"""Command-line interface: ``ugqsym <command> ...``.

Graph arguments accept a graph name (``K3``, ``P3+K2``), an inline edge
list (``1-2,2-3``), a graph6 string, a file path, or ``-`` for standard
input.  Files and standard input hold either an edge list (one ``i j``
pair per line) or graph6 strings, one per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import reduce
from typing import Sequence, TextIO

from . import config
from .enumeration import filter_connected, generate_by_edges, generate_by_nodes
from .errors import CapacityError, DomainError, ParseError
from .graph import CanonGraph, canonical, format_edge_list, named, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .hopf import (
    antipode,
    basis,
    binomial_of_edge,
    coproduct,
    element_to_data,
    format_element,
    format_tensor,
    multiply,
    tensor_to_data,
)
from .invariants import (
    deck,
    format_matrix,
    invariant_vector,
    iso_test,
    kelly_check,
    separating_family,
    subgraph_matrix,
    table_graphs,
    vectors_to_csv,
)
from .series import evaluate, evaluate_oracle, expand


class _Context:
    def __init__(self, stdin: TextIO):
        self.stdin = stdin
        self._stdin_text: str | None = None

    def stdin_text(self) -> str:
        if self._stdin_text is None:
            self._stdin_text = self.stdin.read()
        return self._stdin_text


def _parse_text(text: str) -> list[CanonGraph]:
    # graph6 never uses digits, edge lists always do
    if any(ch.isdigit() for ch in text):
        return [canonical(parse_edge_list(text))]
    return [canonical(parse_graph6(line)[1]) for line in text.split() if line]


def _inline_edges(arg: str) -> CanonGraph:
    edges = []
    for item in arg.replace(",", " ").split():
        parts = item.split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad edge {item!r} in {arg!r}")
        i, j = int(parts[0]), int(parts[1])
        if i > j:
            i, j = j, i
        if i < 1 or i == j:
            raise ParseError(f"bad edge {item!r} in {arg!r}")
        edges.append((i, j))
    return canonical(edges)


def read_graphs(arg: str, ctx: _Context) -> list[CanonGraph]:
    if arg == "-":
        return _parse_text(ctx.stdin_text())
    try:
        return [named(arg)]
    except DomainError:
        pass
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as f:
            return _parse_text(f.read())
    if any(ch.isdigit() for ch in arg) and "-" in arg:
        return [_inline_edges(arg)]
    return [canonical(parse_graph6(arg)[1])]


def read_graph(arg: str, ctx: _Context) -> CanonGraph:
    graphs = read_graphs(arg, ctx)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph in {arg!r}, found {len(graphs)}")
    return graphs[0]


def _edges_data(g: CanonGraph) -> list[list[int]]:
    return [list(e) for e in g.edges]


def _emit(out: TextIO, args, text: str, data) -> None:
    if args.json:
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def cmd_canon(args, ctx, out):
    g = read_graph(args.graph, ctx)
    if args.graph6:
        text = encode_graph6(g)
    else:
        text = format_edge_list(g)
    _emit(out, args, text, {"edges": _edges_data(g), "nodes": g.node_count, "graph6": encode_graph6(g)})


def cmd_eval(args, ctx, out):
    pattern = read_graph(args.pattern, ctx)
    host = read_graph(args.host, ctx)
    value = evaluate_oracle(pattern, host) if args.oracle else evaluate(pattern, host)
    _emit(out, args, str(value), value)


def cmd_product(args, ctx, out):
    factors = [basis(read_graph(a, ctx)) for a in args.graphs]
    result = reduce(multiply, factors)
    _emit(out, args, format_element(result), element_to_data(result))


def cmd_coproduct(args, ctx, out):
    result = coproduct(basis(read_graph(args.graph, ctx)))
    _emit(out, args, format_tensor(result), tensor_to_data(result))


def cmd_antipode(args, ctx, out):
    result = antipode(basis(read_graph(args.graph, ctx)))
    _emit(out, args, format_element(result), element_to_data(result))


def cmd_binom(args, ctx, out):
    result = binomial_of_edge(args.n)
    _emit(out, args, format_element(result), element_to_data(result))


def cmd_iso(args, ctx, out):
    h1, h2 = read_graph(args.first, ctx), read_graph(args.second, ctx)
    same = iso_test(h1, h2, args.n)
    _emit(out, args, "true" if same else "false", same)


def cmd_vector(args, ctx, out):
    hosts = [g for a in args.hosts for g in read_graphs(a, ctx)]
    n = args.n or max([3] + [h.node_count for h in hosts])
    if args.json:
        family = separating_family(n)
        data = {
            "n": n,
            "patterns": [_edges_data(g) for g in family],
            "rows": [
                {"host": _edges_data(h), "values": list(invariant_vector(h, n, family).values)}
                for h in hosts
            ],
        }
        out.write(json.dumps(data) + "\n")
    else:
        out.write(vectors_to_csv(hosts, n))


def cmd_deck(args, ctx, out):
    d = deck(read_graph(args.graph, ctx), args.n)
    lines = [encode_graph6(card, d.card_order) for card in d]
    _emit(out, args, "\n".join(lines), {"n": d.n, "cards": [_edges_data(c) for c in d]})


def cmd_kelly(args, ctx, out):
    rec = kelly_check(read_graph(args.pattern, ctx), read_graph(args.host, ctx), args.n)
    text = (
        f"(n-r) * M_G(H) = {rec.lhs}\n"
        f"sum over deck = {rec.rhs}\n"
        f"holds: {'true' if rec.holds else 'false'}\n"
        f"factor on deck side: {rec.printed_lhs} vs {rec.printed_rhs} "
        f"({'holds' if rec.printed_holds else 'fails'})"
    )
    data = {
        "n": rec.n,
        "r": rec.r,
        "lhs": rec.lhs,
        "rhs": rec.rhs,
        "holds": rec.holds,
        "printed_lhs": rec.printed_lhs,
        "printed_rhs": rec.printed_rhs,
        "printed_holds": rec.printed_holds,
    }
    _emit(out, args, text, data)


def cmd_matrix(args, ctx, out):
    graphs = table_graphs(args.max)
    rows = subgraph_matrix(graphs)
    if args.json:
        out.write(json.dumps({"graphs": [_edges_data(g) for g in graphs], "rows": rows}) + "\n")
    else:
        out.write(format_matrix(rows))


def cmd_series(args, ctx, out):
    s = expand(read_graph(args.pattern, ctx), args.labels)
    data = s.to_data()
    text = "\n".join("*".join(f"x[{i},{j}]" for i, j in mono) or "1" for mono in data)
    _emit(out, args, text, data)


def cmd_generate(args, ctx, out):
    if args.edges is not None:
        graphs = generate_by_edges(args.edges)
        width = None
    else:
        graphs = generate_by_nodes(args.nodes)
        width = args.nodes
    if args.connected:
        graphs = filter_connected(graphs)
    if args.count:
        _emit(out, args, str(len(graphs)), len(graphs))
        return
    codes = [encode_graph6(g, width) for g in graphs]
    _emit(out, args, "\n".join(codes), codes)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-nodes", type=int, help="override the node limit")
    common.add_argument("--max-edges", type=int, help="override the edge limit")

    parser = argparse.ArgumentParser(prog="ugqsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("canon", cmd_canon, "canonical form of a graph")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--graph6", action="store_true", help="print graph6 instead of edges")

    p = add("eval", cmd_eval, "count subgraphs of the host isomorphic to the pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--oracle", action="store_true", help="use edge-subset enumeration")

    p = add("product", cmd_product, "product of basis elements")
    p.add_argument("graphs", nargs="+")

    p = add("coproduct", cmd_coproduct, "coproduct of a basis element")
    p.add_argument("graph")

    p = add("antipode", cmd_antipode, "antipode of a basis element")
    p.add_argument("graph")

    p = add("binom", cmd_binom, "binomial coefficient of the single-edge series")
    p.add_argument("n", type=int)

    p = add("iso", cmd_iso, "isomorphism test through subgraph counts")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--n", type=int)

    p = add("vector", cmd_vector, "invariant vectors as CSV")
    p.add_argument("hosts", nargs="+")
    p.add_argument("--n", type=int)

    p = add("deck", cmd_deck, "vertex-deleted subgraphs, graph6 per line")
    p.add_argument("graph")
    p.add_argument("--n", type=int)

    p = add("kelly", cmd_kelly, "check Kelly's lemma on one pattern and host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--n", type=int)

    p = add("matrix", cmd_matrix, "subgraph-count table of the smallest graphs")
    p.add_argument("--max", type=int, default=23)

    p = add("series", cmd_series, "monomials of a series truncated to labels <= N")
    p.add_argument("--pattern", required=True)
    p.add_argument("--labels", type=int, required=True)

    p = add("generate", cmd_generate, "list canonical graphs in graph6")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edges", type=int)
    group.add_argument("--nodes", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--count", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    overrides = {}
    if args.max_nodes is not None:
        overrides["max_nodes"] = args.max_nodes
    if args.max_edges is not None:
        overrides["max_edges"] = args.max_edges
    try:
        with config.limits(config.Limits.from_env(), **overrides):
            args.func(args, _Context(stdin), stdout)
    except ParseError as exc:
        stderr.write(f"ugqsym: {exc}\n")
        return 2
    except (DomainError, CapacityError) as exc:
        stderr.write(f"ugqsym: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
