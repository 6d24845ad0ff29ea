"""Command-line interface.

Every subcommand prints a JSON envelope by default::

    {"command": ..., "inputs": {...}, "result": {...}, "warnings": [...], "schema_version": "1"}

Counts that grow like ``2^g`` are emitted as decimal strings. Exit codes:
0 success, 2 parameter or domain error, 3 resource cap, 4 invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chowring, degeneration, dualgraph, numerics
from .errors import InvariantError, ResourceError, ScrollError

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _big(n: int) -> str:
    return str(n)


def _fraction(q) -> str:
    return str(q)


# -- subcommands ----------------------------------------------------------------


def cmd_dims(args, warnings):
    d, g, m = args.d, args.g, args.m
    dm = numerics.expected_dim(d, g, m)
    result = {
        "expected_dim": dm,
        "self_intersection": numerics.self_intersection(d, m),
    }
    if g >= 1:
        entries = degeneration.splitting_range(d, g, m)
        if not entries:
            warnings.append("expected_dim is -1: no unisecant curves, splitting range is empty")
        result["splitting_range"] = [
            {"m_x": e.m_x, "dim_on_x": e.dim_on_x, "dim_component": e.dim_component}
            for e in entries
        ]
    else:
        warnings.append("splitting range needs g >= 1")
    if not numerics.in_hdg(d, g):
        warnings.append(f"(d, g) = ({d}, {g}) is below the bound {numerics.hdg_bound(g)}")
    return result


def cmd_min_sections(args, warnings):
    ms = numerics.min_unisecant_degree(args.d, args.g, strict=args.strict)
    if not numerics.in_hdg(args.d, args.g):
        warnings.append(f"(d, g) = ({args.d}, {args.g}) is below the bound {numerics.hdg_bound(args.g)}")
    result = {"m_bar": ms.degree, "kind": ms.kind.value}
    if ms.count is not None:
        result["count"] = _big(ms.count)
    return result


def cmd_index(args, warnings):
    d, g, m = args.d, args.g, args.m
    idx = numerics.index(d, g, m, strict=args.strict)
    proj = numerics.projection_reduction(d, g, m)
    warnings.extend(proj.warnings)
    return {
        "index": _big(idx),
        "expected_dim": numerics.expected_dim(d, g, m),
        "projection": {
            "d": proj.d,
            "g": proj.g,
            "m": proj.m,
            "R": proj.R,
            "d_plus_g_odd": (proj.d + proj.g) % 2 == 1,
            "expected_dim": numerics.expected_dim(proj.d, proj.g, proj.m),
            "in_hdg": proj.in_hdg,
        },
    }


def cmd_chow_product(args, warnings):
    g = args.g
    if args.cap is not None and 2**g > args.cap:
        raise ResourceError(f"H_1...H_g has 2^{g} terms, above --cap {args.cap}")
    count = chowring.product_h_term_count(g)
    result = {"term_count": _big(count)}
    if 2**g <= chowring.MAX_TERMS:
        prod = chowring.product_h(g)
        if len(prod) != count:
            raise InvariantError(f"materialised {len(prod)} terms, expected {count}")
        result["pairing_with_V0"] = _big(chowring.pair_with_v0(prod))
        if args.terms:
            result["terms"] = chowring.format_class(prod)
    else:
        if args.terms:
            raise ResourceError(f"cannot list 2^{g} terms, cap is {chowring.MAX_TERMS}")
        warnings.append("term count computed combinatorially; pairing not materialised")
    return result


def _graph_summary(graph):
    degs = graph.degrees()
    n_xi = 1 << graph.g
    return {
        "v": graph.n_vertices,
        "e": graph.n_edges,
        "chi": dualgraph.euler_char(graph),
        "genus": dualgraph.arithmetic_genus(graph),
        "connected": graph.is_connected(),
        "xi_degrees": sorted(set(degs[:n_xi].tolist())),
        "xi_prime_degrees": sorted(set(degs[n_xi:].tolist())),
    }


def cmd_limit_graph(args, warnings):
    graph = dualgraph.build_limit_graph(args.g, cap=args.cap)
    if args.format == "dot":
        return dualgraph.to_dot(graph)
    result = _graph_summary(graph)
    if not args.summary:
        result.update(dualgraph.to_json_dict(graph))
    return result


def cmd_genus(args, warnings):
    result = {"genus": _big(dualgraph.genus_formula(args.g))}
    if args.via_graph:
        both = dualgraph.genus_both_ways(args.g)
        result.update(
            v=both["v"],
            e=both["e"],
            chi=both["chi"],
            genus_graph=_big(both["genus_graph"]),
            agree=both["genus_graph"] == both["genus_formula"],
        )
    return result


def cmd_monodromy(args, warnings):
    t = dualgraph.monodromy_transpositions(args.g)
    t.check()
    result = {
        "symbols": _big(t.n_symbols),
        "transpositions": len(t.swaps),
        "full_symmetric": dualgraph.is_full_symmetric(t),
    }
    if args.brute_force:
        limit = dualgraph.MAX_BRUTE_FORCE_SYMBOLS
        if args.cap is not None:
            limit = min(limit, args.cap)
        order = dualgraph.generated_group_order(t, max_symbols=limit)
        full = dualgraph.symmetric_group_order(t.n_symbols)
        if (order == full) != result["full_symmetric"]:
            raise InvariantError("connectivity test and explicit closure disagree")
        result.update(group_order=_big(order), symmetric_group_order=_big(full))
    return result


def cmd_stability(args, warnings):
    v = numerics.classify_decomposable(numerics.DecomposableBundle((args.deg1, args.deg2)))
    return {
        "kind": v.kind.value,
        "slope": _fraction(v.slope),
        "destabilizer": v.destabilizer,
    }


def cmd_validate(args, warnings):
    p = numerics.ScrollParams(args.d, args.g)
    warnings.extend(p.validate(strict=args.strict))
    result = {
        "in_hdg": p.in_hdg,
        "bound": numerics.hdg_bound(p.g),
        "smooth_range": p.smooth,
        "R": p.R,
        "nonspecial_range": numerics.nonspecial_thresholds(p.d, p.g).value if p.g >= 1 else None,
    }
    if p.in_hdg:
        result["hilbert_dim"] = numerics.hilbert_dim(p.d, p.g)
        if p.g >= 1:
            result["parameter_count"] = [[k, v] for k, v in numerics.parameter_count(p.d, p.g)]
    return result


# -- plumbing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON envelope (default)")
    fmt.add_argument("--table", dest="format", action="store_const", const="table", help="human-readable columns")
    common.add_argument("--cap", type=int, default=None, help="lower the enumeration cap")
    common.set_defaults(format="json")

    parser = _Parser(prog="scrollinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, *ints):
        p = sub.add_parser(name, parents=[common], help=help_)
        for arg in ints:
            p.add_argument(arg, type=int)
        p.set_defaults(func=func)
        return p

    add("dims", cmd_dims, "expected dimension and splitting range", "d", "g", "m")
    p = add("min-sections", cmd_min_sections, "minimal unisecant degree", "d", "g")
    p.add_argument("--strict", action="store_true")
    p = add("index", cmd_index, "index and projection trace", "d", "g", "m")
    p.add_argument("--strict", action="store_true")
    p = add("chow-product", cmd_chow_product, "expand H_1...H_g", "g")
    p.add_argument("--terms", action="store_true", help="list the monomials")
    p = add("limit-graph", cmd_limit_graph, "dual graph of the limit family", "g")
    p.add_argument("--dot", dest="format", action="store_const", const="dot")
    p.add_argument("--summary", action="store_true", help="omit node and edge lists")
    p = add("genus", cmd_genus, "genus of the one-dimensional family", "g")
    p.add_argument("--via-graph", action="store_true")
    p = add("monodromy", cmd_monodromy, "monodromy of the minimal sections", "g")
    p.add_argument("--brute-force", action="store_true")
    add("stability", cmd_stability, "stability of L1 + L2", "deg1", "deg2")
    p = add("validate", cmd_validate, "check (d, g) against the validity bound", "d", "g")
    p.add_argument("--strict", action="store_true")
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _table(envelope: dict) -> str:
    rows = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}[{i}]", item)
        else:
            rows.append((prefix, json.dumps(value) if not isinstance(value, str) else value))

    walk("", envelope["result"])
    width = max((len(k) for k, _ in rows), default=0)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    lines.extend(f"warning: {w}" for w in envelope["warnings"])
    return "\n".join(lines) + "\n"


def run(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.cap is not None and args.cap < 0:
        stderr.write("scrollinv: error: --cap must be non-negative\n")
        return 2
    warnings: list[str] = []
    try:
        result = args.func(args, warnings)
    except ScrollError as exc:
        stderr.write(f"scrollinv: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    if isinstance(result, str):
        stdout.write(result)
        return 0
    envelope = {
        "command": args.command,
        "inputs": _inputs(args),
        "result": result,
        "warnings": warnings,
        "schema_version": SCHEMA_VERSION,
    }
    if args.format == "table":
        stdout.write(_table(envelope))
    else:
        stdout.write(json.dumps(envelope, indent=2, sort_keys=True) + "\n")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
