"""Command line interface: ``k4sub <command> ...``.

Exit status: 0 on success, 1 when a verification flag fails, 2 on usage or
input errors. Counts in JSON output are decimal strings.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bounds, generators, reductions
from .cycles import DEFAULT_CAP, count_cycles, count_st_paths, enumerate_cycles
from .ears import open_ear_decomposition
from .graph import Graph, GraphFormatError, parse_graph
from .k4census import count_k4, enumerate_k4


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path) as fh:
        return parse_graph(fh.read())


def _int_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _generate(family: str, n: int, seed: int, ears: int | None) -> Graph:
    if family in ("wheel", "wheels"):
        return generators.wheel(n)
    if family == "complete":
        return generators.complete(n)
    if family == "k2q":
        if n < 3:
            raise ValueError("k2q needs n >= 3 (K_{2,n-2})")
        return generators.complete_bipartite(2, n - 2)
    if family == "gadget":
        return generators.gadget_chain(n).graph
    if family == "rand2":
        if ears is None:
            raise UsageError("rand2 requires --ears")
        return generators.random_2connected(n, ears, seed)
    if family == "rand3":
        return generators.random_3connected(n, seed)
    raise UsageError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    g = _generate(args.family, args.n, args.seed, args.ears)
    print(_dump(_graph_json(g)) if args.json else g.to_text(), end="\n" if args.json else "")
    return 0


def cmd_ears(args) -> int:
    d = open_ear_decomposition(_read_graph(args.input))
    if args.json:
        print(_dump({"l": len(d), "ears": [list(e) for e in d.ears]}))
    else:
        print(f"l={len(d)}")
        for ear in d.ears:
            print(" ".join(map(str, ear)))
    return 0


def cmd_cycles(args) -> int:
    g = _read_graph(args.input)
    if args.count_only:
        count, truncated = count_cycles(g, args.cap)
        print(_dump({"cycles": str(count), "truncated": truncated}) if args.json else count)
        return 0
    cl = enumerate_cycles(g, args.cap)
    if args.json:
        print(_dump({"cycles": [list(c) for c in cl.cycles], "count": str(len(cl)),
                     "truncated": cl.truncated}))
    else:
        for c in cl.cycles:
            print(" ".join(map(str, c)))
    return 0


def cmd_paths(args) -> int:
    g = _read_graph(args.input)
    if args.s == args.t:
        raise UsageError("--s and --t must differ")
    count, truncated = count_st_paths(g, args.s, args.t, args.cap)
    print(_dump({"paths": str(count), "truncated": truncated}) if args.json else count)
    return 0


def cmd_count_k4(args) -> int:
    g = _read_graph(args.input)
    if args.list:
        res = enumerate_k4(g, args.cap)
        out = {"k4_count": str(len(res)), "truncated": res.truncated,
               "subdivisions": [c.to_json() for c in res.certificates]}
    else:
        count, truncated = count_k4(g, args.cap)
        out = {"k4_count": str(count), "truncated": truncated}
    print(_dump(out))
    return 0


def cmd_verify(args) -> int:
    rep = bounds.bound_report(_read_graph(args.input), args.cap)
    print(_dump(rep.to_json()))
    return 0 if rep.ok else 1


def _campaign_instances(args):
    family = {"wheels": "wheel", "wheel": "wheel"}.get(args.family, args.family)
    for n in _int_range(args.n):
        for i in range(args.samples if family in ("rand2", "rand3") else 1):
            seed = args.seed + i
            yield {"family": family, "n": n, "seed": seed}, (family, n, seed, args.ears)


def cmd_campaign(args) -> int:
    threads = max(1, int(os.environ.get("K4_THREADS", "1") or 1))

    def run(item):
        meta, spec = item
        rep = bounds.bound_report(_generate(*spec), args.cap)
        return {**meta, **rep.to_json()}

    ok = True
    gaps = []
    count = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for line in pool.map(run, list(_campaign_instances(args))):
            print(_dump(line), flush=True)
            ok &= line["ok"]
            count += 1
            gap = line["bounds"].get("conjecture_gap")
            if gap is not None:
                gaps.append(int(gap))
    agg = {"aggregate": True, "instances": count, "all_ok": ok,
           "min_conjecture_gap": str(min(gaps)) if gaps else None}
    print(_dump(agg))
    return 0 if ok else 1


def _emit_graph(g: Graph, meta: dict, args):
    if args.edges_only:
        lines = [f"# {k}={v}" for k, v in meta.items()]
        print("\n".join(lines))
        print(g.to_text(), end="")
    else:
        print(_dump({"graph": _graph_json(g), **meta}))


def cmd_reduce(args) -> int:
    g = _read_graph(args.input)
    if args.kind == "apex":
        if args.s is None:
            raise UsageError("reduce apex requires --s")
        inst = reductions.build_apex_instance(g, args.s)
        _emit_graph(inst.graph, {"base_size": inst.base_size, "apexes": list(inst.apexes)}, args)
        return 0
    if args.s is None or args.t is None:
        raise UsageError(f"reduce {args.kind} requires --s and --t")
    if args.s == args.t:
        raise UsageError("--s and --t must differ")
    fi = reductions.build_fixed_instance(g, args.s, args.t)
    markers = {"a": fi.a, "b": fi.b, "c": fi.c, "d": fi.d, "s": fi.s, "t": fi.t}
    if args.kind == "fixed":
        _emit_graph(fi.graph, {"markers": markers}, args)
        return 0
    k4, truncated = count_k4(fi.graph, args.cap)
    wi = reductions.build_weighted_instance(fi, args.cells, None if truncated else k4)
    gadgets = [{"edge": list(e), "chains": [ids for _, ids in chains]}
               for e, chains in sorted(wi.gadget_map.items())]
    _emit_graph(wi.graph, {"markers": markers, "cells": wi.cells, "certified": wi.certified,
                           **({} if args.edges_only else {"gadgets": gadgets})}, args)
    return 0


def cmd_recover(args) -> int:
    if args.kind == "fixed":
        if args.total is None:
            raise UsageError("recover fixed requires --total")
        print(reductions.recover_fixed_count(int(args.total), args.cells))
        return 0
    if args.evals is None or args.tmax is None:
        raise UsageError("recover vandermonde requires --evals and --tmax")
    with open(args.evals) if args.evals != "-" else sys.stdin as fh:
        raw = json.load(fh)
    evals = {int(k): int(v) for k, v in raw.items()}
    print(reductions.vandermonde_recover(evals, args.tmax))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="edge-list file, or '-' for stdin")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="k4sub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph")
    p.add_argument("--family", required=True,
                   choices=["wheel", "complete", "k2q", "gadget", "rand2", "rand3"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ears", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ears", parents=[common], help="open ear decomposition")
    p.set_defaults(func=cmd_ears)

    p = sub.add_parser("cycles", parents=[common], help="enumerate or count cycles")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("paths", parents=[common], help="count simple s-t paths")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("count-k4", parents=[common], help="count K4-subdivisions")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_count_k4)

    p = sub.add_parser("verify", parents=[common], help="bound report for one graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("campaign", parents=[common], help="bound reports over a family")
    p.add_argument("--family", required=True,
                   choices=["wheels", "wheel", "complete", "k2q", "rand2", "rand3"])
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--samples", type=int, default=1, help="seeds per n for random families")
    p.add_argument("--ears", type=int)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("reduce", parents=[common], help="build reduction instances")
    p.add_argument("kind", choices=["fixed", "weighted", "apex"])
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--cells", type=int, default=1)
    p.add_argument("--edges-only", action="store_true",
                   help="edge-list output with metadata in '#' comments")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("recover", parents=[common], help="recover counts from reductions")
    p.add_argument("kind", choices=["vandermonde", "fixed"])
    p.add_argument("--tmax", type=int)
    p.add_argument("--evals")
    p.add_argument("--total")
    p.add_argument("--cells", type=int, default=1)
    p.set_defaults(func=cmd_recover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"k4sub {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"k4sub {args.command}: inconsistent input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
