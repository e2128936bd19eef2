"""Command-line toolkit: generate graphs, color them, audit charges, detect
reducible configurations, verify colorings, and run corpus checks.

Exit codes: 0 success, 1 check failure, 2 usage/input error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys

from . import catalog as cat
from . import coloring as col
from . import discharge as dis
from . import embedding as emb
from . import generators as gen
from . import reducer as red
from .budgets import Budget
from .errors import PscError

DEFAULT_SEED = 1729


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PSC_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


def _read_graph(path):
    with open(path) as fh:
        return emb.from_pg(fh.read())


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    family = args.family
    if family == "wegner":
        if args.delta is None:
            raise PscError("--family wegner requires --delta")
        g = gen.gen_wegner(args.delta)
    elif family == "stacked":
        if args.n is None:
            raise PscError("--family stacked requires --n")
        g = gen.gen_stacked_triangulation(args.n, _seed(args))
    elif family == "cycle":
        if args.n is None:
            raise PscError("--family cycle requires --n")
        g = gen.gen_cycle(args.n)
    elif family == "grid":
        if args.n is None:
            raise PscError("--family grid requires --n (side length)")
        g = gen.gen_grid(args.n, args.n)
    else:
        g = gen.named_graph(family)
    _emit(emb.to_pg(g), args.output)
    return 0


def cmd_color(args):
    g = _read_graph(args.input)
    delta = g.max_degree()
    budget = args.budget
    trace_text = None
    if args.mode == "constructive":
        base = Budget.for_graph(g)
        b = base if budget is None else \
            Budget(budget, base.delta_context, base.regime)
        coloring, trace = red.color_within_budget(g, b)
        budget = b.palette_size
        trace_text = trace.to_jsonl()
    elif args.mode == "exact":
        res = col.exact_chi2(g, time_limit=args.timeout)
        coloring = res.witness
        if not res.exact:
            print(f"chi2 <= {res.chi2} (timeout, not exact)", file=sys.stderr)
    elif args.mode == "dsatur":
        coloring = col.dsatur_color(emb.square(g))
        if budget is None:
            budget = 5 * delta + 1
    else:  # greedy
        coloring = col.greedy_color(g)
        if budget is None:
            budget = 5 * delta + 1
    ok, pair = col.verify(g, coloring)
    if args.json:
        obj = json.loads(coloring.to_json())
        obj["verified"] = ok
        if trace_text is not None:
            obj["trace"] = [json.loads(s) for s in trace_text.splitlines()]
        _emit(json.dumps(obj) + "\n", args.output)
    else:
        lines = [f"palette={coloring.palette_size}",
                 f"verified={'yes' if ok else 'no (%s,%s)' % pair}"]
        if budget is not None:
            lines.append(f"budget={budget}")
        if trace_text is not None:
            lines.append("trace:")
            lines.append(trace_text.rstrip("\n"))
        _emit("\n".join(lines) + "\n", args.output)
    if not ok or (budget is not None and coloring.palette_size > budget):
        return 1
    return 0


def cmd_audit(args):
    g = _read_graph(args.input)
    report = dis.audit(g)
    if args.json:
        _emit(report.to_json() + "\n", args.output)
    else:
        led = report.ledger
        lines = [f"sum={dis.fmt(led.total_final())}",
                 f"transfers={len(led.transfers)}",
                 f"weak={sorted(v for v, s in report.weak_strong.items() if s == dis.WEAK)}"]
        for el, c in report.negatives:
            kinds = sorted({w.kind for w in report.cross_refs[el]})
            lines.append(f"negative {el[0]}{el[1]} {dis.fmt(c)} witnesses={kinds}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_detect(args):
    g = _read_graph(args.input)
    base = Budget.for_graph(g)
    budget = base if args.budget is None else \
        Budget(args.budget, base.delta_context, base.regime)
    if args.all:
        ws = cat.detect_all(g, budget)
    else:
        w = cat.find_first_witness(g, budget)
        ws = [w] if w else []
    _emit(cat.report_json(ws) + "\n", args.output)
    return 0 if ws else 1


def cmd_verify(args):
    g = _read_graph(args.input)
    with open(args.coloring) as fh:
        coloring = col.SquareColoring.from_json(fh.read())
    ok, pair = col.verify(g, coloring)
    if ok:
        print("valid")
        return 0
    print(f"invalid: vertices {pair[0]} and {pair[1]} share color "
          f"{coloring.color_of[pair[0]]}")
    return 1


def _corpus_member(task):
    """Worker: run all checks on one graph; returns a dict of pass flags."""
    text, mode = task
    g = emb.from_pg(text)
    out = {}
    if mode in ("charges", "all"):
        report = dis.audit(g)
        ok = report.ledger.total_final() == -12 \
            and report.ledger.total_initial() == -12
        for v in range(g.n):
            final = report.ledger.final[("v", v)]
            d = g.degree(v)
            if d >= 7 and final < 0:
                ok = False
            if d == 6 and final != 0:
                ok = False
            if report.weak_strong[v] == dis.WEAK and d > 5:
                ok = False
        out["charges"] = ok
    if mode in ("detect", "all"):
        out["detect"] = bool(cat.detect_all(g))
    if mode in ("constructive", "all"):
        b = Budget.for_graph(g)
        try:
            c, _ = red.color_within_budget(g)
            ok, _pair = col.verify(g, c)
            out["constructive"] = ok and c.palette_size <= b.palette_size
        except PscError:
            out["constructive"] = False
    return out


def cmd_corpus(args):
    count = args.n if args.n is not None else 100
    delta_min = args.delta if args.delta is not None else 9
    delta_max = 6 if delta_min <= 6 else None
    graphs = gen.gen_corpus(count, (20, 200), delta_min, _seed(args),
                            delta_max=delta_max)
    mode = args.mode if args.mode in ("charges", "detect", "constructive") \
        else "all"
    tasks = [(emb.to_pg(g), mode) for g in graphs]
    workers = min(8, os.cpu_count() or 1)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_corpus_member, tasks))
    checks = sorted({k for r in results for k in r})
    failed = False
    rows = []
    for chk in checks:
        bad = sum(1 for r in results if not r.get(chk, True))
        rows.append({"check": chk, "graphs": len(results), "failures": bad,
                     "status": "PASS" if bad == 0 else "FAIL"})
        failed = failed or bad > 0
    if args.json:
        _emit(json.dumps(rows) + "\n", args.output)
    else:
        lines = [f"{r['check']:<14} {r['graphs']:>5} graphs  "
                 f"{r['failures']:>3} failures  {r['status']}" for r in rows]
        _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="psc", description="planar square coloring toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, inp=False):
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("-o", "--output", default=None)
        if inp:
            sp.add_argument("input", help="input .pg graph file")

    sp = sub.add_parser("gen", help="generate a graph")
    sp.add_argument("--family", required=True,
                    help="wegner|stacked|cycle|grid|k4|octahedron|icosahedron")
    sp.add_argument("--delta", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("color", help="color the square of a graph")
    sp.add_argument("--mode", default="constructive",
                    choices=["greedy", "dsatur", "constructive", "exact"])
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--timeout", type=float, default=60.0)
    common(sp, inp=True)
    sp.set_defaults(fn=cmd_color)

    sp = sub.add_parser("audit", help="discharging audit")
    common(sp, inp=True)
    sp.set_defaults(fn=cmd_audit)

    sp = sub.add_parser("detect", help="find reducible configurations")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--budget", type=int, default=None)
    common(sp, inp=True)
    sp.set_defaults(fn=cmd_detect)

    sp = sub.add_parser("verify", help="check a coloring JSON against a graph")
    common(sp, inp=True)
    sp.add_argument("coloring", help="coloring JSON file")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("corpus", help="generate a corpus and run checks")
    sp.add_argument("--mode", default="all",
                    help="charges|detect|constructive|all")
    sp.add_argument("--delta", type=int, default=None,
                    help="minimum Delta (<=6 selects the small regime)")
    sp.add_argument("--n", type=int, default=None, help="number of graphs")
    common(sp)
    sp.set_defaults(fn=cmd_corpus)
    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (PscError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
