"""Command-line front end: exponents, counts, wedges, collections, verification.

Exit codes: 0 success, 2 usage error, 3 budget exceeded, 4 pattern not in the
class.  Semantic errors are reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classes import parse_class_spec
from .counting import CountMode, count
from .duplication import wedge_collection
from .errors import BudgetExceededError, PatternNotInClassError
from .exponent import dup_exponent, hom_exponent
from .graphs import Graph, from_edge_list, from_graph6, to_edge_list, to_graph6
from .lab import enumerate_class_members, verify_exponent
from .separations import collection_from_flaps, collection_from_json, enumerate_essential_collections

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NOT_IN_CLASS = 4


class UsageError(ValueError):
    pass


def _load_graph(path: str, fmt: str = "auto") -> Graph:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if fmt == "auto":
        fmt = "graph6" if p.suffix == ".g6" else "edgelist"
    try:
        if fmt == "graph6":
            return from_graph6(text)
        return from_edge_list(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {path} as {fmt}: {exc}") from exc


def _dump_graph(g: Graph, fmt: str) -> str:
    return to_graph6(g) + "\n" if fmt == "graph6" else to_edge_list(g)


def _mode(name: str) -> CountMode:
    name = {"hom": "homomorphism"}.get(name, name)
    try:
        return CountMode(name)
    except ValueError as exc:
        raise UsageError(f"unknown mode {name!r}") from exc


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"environment variable {name} must be an integer") from exc


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="homcount")
    top.add_argument("--budget", type=int, default=None, help="counting/search node budget")
    top.add_argument("--k-max", type=int, default=None, help="generic duplicability scan depth")
    top.add_argument("--jobs", type=int, default=None, help="worker processes for brute force")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponent", help="predicted growth exponent for a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--class", dest="class_spec", required=True)
    p.add_argument("--mode", default="subgraph", choices=["subgraph", "induced", "hom"])
    p.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist"])

    p = sub.add_parser("count", help="exact count of a pattern in a host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--mode", default="subgraph",
                   choices=["subgraph", "induced", "hom", "homomorphism"])
    p.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist"])

    p = sub.add_parser("wedge", help="build the wedge of a pattern over a collection")
    p.add_argument("--pattern", required=True)
    p.add_argument("--collection", required=True,
                   help="JSON text or file: [[flap]...] or {host,flaps}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist"])
    p.add_argument("--out-format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("collections", help="enumerate essential independent collections")
    p.add_argument("--pattern", required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist"])

    p = sub.add_parser("verify", help="cross-validate a predicted exponent")
    p.add_argument("--pattern", default=None)
    p.add_argument("--class", dest="class_spec", default=None)
    p.add_argument("--config", default=None, help="JSON config file")
    p.add_argument("--mode", default=None, choices=["subgraph", "induced", "hom"])
    p.add_argument("--n-lo", type=int, default=None)
    p.add_argument("--n-hi", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--ex-cap", type=int, default=None)
    p.add_argument("--csv", default=None, help="write the construction series as CSV")
    p.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist"])

    p = sub.add_parser("enumerate", help="stream class members as graph6")
    p.add_argument("--class", dest="class_spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    return top


def _cmd_exponent(args, budget, k_max) -> int:
    g = _load_graph(args.pattern, args.format)
    cls = parse_class_spec(args.class_spec)
    if args.mode == "hom":
        rep = hom_exponent(cls, g, k_max=k_max)
    else:
        rep = dup_exponent(cls, g, args.mode, k_max=k_max)
    print(json.dumps(rep.to_json(), sort_keys=True))
    return EXIT_OK


def _cmd_count(args, budget, k_max) -> int:
    h = _load_graph(args.pattern, args.format)
    g = _load_graph(args.host, args.format)
    print(count(h, g, _mode(args.mode), budget=budget))
    return EXIT_OK


def _parse_collection_arg(raw: str, pattern: Graph):
    text = raw.strip()
    if not (text.startswith("[") or text.startswith("{")):
        try:
            text = Path(raw).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read collection {raw!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"collection is not valid JSON: {exc}") from exc
    if isinstance(data, list):
        return collection_from_flaps(pattern, [frozenset(f) for f in data])
    return collection_from_json(data)


def _cmd_wedge(args, budget, k_max) -> int:
    g = _load_graph(args.pattern, args.format)
    coll = _parse_collection_arg(args.collection, g)
    if coll.host != g:
        raise UsageError("collection host does not match the pattern graph")
    if args.k < 1:
        raise UsageError("--k must be a positive integer")
    w = wedge_collection(g, coll, args.k)
    out_fmt = args.out_format
    if args.out and args.out.endswith(".el"):
        out_fmt = "edgelist"
    payload = _dump_graph(w.graph, out_fmt)
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_collections(args, budget, k_max) -> int:
    g = _load_graph(args.pattern, args.format)
    colls = sorted(
        enumerate_essential_collections(g, args.max_order),
        key=lambda c: (-c.size, c.total_order, c.sort_key()),
    )
    out = {
        "pattern": {"n": g.n, "edges": [list(e) for e in g.edges()]},
        "max_order": args.max_order,
        "collections": [
            {
                "flaps": [sorted(f) for f in c.flaps()],
                "orders": [m.order for m in c.members],
            }
            for c in colls
        ],
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_verify(args, budget, k_max, jobs) -> int:
    config = {}
    if args.config:
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}") from exc
    pattern_path = args.pattern or config.get("pattern")
    class_spec = args.class_spec or config.get("class")
    if not pattern_path or not class_spec:
        raise UsageError("verify needs --pattern and --class (flags or config)")
    mode = _mode(args.mode or config.get("mode", "subgraph"))
    n_range = config.get("n_range", [10, 60])
    n_lo = args.n_lo if args.n_lo is not None else n_range[0]
    n_hi = args.n_hi if args.n_hi is not None else n_range[1]
    tol = args.tolerance if args.tolerance is not None else config.get("tolerance", 0.2)
    ex_cap = args.ex_cap if args.ex_cap is not None else config.get("ex_cap", 7)
    k_range = config.get("k_range")
    g = _load_graph(pattern_path, args.format)
    cls = parse_class_spec(class_spec)
    rep = verify_exponent(
        g,
        cls,
        mode,
        n_window=(n_lo, n_hi),
        slope_tol=tol,
        ex_cap=ex_cap,
        k_range=k_range,
        k_max=k_max,
        budget=budget,
        jobs=jobs,
    )
    if args.csv:
        rows = ["n,count"] + [f"{n},{c}" for n, c in rep.get("slope_points", [])]
        Path(args.csv).write_text("\n".join(rows) + "\n")
    print(json.dumps(rep, sort_keys=True))
    return EXIT_OK


def _cmd_enumerate(args, budget, k_max) -> int:
    cls = parse_class_spec(args.class_spec)
    kwargs = {} if args.cap is None else {"cap": args.cap}
    for g in enumerate_class_members(cls, args.n, **kwargs):
        print(to_graph6(g))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        budget = args.budget if args.budget is not None else _env_int("HOMCOUNT_BUDGET")
        k_max = args.k_max if args.k_max is not None else _env_int("HOMCOUNT_KMAX")
        jobs = args.jobs if args.jobs is not None else (_env_int("HOMCOUNT_JOBS") or 1)
        if args.command == "exponent":
            return _cmd_exponent(args, budget, k_max)
        if args.command == "count":
            return _cmd_count(args, budget, k_max)
        if args.command == "wedge":
            return _cmd_wedge(args, budget, k_max)
        if args.command == "collections":
            return _cmd_collections(args, budget, k_max)
        if args.command == "verify":
            return _cmd_verify(args, budget, k_max, jobs)
        if args.command == "enumerate":
            return _cmd_enumerate(args, budget, k_max)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        _emit_error("usage", exc)
        return EXIT_USAGE
    except PatternNotInClassError as exc:
        _emit_error("pattern_not_in_class", exc)
        return EXIT_NOT_IN_CLASS
    except BudgetExceededError as exc:
        _emit_error("budget_exceeded", exc)
        return EXIT_BUDGET
    except ValueError as exc:
        _emit_error("usage", exc)
        return EXIT_USAGE


def _emit_error(kind: str, exc: Exception) -> None:
    print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stderr)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
