"""Command-line front end.

Exit codes: 0 success or labeling found, 1 certified negative or invalid
labeling, 2 usage error, 3 search budget exhausted without an answer.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as C
from . import skolem as S
from .catalog import CatalogError, load_catalog
from .feasibility import check_all, first_infeasible
from .graph import GraphError, LabelingStructureError, family_from_spec, verify_labeling
from .io import FormatError, dumps_document, format_edge_list, labeling_document, load
from .search import SearchConfig, solve

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
THREADS_ENV = "KSG_THREADS"


class UsageError(Exception):
    pass


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        cfg = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    return cfg


def _setting(args, cfg: dict, name: str, default=None):
    """Flag, then config file, then environment (threads only), then default."""
    val = getattr(args, name, None)
    if val is not None:
        return val
    if name in cfg:
        return cfg[name]
    if name == "threads" and os.environ.get(THREADS_ENV):
        try:
            return int(os.environ[THREADS_ENV])
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer") from None
    return default


def _graph_arg(spec: str):
    """A graph from a file path or a family shorthand."""
    if os.path.exists(spec):
        g, _ = load(spec)
        return g
    return family_from_spec(spec)


def _emit(doc_text: str, out: str | None):
    if out:
        Path(out).write_text(doc_text)
    else:
        sys.stdout.write(doc_text)


def _labeling_text(g, lab, fmt: str, family=None, params=None, **extra) -> str:
    if fmt == "edgelist":
        return format_edge_list(g, lab)
    return dumps_document(labeling_document(g, lab, family, params, **extra))


# -- subcommands -------------------------------------------------------------

def cmd_verify(args, cfg) -> int:
    g, lab = load(args.infile)
    if lab is None:
        raise UsageError(f"{args.infile} holds no labeling")
    try:
        res = verify_labeling(g, lab)
    except LabelingStructureError as exc:
        print(f"invalid: {exc}")
        return EXIT_NEGATIVE
    if res:
        print("valid")
        return EXIT_OK
    print("invalid")
    for v in res.violations:
        print(f"  {v}")
    return EXIT_NEGATIVE


def cmd_construct(args, cfg) -> int:
    params = [int(x) for x in args.params]
    lg = C.construct(args.family, *params)
    if args.format == "edgelist":
        text = format_edge_list(lg.graph, lg.labeling)
    else:
        doc = labeling_document(lg.graph, lg.labeling)
        doc["construction"] = args.family
        doc["construction_params"] = params
        text = dumps_document(doc)
    _emit(text, args.out)
    return EXIT_OK


def cmd_search(args, cfg) -> int:
    g = _graph_arg(args.graph)
    mode = "enumerate" if args.enumerate else ("count" if args.count_all else "first")
    conf = SearchConfig(
        k=args.k,
        mode=mode,
        symmetry=_setting(args, cfg, "symmetry", "none"),
        node_limit=int(_setting(args, cfg, "node_limit", 10**9)),
        time_limit=_setting(args, cfg, "time_limit", None),
        parity=args.parity,
        prune=not args.no_prune,
        max_witnesses=args.witnesses,
        threads=int(_setting(args, cfg, "threads", 1)),
    )
    rep = solve(g, conf)
    print(f"graph: {g.name or 'G'} (p={g.p}, q={g.q})")
    print(f"k: {args.k}")
    print(f"status: {rep.status}")
    print(f"count: {rep.count}")
    print(f"nodes: {rep.nodes}")
    print(f"elapsed: {rep.elapsed:.3f}s")
    if args.show:
        for i, w in enumerate(rep.witnesses):
            print(f"witness {i}: vertices {list(w.vertex_labels)} edges {list(w.edge_labels)}")
    if args.out and rep.witnesses:
        docs = [labeling_document(g, w) for w in rep.witnesses]
        Path(args.out).write_text(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n")
    if rep.count:
        return EXIT_OK
    return EXIT_BUDGET if rep.status == "budget-hit" else EXIT_NEGATIVE


def cmd_skolem(args, cfg) -> int:
    if args.n < 1 or args.k < 1:
        raise UsageError("n and k must be >= 1")
    if args.count_all:
        rep = S.search_k_skolem(args.n, args.k, count_all=True,
                                node_limit=_setting(args, cfg, "node_limit", None))
        print(f"status: {rep.status}")
        print(f"count: {rep.count}")
        print(f"nodes: {rep.nodes}")
        if rep.count:
            return EXIT_OK
        return EXIT_BUDGET if rep.status == "budget-hit" else EXIT_NEGATIVE
    verdict = S.k_skolem_feasible(args.n, args.k)
    if args.k == 1:
        seq = S.skolem_classic(args.n)
    elif args.k == 2:
        seq = S.two_skolem(args.n) if args.n <= S.MAX_TWO_SKOLEM_N else S.find_k_skolem(args.n, 2)
    elif args.n == 2 * args.k - 1:
        seq = S.k_skolem_length_2k_minus_1(args.k)
    else:
        seq = S.find_k_skolem(args.n, args.k)
    if seq is None:
        reason = str(verdict) if verdict.infeasible else "exhaustive search found none"
        print(f"none: no {args.k}-Skolem sequence of length {args.n} ({reason})")
        return EXIT_NEGATIVE
    if args.nk2:
        g, lab = S.skolem_to_nk2_labeling(seq)
        _emit(_labeling_text(g, lab, args.format, "nK2", [g.q]), args.out)
    else:
        _emit("\n".join(seq.lines()) + "\n", args.out)
    return EXIT_OK


CENSUS_LONG_R = 14


def cmd_census(args, cfg) -> int:
    if args.r < 4:
        raise UsageError("census needs r >= 4")
    if args.r > CENSUS_LONG_R and not args.long_ok and args.limit is None:
        raise UsageError(f"a full census for r > {CENSUS_LONG_R} can take hours; pass --long-ok")
    rep = S.pairing_census(args.r, limit=args.limit, max_witnesses=args.witnesses)
    if args.count_only:
        print(rep.count)
    else:
        print(f"r: {args.r}")
        print(f"status: {rep.status}")
        print(f"count: {rep.count}")
        print(f"nodes: {rep.nodes}")
        for w in rep.witnesses:
            print("pairing: " + " ".join(f"({a},{b})" for a, b in w))
    return EXIT_OK if rep.count else EXIT_NEGATIVE


def cmd_feasible(args, cfg) -> int:
    g = _graph_arg(args.graph)
    verdicts = check_all(g, args.k, args.mode)
    final = first_infeasible(verdicts, {"graph": g.name, "k": args.k})
    print(f"  rules applied: {len(verdicts)}")
    for v in verdicts:
        if v.infeasible:
            print(f"  {v.rule}: {v.reason}")
    print(final.status)
    return EXIT_NEGATIVE if final.infeasible else EXIT_OK


def cmd_reproduce(args, cfg) -> int:
    from .reproduce import DEFAULT_TARGETS, TARGETS, format_rows, run_target

    if args.list or not args.targets:
        for name, (_, desc) in TARGETS.items():
            print(f"{name:<22} {desc}")
        return EXIT_OK if args.list else EXIT_USAGE
    names = DEFAULT_TARGETS if args.targets == ["all"] else args.targets
    unknown = [t for t in names if t not in TARGETS]
    if unknown:
        raise UsageError(f"unknown target(s): {', '.join(unknown)}")
    failed = inconclusive = 0
    for name in names:
        rows, elapsed = run_target(name)
        print(format_rows(name, rows, elapsed))
        failed += sum(r.status == "fail" for r in rows)
        inconclusive += sum(r.status == "inconclusive" for r in rows)
    print(f"summary: {failed} failed, {inconclusive} inconclusive")
    if failed:
        return EXIT_NEGATIVE
    return EXIT_BUDGET if inconclusive else EXIT_OK


def cmd_catalog(args, cfg) -> int:
    cat = load_catalog()
    if args.show:
        if args.show not in cat:
            raise UsageError(f"no catalog entry {args.show!r}")
        e = cat[args.show]
        if e.kind == "labeling":
            _emit(_labeling_text(e.graph, e.labeling, args.format, e.family, e.params,
                                 provenance=e.provenance), args.out)
        else:
            doc = {"id": e.id, "kind": e.kind, "pairs": [list(p) for p in e.pairs], "provenance": e.provenance}
            if e.corrected:
                doc["printed"] = [list(p) for p in e.printed]
                doc["note"] = e.note
            _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return EXIT_OK
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        for e in cat.labelings():
            suffix = ".lab" if args.format == "edgelist" else ".json"
            (out / f"{e.id}{suffix}").write_text(
                _labeling_text(e.graph, e.labeling, args.format, e.family, e.params, provenance=e.provenance))
        print(f"exported {len(cat.labelings())} labelings to {out}")
        return EXIT_OK
    for e in cat:
        flag = " [corrected]" if e.corrected else ""
        print(f"{e.id:<26} {e.kind:<9} {e.provenance}{flag}")
    print(f"{len(cat)} entries, all verified")
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ksgraceful", description="k-super graceful labeling toolkit")
    ap.add_argument("--config", help="JSON file with defaults (threads, node_limit, time_limit, symmetry)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a labeling file")
    p.add_argument("--in", dest="infile", required=True, help="JSON labeling document or edge-list file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="run an explicit construction")
    p.add_argument("--family", required=True, choices=sorted(C.CONSTRUCTIONS))
    p.add_argument("--params", nargs="*", default=[], type=int)
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive search for k-super graceful labelings")
    p.add_argument("--graph", "--family", dest="graph", required=True, help="file or family such as 2C3, K(3,4)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count-all", action="store_true")
    p.add_argument("--enumerate", action="store_true", help="count and keep every witness")
    p.add_argument("--witnesses", type=int, default=1)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--threads", type=int)
    p.add_argument("--symmetry", choices=("none", "components", "twins", "all"))
    p.add_argument("--parity", choices=("all-even-edges", "all-odd-vertices"))
    p.add_argument("--node-limit", dest="node_limit", type=int)
    p.add_argument("--time-limit", dest="time_limit", type=float)
    p.add_argument("--show", action="store_true", help="print witnesses")
    p.add_argument("--out", help="write witness labeling document(s) here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("skolem", help="k-Skolem sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--count-all", action="store_true")
    p.add_argument("--node-limit", dest="node_limit", type=int)
    p.add_argument("--nk2", action="store_true", help="emit the nK2 labeling instead of pairs")
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_skolem)

    p = sub.add_parser("census", help="count 2-Skolem pairings for r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--witnesses", type=int, default=1)
    p.add_argument("--long-ok", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("feasible", help="run the necessary-condition filters")
    p.add_argument("--graph", "--family", dest="graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("plain", "all-odd-vertices", "all-odd-edges", "all-even-edges"),
                   default="plain")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("reproduce", help="run scripted experiments")
    p.add_argument("targets", nargs="*", help="target names or 'all'")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("catalog", help="list, show or export catalog fixtures")
    p.add_argument("--show")
    p.add_argument("--export")
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0; argparse errors exit 2
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = _load_config(args.config)
        return args.func(args, cfg)
    except CatalogError as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (UsageError, GraphError, FormatError, C.ConstructionError, S.SkolemError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
