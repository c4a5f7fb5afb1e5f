"""Command-line interface: ``disticolor {colour,verify,dindex,gen,corpus}``.

Exit codes for ``colour``: 0 verified colouring, 2 exception graph, 1 any
other failure. ``verify`` exits 0 iff the colouring is distinguishing.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .corpus import regular_corpus
from .engine import EngineError, ExceptionGraph, distinguishing_two_colouring
from .formats import ColouringFileError, dumps, format_colouring, parse_colouring, render_report, report_dict
from .graph import FAMILIES, FamilySpec, GraphError, generate, parse_graph6, regular_degree, write_graph6
from .oracle import BudgetExceeded, UndefinedIndex, distinguishing_index, find_distinguishing_colouring
from .symmetry import GroupTooLarge, default_cap, format_cycles, preserved_automorphism

log = logging.getLogger("disticolor")


def _read_text(path):
    with open(path) as fh:
        return fh.read()


def _load_graph(args):
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    text = _read_text(args.infile)
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("graph6 "):
            line = line.split(None, 1)[1]
        return parse_graph6(line)
    raise GraphError(f"no graph in {args.infile}")


def _cap(args):
    return args.aut_cap if getattr(args, "aut_cap", None) else default_cap()


def cmd_colour(args) -> int:
    try:
        g = _load_graph(args)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        rep = distinguishing_two_colouring(g, cap=_cap(args), root=args.root)
    except ExceptionGraph as exc:
        print(f"exception graph: {exc}", file=sys.stderr)
        return 2
    except (EngineError, GroupTooLarge, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    d = report_dict(rep, g)
    text = format_colouring(rep.colouring)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(dumps(d) + "\n")
    else:
        sys.stdout.write(render_report(d))
        if not args.out:
            sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        g = _load_graph(args)
        c = parse_colouring(_read_text(args.colouring), g)
    except (OSError, GraphError, ColouringFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    witness = preserved_automorphism(g, c)
    if witness is None:
        print("distinguishing")
        return 0
    print(f"not distinguishing: preserved automorphism {format_cycles(witness)}")
    return 1


def cmd_dindex(args) -> int:
    try:
        g = _load_graph(args)
        k = distinguishing_index(g, args.max_k, cap=_cap(args))
    except UndefinedIndex as exc:
        msg = "undefined for K2" if "K2" in str(exc) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 1
    except (OSError, GraphError, BudgetExceeded, GroupTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(k)
    return 0


def cmd_gen(args) -> int:
    try:
        g = generate(FamilySpec(args.family, tuple(args.params), args.seed))
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(write_graph6(g))
    return 0


def corpus_rows(max_n: int, cap: int | None = None, oracle: bool = False) -> list[dict]:
    rows = []
    for g in regular_corpus(max_n):
        row = {"graph6": write_graph6(g), "n": g.n, "degree": regular_degree(g)}
        try:
            rep = distinguishing_two_colouring(g, cap=cap)
            row.update(method=rep.method, two_colourable=True, verified=rep.verified,
                       fallback=rep.method == "search-fallback")
        except ExceptionGraph:
            row.update(method="exception", two_colourable=False, verified=True, fallback=False)
        except (EngineError, GroupTooLarge, BudgetExceeded) as exc:
            row.update(method="failed", two_colourable=None, verified=False, fallback=False,
                       error=str(exc))
        if oracle:
            try:
                found = find_distinguishing_colouring(g, 2, cap=cap) is not None
                row["oracle_two_colourable"] = found
            except (BudgetExceeded, GroupTooLarge) as exc:
                row["oracle_two_colourable"] = None
                row["oracle_error"] = str(exc)
        rows.append(row)
    return rows


def cmd_corpus(args) -> int:
    if not 3 <= args.max_n <= 10:
        print("error: --max-n must lie in 3..10", file=sys.stderr)
        return 1
    rows = corpus_rows(args.max_n, _cap(args), args.oracle)
    above = [r["graph6"] for r in rows if r["two_colourable"] is False]
    summary = {"graphs": len(rows), "index_above_two": above,
               "fallbacks": sum(r["fallback"] for r in rows),
               "failures": sum(r["method"] == "failed" for r in rows)}
    if args.json:
        sys.stdout.write(dumps({"rows": rows, "summary": summary}) + "\n")
    else:
        cols = ["graph6", "n", "degree", "method", "two_colourable", "verified"]
        if args.oracle:
            cols.append("oracle_two_colourable")
        print("\t".join(cols))
        for r in rows:
            print("\t".join(str(r.get(c)) for c in cols))
        print(f"# {summary['graphs']} graphs; D' > 2: {' '.join(above) or 'none'}; "
              f"fallbacks: {summary['fallbacks']}; failures: {summary['failures']}")
    return 0 if summary["failures"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="disticolor",
                                description="Distinguishing 2-edge-colourings of regular graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, allow_g6=True):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--in", dest="infile", help="file whose first line is a graph6 string")
        if allow_g6:
            grp.add_argument("--g6", help="graph6 string")

    sp = sub.add_parser("colour", aliases=["color"], help="construct a distinguishing 2-colouring")
    graph_input(sp)
    sp.add_argument("--root", type=int)
    sp.add_argument("--aut-cap", type=int)
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.add_argument("--out", help="write the colouring file here")
    sp.set_defaults(func=cmd_colour)

    sp = sub.add_parser("verify", help="check that a colouring is distinguishing")
    graph_input(sp)
    sp.add_argument("--colouring", "--coloring", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dindex", help="distinguishing index by exhaustive search")
    graph_input(sp)
    sp.add_argument("--max-k", type=int, default=4)
    sp.add_argument("--aut-cap", type=int)
    sp.set_defaults(func=cmd_dindex)

    sp = sub.add_parser("gen", help="print a family member as graph6")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("params", type=int, nargs="*")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("corpus", help="census over all connected regular graphs up to --max-n")
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--aut-cap", type=int)
    sp.add_argument("--oracle", action="store_true", help="also run the exhaustive 2-colouring search")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
