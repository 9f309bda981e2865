# hommodels/cli.py
# -----------------------------------------------------------------------------
# Command-line front end.
#
#   hom           build Hom(G,H) or Hom_S(G,H); print counts and cell f-vector
#   homology      homology of a face-list file or of Hom(G,H) / Hom_S(G,H)
#   subdivide     Int P, Int Int P, chain posets of a small poset
#   neighborhood  the N / B / D triple posets over a face poset
#   verify        one verification scenario
#   report-all    the acceptance battery
#
# Exit status: 0 success, 1 a check failed, 2 usage error. Reports go to
# stdout; logs and progress bars go to stderr.
# -----------------------------------------------------------------------------
from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import reports
from .complex import f_vector
from .config import DEFAULT_BUDGETS, REPORT_SCHEMA_VERSION, Budgets
from .errors import BudgetExceeded, DomainError, FormatError
from .formats import format_covers, parse_graph_literal, parse_poset_literal, read_edge_list, read_face_list
from .graph import Graph
from .homcomplex import cellular_chain_complex, multihoms, restricted_cells
from .homology import boundary_matrices, homology_from_chain_complex, homology_summary
from .logs import setup_logging
from .models import FVector, MultiHom
from .poset import Poset, chain32_poset, interval_poset, iterated_interval_poset, order_complex
from .verify import SCENARIOS, acceptance_battery, run_scenario, run_suite

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2

SUBDIVISIONS = ("int", "intint", "chain32")


class UsageError(Exception):
    pass


# ======================
# Parser
# ======================

def _common(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    ap.add_argument("--threads", type=int, default=None, help="worker threads (results do not depend on it)")
    ap.add_argument("--max-n", type=int, default=None, help="largest n for integral Stiefel scenarios")
    ap.add_argument("--stretch-n", type=int, default=None, help="largest n for the mod-2 stretch")
    ap.add_argument("--max-poset-size", type=int, default=None)
    ap.add_argument("--max-order-faces", type=int, default=None)
    ap.add_argument("--max-matrix-columns", type=int, default=None)
    ap.add_argument("--timings", action="store_true", help="include wall time in reports")
    noise = ap.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="info logs and progress bars on stderr")
    noise.add_argument("-q", "--quiet", action="store_true", help="errors only")


def _graph_args(ap: argparse.ArgumentParser, flag: str, what: str) -> None:
    ap.add_argument(f"--{flag}", default=None, help=f"{what} as a literal, e.g. cycle:5, complete:4, path:2")
    ap.add_argument(f"--{flag}-file", default=None, help=f"{what} as an edge-list file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hommodels", description="Small models of graph-colouring manifolds")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="build Hom(G,H) or Hom_S(G,H)")
    _graph_args(p, "g", "source graph G")
    _graph_args(p, "h", "target graph H")
    p.add_argument("--S", dest="s", default=None, help="vertices to restrict away, e.g. 2,4")
    p.add_argument("--method", choices=("auto", "image", "criterion"), default="auto")
    p.add_argument("--covers", action="store_true", help="list the cover relations of the cell poset")
    _common(p)

    p = sub.add_parser("homology", help="homology of a face list or of Hom(G,H)")
    p.add_argument("--faces", default=None, help="face-list file")
    _graph_args(p, "g", "source graph G")
    _graph_args(p, "h", "target graph H")
    p.add_argument("--S", dest="s", default=None)
    p.add_argument("--cellular", action="store_true", help="cellular chains instead of the order complex")
    p.add_argument("--mod2-only", action="store_true")
    _common(p)

    p = sub.add_parser("subdivide", help="interval and chain posets of P")
    p.add_argument("--poset", default="boundary:2", help="chain:k, antichain:k, boundary:k or simplex:k")
    p.add_argument("--kind", choices=SUBDIVISIONS, default="int")
    p.add_argument("--homology", action="store_true", help="also compute homology of the order complex")
    p.add_argument("--covers", action="store_true")
    _common(p)

    p = sub.add_parser("neighborhood", help="N/B/D posets over a face poset")
    p.add_argument("--poset", default="boundary:2")
    p.add_argument("--no-links", action="store_true", help="skip the vertex-link scan")
    _common(p)

    p = sub.add_parser("verify", help="run one verification scenario")
    p.add_argument("scenario", choices=SCENARIOS)
    p.add_argument("--n", type=int, default=None)
    _graph_args(p, "g", "graph G")
    p.add_argument("--S", dest="s", default=None)
    p.add_argument("--poset", default=None)
    p.add_argument("--mod2-only", action="store_true")
    p.add_argument("--no-links", action="store_true")
    _common(p)

    p = sub.add_parser("report-all", help="run the acceptance battery")
    _common(p)
    return ap


# ======================
# Argument helpers
# ======================

def _budgets(args: argparse.Namespace) -> Budgets:
    for flag in ("threads", "max_n", "stretch_n", "max_poset_size", "max_order_faces", "max_matrix_columns"):
        value = getattr(args, flag)
        if value is not None and value < (1 if flag == "threads" else 0):
            raise UsageError(f"--{flag.replace('_', '-')} must be positive, got {value}")
    return DEFAULT_BUDGETS.with_overrides(
        threads=args.threads,
        max_n=args.max_n,
        stretch_n=args.stretch_n,
        max_poset_size=args.max_poset_size,
        max_order_faces=args.max_order_faces,
        max_matrix_columns=args.max_matrix_columns,
    )


def _graph(args: argparse.Namespace, flag: str, required: bool = True) -> Optional[Graph]:
    literal = getattr(args, flag)
    path = getattr(args, f"{flag}_file")
    if literal and path:
        raise UsageError(f"give either --{flag} or --{flag}-file, not both")
    if path:
        return read_edge_list(path)
    if literal:
        return parse_graph_literal(literal)
    if required:
        raise UsageError(f"--{flag} or --{flag}-file is required")
    return None


def _labels(text: Optional[str]) -> Optional[tuple]:
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--S expects comma-separated integers, got {text!r}") from None


def _emit(args: argparse.Namespace, text: str, result: Dict[str, Any]) -> None:
    if args.format == "json":
        sys.stdout.write(reports.dumps({"schema_version": REPORT_SCHEMA_VERSION, "command": args.command, "result": result}))
    else:
        sys.stdout.write(text)


def _cells(args: argparse.Namespace, budgets: Budgets) -> tuple:
    g, h = _graph(args, "g"), _graph(args, "h")
    s = _labels(args.s)
    if s:
        cells = restricted_cells(g, h, s, getattr(args, "method", "auto"), budgets.threads, budgets.max_poset_size)
        return cells, f"Hom_{{{','.join(map(str, s))}}}({g.label()},{h.label()})"
    return multihoms(g, h, budgets.threads, budgets.max_poset_size), f"Hom({g.label()},{h.label()})"


def _cell_counts(cells: Sequence[MultiHom]) -> FVector:
    top = max((c.dim for c in cells), default=-1)
    counts = [0] * (top + 1)
    for c in cells:
        counts[c.dim] += 1
    return FVector(tuple(counts))


# ======================
# Commands
# ======================

def cmd_hom(args: argparse.Namespace, budgets: Budgets) -> int:
    cells, name = _cells(args, budgets)
    fv = _cell_counts(cells)
    result: Dict[str, Any] = {"complex": name, "cells": len(cells), "f_vector": list(fv.counts)}
    if not cells:
        text = f"{name}: empty complex\n"
    else:
        text = f"{name}: {len(cells)} cells, dim {fv.dim}\n" + fv.to_frame().to_string(index=False) + "\n"
    if args.covers and cells:
        covers = format_covers(Poset.from_masks(cells, [c.key() for c in cells], name=name))
        result["covers"] = covers.splitlines()
        text += covers
    _emit(args, text, result)
    return EXIT_OK


def cmd_homology(args: argparse.Namespace, budgets: Budgets) -> int:
    if args.faces:
        if args.g or args.g_file or args.h or args.h_file:
            raise UsageError("give either --faces or a graph pair, not both")
        k = read_face_list(args.faces)
        name = args.faces
        h = homology_summary(k, budgets.threads, budgets.max_matrix_columns, args.mod2_only)
        method = "simplicial"
    else:
        cells, name = _cells(args, budgets)
        if args.cellular:
            cc = cellular_chain_complex(cells)
            method = "cellular"
        else:
            cc = boundary_matrices(
                order_complex(Poset.from_masks(cells, [c.key() for c in cells]), budgets.max_order_faces)
            )
            method = "order complex"
        h = homology_from_chain_complex(cc, budgets.threads, budgets.max_matrix_columns, args.mod2_only)
    text = reports.homology_text(f"{name} ({method})", h) + "\n"
    _emit(args, text, {"complex": name, "method": method, "homology": h.to_dict()})
    return EXIT_OK


def cmd_subdivide(args: argparse.Namespace, budgets: Budgets) -> int:
    p = parse_poset_literal(args.poset)
    build = {"int": interval_poset, "intint": lambda q, m: interval_poset(interval_poset(q, m), m), "chain32": chain32_poset}
    q = build[args.kind](p, budgets.max_poset_size)
    k = order_complex(q, budgets.max_order_faces)
    fv = f_vector(k)
    result: Dict[str, Any] = {"poset": args.poset, "kind": args.kind, "elements": len(q), "f_vector": list(fv.counts)}
    text = f"{q.label()}: {len(q)} elements\norder complex f-vector {fv}\n"
    if args.kind == "intint":
        chains = iterated_interval_poset(p, budgets.max_poset_size)
        result["four_chains"] = len(chains)
        text += f"4-chains of {p.label()}: {len(chains)}\n"
    if args.homology:
        h = homology_summary(k, budgets.threads, budgets.max_matrix_columns)
        result["homology"] = h.to_dict()
        text += reports.homology_text(q.label(), h) + "\n"
    if args.covers:
        covers = format_covers(q)
        result["covers"] = covers.splitlines()
        text += covers
    _emit(args, text, result)
    return EXIT_OK


def _report_command(args: argparse.Namespace, found: List) -> int:
    if args.format == "json":
        sys.stdout.write(reports.render_json(found, args.timings))
    else:
        sys.stdout.write(reports.render_text(found, args.timings))
    return reports.exit_code(found)


def cmd_neighborhood(args: argparse.Namespace, budgets: Budgets) -> int:
    report = run_scenario("neighborhood", {"poset": args.poset, "links": not args.no_links}, budgets)
    return _report_command(args, [report])


def cmd_verify(args: argparse.Namespace, budgets: Budgets) -> int:
    params: Dict[str, Any] = {"mod2_only": args.mod2_only, "links": not args.no_links}
    if args.n is not None:
        params["n"] = args.n
    g = _graph(args, "g", required=False)
    if g is not None:
        params["graph"] = g
    s = _labels(args.s)
    if s is not None:
        params["S"] = s
    if args.poset:
        params["poset"] = args.poset
    return _report_command(args, [run_scenario(args.scenario, params, budgets)])


def cmd_report_all(args: argparse.Namespace, budgets: Budgets) -> int:
    return _report_command(args, run_suite(acceptance_battery(budgets), budgets))


COMMANDS = {
    "hom": cmd_hom,
    "homology": cmd_homology,
    "subdivide": cmd_subdivide,
    "neighborhood": cmd_neighborhood,
    "verify": cmd_verify,
    "report-all": cmd_report_all,
}


def run_with_args(args: argparse.Namespace) -> int:
    level = logging.INFO if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    setup_logging(level, progress=args.verbose)
    try:
        budgets = _budgets(args)
        return COMMANDS[args.command](args, budgets)
    except (UsageError, DomainError, FormatError) as exc:
        print(f"hommodels {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"hommodels {args.command}: {exc}; raise the budget to run this", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hommodels {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    return run_with_args(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
