"""Command-line front end.

Graphs travel between commands as edge lists on stdin/stdout, so for example
``stringlab generate sm10 | stringlab recognize`` works. Exit status is 0 for
a definitive answer, 2 when the answer is undetermined, and 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .families import REGISTRY, named
from .graph import (Graph, GraphError, density, format_edge_list, girth, has_k23_subgraph,
                    has_triangle, parse_edge_list, subdivide)
from .obstacles import (MinimalityReport, certify_minimal_obstacle, class_components,
                        format_tag, girth_bound_audit, hi_conditions, hi_near_miss, hi_witness_search)
from .planarity import is_planar
from .recognition import BUDGET_ENV, BudgetExceeded, Status, default_budget, recognize
from .representation import (StringRepresentation, build_representation, export_svg,
                             validate_representation)

EXIT_OK, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_graph(path: str | None) -> Graph:
    if path is None or path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text())


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


# -- subcommands -------------------------------------------------------------

def cmd_generate(args) -> int:
    g = named(args.family, *args.params)
    if args.subdivide:
        g = subdivide(g, args.subdivide)
    label = " ".join([args.family, *args.params])
    if args.subdivide:
        label += f", each edge subdivided {args.subdivide} time(s)"
    text = format_edge_list(g, comment=label)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = _read_graph(args.file)
    verdict = recognize(g, budget=_budget(args), cubic_only=True if args.cubic_only else None)
    out = verdict.to_dict()
    if args.represent:
        if verdict.status is Status.STRING:
            rep = build_representation(g, verdict.witness)
            export_svg(rep, args.represent, g)
            out["representation"] = args.represent
        else:
            print(f"no representation written: verdict is {verdict.status.value}", file=sys.stderr)
    if args.json:
        print(_dump(out))
    else:
        print(verdict.status.value)
        print(f"rule: {verdict.rule.value}")
        print(f"matchings examined: {verdict.matchings_examined}")
        if verdict.witness is not None:
            edges = " ".join(f"{u}-{v}" for u, v in verdict.witness) or "(empty)"
            print(f"witness: {edges}")
        if "representation" in out:
            print(f"representation: {out['representation']}")
    return EXIT_UNDETERMINED if verdict.status is Status.UNKNOWN else EXIT_OK


@dataclass
class BatchSummary:
    reports: list[tuple[str, MinimalityReport]]

    @property
    def obstacles(self) -> list[str]:
        return [name for name, r in self.reports if r.is_minimal_obstacle is True]

    @property
    def undetermined(self) -> list[str]:
        return [name for name, r in self.reports if r.is_minimal_obstacle is None]

    def to_dict(self) -> dict:
        return {"reports": {name: r.to_dict() for name, r in self.reports},
                "minimal_obstacles": self.obstacles, "undetermined": self.undetermined}

    def table(self) -> str:
        rows = [("file", "n", "m", "self", "minimal obstacle")]
        for name, r in self.reports:
            verdict = r.is_minimal_obstacle
            rows.append((name, str(r.n), str(r.m), r.self_verdict.status.value,
                         "undetermined" if verdict is None else ("yes" if verdict else "no")))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        lines.append(f"{len(self.obstacles)} minimal obstacle(s) among {len(self.reports)} file(s)")
        return "\n".join(lines)


def batch_certify(directory, budget: int | None = None) -> BatchSummary:
    """Certify every regular file in ``directory``, in filename order."""
    reports = []
    for path in sorted(Path(directory).iterdir(), key=lambda p: p.name):
        if not path.is_file() or path.name.startswith("."):
            continue
        g = parse_edge_list(path.read_text())
        reports.append((path.name, certify_minimal_obstacle(g, path.name, budget=budget)))
    return BatchSummary(reports)


def cmd_certify(args) -> int:
    budget = _budget(args)
    if args.path is not None and os.path.isdir(args.path):
        summary = batch_certify(args.path, budget)
        print(_dump(summary.to_dict()) if args.json else summary.table())
        return EXIT_UNDETERMINED if summary.undetermined else EXIT_OK
    g = _read_graph(args.path)
    name = "stdin" if args.path in (None, "-") else Path(args.path).name
    report = certify_minimal_obstacle(g, name, budget=budget)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        verdict = report.is_minimal_obstacle
        print(f"self: {report.self_verdict.status.value}")
        counts: dict[str, int] = {}
        for _, v in report.minor_results:
            counts[v.status.value] = counts.get(v.status.value, 0) + 1
        print("minors: " + (", ".join(f"{k} {counts[k]}" for k in sorted(counts)) or "none"))
        if report.undetermined_minors():
            print("undetermined: " + "; ".join(format_tag(t) for t in report.undetermined_minors()))
        print("minimal obstacle: " + ("undetermined" if verdict is None else ("yes" if verdict else "no")))
    return EXIT_UNDETERMINED if report.is_minimal_obstacle is None else EXIT_OK


def cmd_audit(args) -> int:
    g = _read_graph(args.file)
    audit = girth_bound_audit(g)
    if args.json:
        print(_dump(audit.to_dict()))
    else:
        for key, value in audit.to_dict().items():
            if key == "failures":
                value = ", ".join(value) or "none"
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_hi_search(args) -> int:
    inst = hi_witness_search(args.i)
    out: dict = {"i": args.i, "witness": None if inst is None else inst.to_dict()}
    if inst is None and args.i >= 2:
        miss = hi_near_miss(args.i, (args.i - 1, 1)) or hi_near_miss(args.i)
        if miss is not None:
            conds = hi_conditions(miss)
            out["near_miss"] = dict(miss.to_dict(), failed=[k for k, ok in sorted(conds.items()) if not ok],
                                    red_components=class_components(miss, "R"),
                                    blue_components=class_components(miss, "B"))
    if args.json:
        print(_dump(out))
    elif inst is not None:
        print(f"witness for i={args.i}: coloring {''.join(inst.coloring)}, extra edges "
              + (" ".join(f"{u}-{v}" for u, v in inst.extra_edges) or "none"))
    else:
        print(f"no witness for i={args.i}")
        if "near_miss" in out:
            nm = out["near_miss"]
            print(f"near miss: coloring {nm['coloring']}, extra edges "
                  + " ".join(f"{u}-{v}" for u, v in nm["extra_edges"])
                  + f"; fails condition(s) {', '.join(map(str, nm['failed']))}; "
                  f"red components {nm['red_components']}, blue components {nm['blue_components']}")
    return EXIT_OK


def cmd_props(args) -> int:
    g = _read_graph(args.file)
    gi = girth(g)
    d = density(g) if g.n else None
    out = {
        "n": g.n, "m": g.m, "girth": None if gi == float("inf") else gi,
        "density": None if d is None else f"{d.numerator}/{d.denominator}",
        "max_degree": g.max_degree(), "subcubic": g.is_subcubic(), "connected": g.is_connected(),
        "triangle": has_triangle(g), "k23_subgraph": has_k23_subgraph(g), "planar": is_planar(g),
    }
    if args.json:
        print(_dump(out))
    else:
        for key, value in out.items():
            print(f"{key}: {'infinite' if key == 'girth' and value is None else value}")
    return EXIT_OK


def cmd_render(args) -> int:
    rep = StringRepresentation.from_json(Path(args.representation).read_text())
    g = _read_graph(args.graph)
    result = validate_representation(rep, g)
    export_svg(rep, args.output, g)
    if result.ok:
        print(f"valid; {len(result.crossings)} crossing pair(s); wrote {args.output}")
        return EXIT_OK
    print(f"invalid: {result.first_violation}; wrote {args.output}")
    return EXIT_UNDETERMINED


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stringlab", description="Subcubic string-graph recognition and obstacle tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    families = ", ".join(f"{name} {' '.join(f.params)}".strip() for name, f in sorted(REGISTRY.items()))
    s = sub.add_parser("generate", help="write a named graph as an edge list",
                       description=f"Families: {families}.")
    s.add_argument("family", choices=sorted(REGISTRY))
    s.add_argument("params", nargs="*")
    s.add_argument("--subdivide", type=int, default=0, metavar="K", help="subdivide every edge K times")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    budget_help = f"cap on matchings examined (default: ${BUDGET_ENV} or 10^7)"
    s = sub.add_parser("recognize", help="decide whether a graph is a string graph")
    s.add_argument("file", nargs="?")
    s.add_argument("--cubic-only", action="store_true", help="search cubic matchings only")
    s.add_argument("--json", action="store_true")
    s.add_argument("--represent", metavar="SVG", help="write a string representation when one exists")
    s.add_argument("--budget", type=int, help=budget_help)
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("certify", help="check minimality among induced minors (file or directory)")
    s.add_argument("path", nargs="?")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget", type=int, help=budget_help)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("audit-girth", help="structural audit behind the girth bound")
    s.add_argument("file", nargs="?")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("hi-search", help="search the cycle colouring problem for necklaces")
    s.add_argument("i", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_hi_search)

    s = sub.add_parser("props", help="girth, density, triangle, K23 and planarity")
    s.add_argument("file", nargs="?")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("render", help="validate a representation JSON file and draw it")
    s.add_argument("representation")
    s.add_argument("--graph", required=True, help="edge list the representation should realize")
    s.add_argument("-o", "--output", required=True, metavar="SVG")
    s.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "budget", None) is not None and args.budget < 1:
            raise UsageError("--budget must be positive")
        return args.func(args)
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as exc:
        print(f"stringlab: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (GraphError, ValueError, OSError) as exc:
        print(f"stringlab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
