"""Command-line interface: ``turaev analyze | braid3 | trees``.

Exit codes: 0 success, 1 input error, 2 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import braid3
from .diagram import Diagram, braid_closure, parse_braid, parse_pd
from .errors import ConsistencyError, DiagramError, TreeCapExceeded
from .report import analyze, braid3_report, dumps, trivial_report
from .tait import build_tait
from .trees import DEFAULT_CAP, closed_form_extremes, delta_distribution, kirchhoff_tree_count


def _read_input(args: argparse.Namespace) -> tuple[Diagram | None, str]:
    if args.pd is not None and args.braid is not None:
        raise DiagramError("give either --pd or --braid, not both")
    if args.pd is not None:
        text = sys.stdin.read() if args.pd == "-" else args.pd
        if not text.strip():
            return None, ""
        return parse_pd(text), text.strip()
    if args.braid is not None:
        word = parse_braid(args.braid, args.strands)
        return braid_closure(word), str(word)
    raise DiagramError("an input diagram is required (--pd or --braid)")


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _half(v: int) -> str:
    return str(v // 2) if v % 2 == 0 else f"{v}/2"


def cmd_analyze(args: argparse.Namespace) -> int:
    diagram, text = _read_input(args)
    if diagram is None:
        report = trivial_report(text)
    else:
        report = analyze(
            diagram,
            two_tau=None if args.tau is None else 2 * args.tau,
            s=args.s,
            histogram=args.histogram,
            cap=args.max_trees,
            text=text,
        )
    if args.json:
        print(report.to_json())
        return 0
    rows = [
        ("crossings", report.c),
        ("n+ / n-", f"{report.n_plus} / {report.n_minus}"),
        ("s_A / s_B", f"{report.s_a} / {report.s_b}"),
        ("faces", report.faces),
        ("G: E_A / E_B / V", f"{report.tait_g['e_a']} / {report.tait_g['e_b']} / {report.tait_g['v']}"),
        ("delta_min / delta_max", f"{_half(report.two_delta_min)} / {_half(report.two_delta_max)}"),
        ("Turaev surface genus", report.turaev_diagram_genus),
        ("signature", f"{report.sigma} ({report.sigma_method})"),
        ("bound on 2tau, s, -sigma", f"[{report.interval_lower}, {report.interval_upper}]"),
        ("unknotting number >=", report.unknotting_lower_bound if report.unknotting_lower_bound is not None else "-"),
    ]
    if report.turaev_lower_bound is not None:
        rows.append(("Turaev genus >=", f"{report.turaev_lower_bound} ({report.tau_s_provenance} tau/s)"))
    if report.delta_histogram is not None:
        rows.append(("2delta histogram", report.delta_histogram))
    print(_table(rows))
    for w in report.warnings:
        print(f"warning: {w}")
    return 0


def cmd_braid3(args: argparse.Namespace) -> int:
    if (args.normal_form is None) == (args.torus is None):
        raise DiagramError("give a normal form or --torus K")
    if args.torus is not None:
        target = braid3.TorusParams(args.torus)
    else:
        target = braid3.parse_normal_form(args.normal_form)
    out = braid3_report(target, verify=args.verify)
    if args.json:
        print(dumps(out))
        return 0
    rows = [(k, v) for k, v in sorted(out.items()) if k != "schema"]
    print(_table(rows))
    return 0


def cmd_trees(args: argparse.Namespace) -> int:
    diagram, _ = _read_input(args)
    if diagram is None:
        raise DiagramError("the crossingless unknot has no Tait graph edges")
    g, _ = build_tait(diagram)
    dist = delta_distribution(g, args.max_trees)
    lo, hi = closed_form_extremes(diagram, g)
    kirchhoff = kirchhoff_tree_count(g)
    ok = (dist.two_delta_min, dist.two_delta_max) == (lo, hi) and dist.tree_count == kirchhoff
    if args.json:
        print(dumps({
            "schema": 1,
            "tree_count": dist.tree_count,
            "kirchhoff_tree_count": kirchhoff,
            "delta_histogram": {str(k): v for k, v in dist.histogram.items()},
            "two_delta_min": dist.two_delta_min,
            "two_delta_max": dist.two_delta_max,
            "closed_form_two_delta_min": lo,
            "closed_form_two_delta_max": hi,
            "consistent": ok,
        }))
    else:
        print("2delta  trees")
        for k, v in dist.histogram.items():
            print(f"{k:>6}  {v}")
        print(f"total {dist.tree_count} (matrix-tree: {kirchhoff})")
        status = "ok" if ok else "MISMATCH"
        print(f"extremes [{dist.two_delta_min}, {dist.two_delta_max}] vs closed form [{lo}, {hi}]: {status}")
    if not ok:
        raise ConsistencyError("tree histogram disagrees with closed forms or matrix-tree count")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turaev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pd", help='PD code, e.g. "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"; "-" reads stdin')
        p.add_argument("--braid", help='braid word, e.g. "s1 s2^-1 s1 s2^-1"')
        p.add_argument("--strands", type=int, help="strand count for --braid")
        p.add_argument("--max-trees", type=int, default=DEFAULT_CAP, help="spanning-tree enumeration cap")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="all invariants and bounds of one diagram")
    diagram_args(p)
    p.add_argument("--tau", type=int, help="known tau(K), enables Turaev genus lower bounds")
    p.add_argument("--s", type=int, help="known Rasmussen s(K)")
    p.add_argument("--histogram", action="store_true", help="also enumerate spanning trees")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("braid3", help="closed-form invariants of closed 3-braids")
    p.add_argument("normal_form", nargs="?", help='e.g. "n=1; type=1; pairs=(1,1)"')
    p.add_argument("--torus", type=int, metavar="K", help="the torus knot T(3,K)")
    p.add_argument("--verify", action="store_true", help="cross-check against the diagram pipeline")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_braid3)

    p = sub.add_parser("trees", help="histogram of delta over all spanning trees")
    diagram_args(p)
    p.set_defaults(func=cmd_trees)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, TreeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
