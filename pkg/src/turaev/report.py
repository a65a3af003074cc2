"""Full-pipeline reports and their canonical JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import braid3
from .bounds import concordance_interval, turaev_lower_bound, unknotting_lower_bound
from .diagram import Diagram, braid_closure, faces, s_a, s_b
from .errors import ConsistencyError, DiagramError
from .goeritz import signature, traczyk_signature
from .ribbon import turaev_genus_diagram
from .tait import build_tait, edge_counts, is_alternating
from .trees import DEFAULT_CAP, delta_distribution, delta_extremes, kirchhoff_tree_count

SCHEMA = 1


def dumps(payload: dict[str, Any]) -> str:
    """Canonical JSON: sorted keys, fixed indentation, integers only."""
    return json.dumps(payload, sort_keys=True, indent=2)


@dataclass
class InvariantReport:
    """Everything computed for one diagram.  Half-integral values are stored doubled."""

    input: str
    c: int
    n_plus: int
    n_minus: int
    s_a: int
    s_b: int
    faces: int
    tait_g: dict[str, int]
    tait_g_star: dict[str, int]
    two_delta_min: int
    two_delta_max: int
    turaev_diagram_genus: int
    sigma: int
    sigma_method: str
    interval_lower: int
    interval_upper: int
    unknotting_lower_bound: int | None
    two_tau: int | None = None
    s: int | None = None
    tau_s_provenance: str | None = None
    turaev_lb_tau_sigma: int | None = None
    turaev_lb_s_sigma: int | None = None
    turaev_lb_tau_s: int | None = None
    turaev_lower_bound: int | None = None
    tree_count: int | None = None
    delta_histogram: dict[str, int] | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out = {"schema": SCHEMA}
        out.update(asdict(self))
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _flat_counts(counts) -> dict[str, int]:
    return {key.lower(): value for key, value in counts.as_dict().items()}


def trivial_report(text: str = "") -> InvariantReport:
    """Report for the crossingless unknot, where every invariant vanishes."""
    zero = {k: 0 for k in ("e_a", "e_b", "e_plus", "e_minus", "e_a_plus", "e_a_minus", "e_b_plus", "e_b_minus")}
    return InvariantReport(
        input=text, c=0, n_plus=0, n_minus=0, s_a=1, s_b=1, faces=2,
        tait_g={**zero, "v": 1}, tait_g_star={**zero, "v": 1},
        two_delta_min=0, two_delta_max=0, turaev_diagram_genus=0,
        sigma=0, sigma_method="trivial", interval_lower=0, interval_upper=0,
        unknotting_lower_bound=0, warnings=["crossingless diagram: the unknot"],
    )


def analyze(
    diagram: Diagram,
    *,
    two_tau: int | None = None,
    s: int | None = None,
    provenance: str = "supplied",
    histogram: bool = False,
    cap: int = DEFAULT_CAP,
    text: str | None = None,
) -> InvariantReport:
    """Run every computation on ``diagram`` and cross-check the redundant routes.

    Raises :class:`ConsistencyError` on any internal disagreement and
    :class:`DiagramError` when supplied invariants violate the diagram bounds.
    """
    g, gstar = build_tait(diagram)
    stats = delta_extremes(diagram, g)
    genus = turaev_genus_diagram(diagram, g)
    sigma, warnings = signature(diagram)
    method = "goeritz"
    if is_alternating(g) and not g.has_loops() and not gstar.has_loops():
        if traczyk_signature(diagram) != sigma:
            raise ConsistencyError("Goeritz and Traczyk signatures disagree")
        method = "goeritz+traczyk"
    interval = concordance_interval(diagram)
    if (interval.lower, interval.upper) != (stats.two_delta_min, stats.two_delta_max):
        raise ConsistencyError("concordance interval differs from delta extremes")
    if -sigma not in interval:
        raise ConsistencyError(f"-sigma = {-sigma} outside [{interval.lower}, {interval.upper}]")

    report = InvariantReport(
        input=text if text is not None else diagram.pd_string(),
        c=diagram.c,
        n_plus=diagram.n_plus,
        n_minus=diagram.n_minus,
        s_a=s_a(diagram),
        s_b=s_b(diagram),
        faces=len(faces(diagram)),
        tait_g=_flat_counts(edge_counts(g)),
        tait_g_star=_flat_counts(edge_counts(gstar)),
        two_delta_min=stats.two_delta_min,
        two_delta_max=stats.two_delta_max,
        turaev_diagram_genus=genus,
        sigma=sigma,
        sigma_method=method,
        interval_lower=interval.lower,
        interval_upper=interval.upper,
        unknotting_lower_bound=unknotting_lower_bound(diagram),
        warnings=warnings,
    )
    if two_tau is not None or s is not None:
        for value, name in ((two_tau, "2*tau"), (s, "s")):
            if value is not None and value not in interval:
                raise DiagramError(
                    f"supplied {name} = {value} lies outside the diagram bound "
                    f"[{interval.lower}, {interval.upper}]"
                )
        lb = turaev_lower_bound(two_tau, s, sigma)
        report.two_tau, report.s, report.tau_s_provenance = two_tau, s, provenance
        report.turaev_lb_tau_sigma = lb.from_tau_sigma
        report.turaev_lb_s_sigma = lb.from_s_sigma
        report.turaev_lb_tau_s = lb.from_tau_s
        report.turaev_lower_bound = lb.best
        if lb.best is not None and lb.best > genus:
            raise ConsistencyError("Turaev lower bound exceeds this diagram's Turaev genus")
    if histogram:
        dist = delta_distribution(g, cap)
        if (dist.two_delta_min, dist.two_delta_max) != (stats.two_delta_min, stats.two_delta_max):
            raise ConsistencyError("histogram support differs from greedy extremes")
        if dist.tree_count != kirchhoff_tree_count(g):
            raise ConsistencyError("enumerated tree count differs from matrix-tree count")
        report.tree_count = dist.tree_count
        report.delta_histogram = {str(k): v for k, v in dist.histogram.items()}
    return report


def braid3_report(target: braid3.MurasugiNormalForm | braid3.TorusParams, verify: bool = False) -> dict[str, Any]:
    """Closed-form invariants of a closed 3-braid knot, optionally checked on its diagram."""
    out: dict[str, Any] = {"schema": SCHEMA, "tau_s_provenance": "braid3"}
    if isinstance(target, braid3.MurasugiNormalForm):
        out["n"] = target.n
        out["type"] = {braid3.Type1: 1, braid3.Type2: 2, braid3.Type3: 3}[type(target.variant)]
        out["classification"] = braid3.classify(target)
        if out["classification"] != "knot":
            raise DiagramError("closure of this normal form is a link")
        word = braid3.normal_form_word(target)
        if isinstance(target.variant, braid3.Type3):
            target = braid3.torus_params(target)
    if isinstance(target, braid3.TorusParams):
        word = target.word()
        inv = braid3.torus_invariants(target)
        sigma, s, two_tau = inv.sigma, inv.s, inv.two_tau
        out["torus_k"] = target.k
        out["sigma_method"] = "torus formula"
    else:
        sigma = braid3.erle_signature(target)
        s, two_tau = braid3.greene_s(target)
        out["sigma_method"] = "erle"
    lb = turaev_lower_bound(two_tau, s, sigma)
    statement = braid3.turaev_genus_statement(target)
    out.update(
        braid_word=str(word),
        sigma=sigma,
        s=s,
        two_tau=two_tau,
        turaev_lb_tau_sigma=lb.from_tau_sigma,
        turaev_lb_s_sigma=lb.from_s_sigma,
        turaev_lb_tau_s=lb.from_tau_s,
        turaev_lower_bound=lb.best,
        turaev_genus_candidates=sorted(statement) if statement is not None else None,
    )
    if verify:
        rep = analyze(braid_closure(word), text=str(word))
        out.update(
            diagram_sigma=rep.sigma,
            diagram_interval_lower=rep.interval_lower,
            diagram_interval_upper=rep.interval_upper,
            diagram_turaev_genus=rep.turaev_diagram_genus,
        )
        problems = []
        if rep.sigma != sigma:
            problems.append(f"closed-form sigma {sigma} != diagram sigma {rep.sigma}")
        for value, name in ((s, "s"), (two_tau, "2*tau")):
            if not rep.interval_lower <= value <= rep.interval_upper:
                problems.append(f"{name} = {value} outside diagram interval")
        out["verified"] = not problems
        if problems:
            raise ConsistencyError("; ".join(problems))
    return out
