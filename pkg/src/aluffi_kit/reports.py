"""Analysis reports, batch records and their JSON/text renderings.

Every record is a dataclass of JSON primitives so it survives a ujson round
trip unchanged and can cross a process boundary. The ``*_worker`` functions
are what the batch commands hand to worker processes.
"""
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import ujson

from .blowup import aluffi_presentation, is_linear_type, rees_ideal, sym_ideal
from .errors import (
    InconsistentVerdictError,
    NonIsolatedSingularityError,
    NotReducedError,
    PreconditionError,
    ResourceLimitExceeded,
)
from .groebner import ResourceLimits
from .hypersurfaces import (
    AffineHypersurface,
    ProjectiveHypersurface,
    SingularityReport,
    family_member_verdict,
    family_polynomial,
    family_prediction,
    gradient_linear_type,
    has_isolated_singularities,
    is_locally_eulerian,
    quasi_homogeneous_type,
    rational_singular_points,
    singularity_reports,
)
from .polynomials import PolynomialRing
from .settings import settings

LOGGER = logging.getLogger(__name__)


def _seconds(start: float) -> float:
    return round(time.perf_counter() - start, 6)


def _presentation_dict(presentation) -> Dict[str, list]:
    return {
        "generators": [str(g) for g in presentation.generators],
        "t_degrees": [presentation.t_degree(g) for g in presentation.generators],
        "basis": [str(g) for g in presentation.basis],
    }


def _point_dict(report: SingularityReport, chart: Optional[str] = None) -> dict:
    evidence = dict(report.evidence)
    if chart is not None:
        evidence["chart"] = chart
    return {
        "point": report.point.to_strings(),
        "kind": report.point.kind,
        "text": str(report.point),
        "multiplicity": report.multiplicity,
        "milnor": report.milnor,
        "tjurina": report.tjurina,
        "locally_eulerian": report.locally_eulerian,
        "label": report.label,
        "evidence": evidence,
    }


@dataclass
class AnalysisReport:
    input: dict
    verdicts: dict
    singular_points: List[dict]
    presentations: Optional[dict] = None
    timings: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**data)

    def to_json(self) -> str:
        return ujson.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(ujson.loads(text))


def analyze(
    text: str,
    variables,
    projective: bool = False,
    presentations: bool = False,
    deep: bool = False,
) -> AnalysisReport:
    """Full analysis of one hypersurface.

    Raises :class:`NotReducedError` or :class:`NonIsolatedSingularityError`
    when the input is outside the scope of the criteria.
    """
    timings = {}
    start = time.perf_counter()
    ring = PolynomialRing.from_names(variables)
    f = ring.parse(text)
    X = ProjectiveHypersurface(f) if projective else AffineHypersurface(f)
    timings["parse"] = _seconds(start)

    start = time.perf_counter()
    if not X.is_reduced:
        raise NotReducedError(f"{f} is not reduced")
    if not has_isolated_singularities(X):
        raise NonIsolatedSingularityError(f"{f} has non-isolated singularities")
    points, complete = rational_singular_points(X)
    reports = singularity_reports(X, points)
    timings["singular_points"] = _seconds(start)

    verdicts = {
        "reduced": True,
        "isolated": True,
        "singular_points_complete": complete,
        "locally_eulerian": None,
        "jacobian_linear_type": None,
        "jacobian_linear_type_witness": None,
        "gradient_linear_type": None,
        "quasi_homogeneous": None,
        "charts": [],
    }
    linear = None
    start = time.perf_counter()
    if projective:
        verdict = gradient_linear_type(X)
        eulerian = verdict.is_linear_type
        verdicts["gradient_linear_type"] = eulerian
        verdicts["charts"] = [
            {
                "chart": c.chart,
                "variable": c.variable,
                "polynomial": str(c.polynomial),
                "smooth": c.smooth,
                "locally_eulerian": c.locally_eulerian,
                "euler_relation": c.euler_relation,
                "jacobian_matches": c.jacobian_matches,
            }
            for c in verdict.charts
        ]
        if deep:
            linear = is_linear_type(X.gradient)
            if linear.is_linear_type != eulerian:
                raise InconsistentVerdictError(
                    f"chart-wise verdict {eulerian} but Rees comparison {linear.is_linear_type} for {f}"
                )
    else:
        eulerian = is_locally_eulerian(X, check=False)
        qh = quasi_homogeneous_type(f)
        verdicts["quasi_homogeneous"] = None if qh is None else str(qh)
        if qh is not None and not eulerian:
            raise InconsistentVerdictError(f"{f} is quasi-homogeneous but not locally Eulerian")
        linear = is_linear_type(X.jacobian)
        if linear.is_linear_type != eulerian:
            raise InconsistentVerdictError(
                f"locally Eulerian {eulerian} but Jacobian linear type {linear.is_linear_type} for {f}"
            )
    verdicts["locally_eulerian"] = eulerian
    if linear is not None:
        verdicts["jacobian_linear_type"] = linear.is_linear_type
        if linear.witness is not None:
            verdicts["jacobian_linear_type_witness"] = {
                "polynomial": str(linear.witness),
                "t_degree": linear.witness_t_degree,
            }
    per_point = [r.locally_eulerian for r in reports]
    if eulerian and not all(per_point):
        raise InconsistentVerdictError(f"global verdict true but a rational point of {f} fails")
    if complete and all(per_point) != eulerian:
        raise InconsistentVerdictError(f"per-point verdicts disagree with the global one for {f}")
    timings["verdicts"] = _seconds(start)

    rendered_presentations = None
    if presentations:
        start = time.perf_counter()
        if projective:
            sym = linear.sym if linear is not None else sym_ideal(X.gradient)
            rendered_presentations = {"sym": _presentation_dict(sym), "aluffi": None}
            if linear is not None:
                rendered_presentations["rees"] = _presentation_dict(linear.rees)
            else:
                rendered_presentations["rees"] = _presentation_dict(rees_ideal(X.gradient))
        else:
            aluffi = aluffi_presentation(X)
            rendered_presentations = {
                "sym": _presentation_dict(linear.sym),
                "rees": _presentation_dict(linear.rees),
                "aluffi": _presentation_dict(aluffi.presentation),
            }
            if aluffi.quasi_homogeneous_shape is not None:
                rendered_presentations["aluffi_quasi_homogeneous"] = _presentation_dict(
                    aluffi.quasi_homogeneous_shape
                )
            if aluffi.eulerian_shape is not None:
                rendered_presentations["aluffi_locally_eulerian"] = _presentation_dict(
                    aluffi.eulerian_shape
                )
        timings["presentations"] = _seconds(start)

    charts = [
        X.ring.variables[r.point.chart] if projective else None for r in reports
    ]
    return AnalysisReport(
        input={
            "polynomial": str(f),
            "variables": list(ring.variables),
            "kind": "projective" if projective else "affine",
        },
        verdicts=verdicts,
        singular_points=[_point_dict(r, chart) for r, chart in zip(reports, charts)],
        presentations=rendered_presentations,
        timings=timings,
    )


def _yes(value) -> str:
    if value is None:
        return "not computed"
    return "yes" if value else "no"


def render_text(report: AnalysisReport) -> str:
    source = report.input
    verdicts = report.verdicts
    lines = [
        f"polynomial: {source['polynomial']} over QQ[{','.join(source['variables'])}] ({source['kind']})",
        f"reduced: {_yes(verdicts['reduced'])}",
        f"isolated singularities: {_yes(verdicts['isolated'])}",
        f"rational singular points: {len(report.singular_points)}"
        f" (all singular points rational: {_yes(verdicts['singular_points_complete'])})",
    ]
    for point in report.singular_points:
        lines.append(
            f"  {point['text']}: multiplicity {point['multiplicity']}, mu={point['milnor']},"
            f" tau={point['tjurina']}, locally Eulerian: {_yes(point['locally_eulerian'])},"
            f" {point['label']}"
        )
        evidence = point["evidence"]
        if evidence.get("tangent_line"):
            lines.append(
                f"    tangent {evidence['tangent_line']} with contact {evidence['tangent_contact']}"
                f" (contact label {evidence['contact_label']})"
            )
    if source["kind"] == "affine":
        qh = verdicts["quasi_homogeneous"]
        lines.append(f"quasi-homogeneous: {qh if qh else 'no'}")
    lines.append(f"locally Eulerian: {_yes(verdicts['locally_eulerian'])}")
    lines.append(f"Jacobian linear type: {_yes(verdicts['jacobian_linear_type'])}")
    witness = verdicts["jacobian_linear_type_witness"]
    if witness:
        lines.append(f"  witness of T-degree {witness['t_degree']}: {witness['polynomial']}")
    if source["kind"] == "projective":
        lines.append(f"gradient linear type: {_yes(verdicts['gradient_linear_type'])}")
        for chart in verdicts["charts"]:
            state = "smooth" if chart["smooth"] else f"locally Eulerian: {_yes(chart['locally_eulerian'])}"
            lines.append(f"  chart {chart['variable']}=1: {chart['polynomial']} ({state})")
    if report.presentations:
        for kind, presentation in report.presentations.items():
            if presentation is None:
                continue
            lines.append(f"{kind} presentation:")
            for g, degree in zip(presentation["generators"], presentation["t_degrees"]):
                lines.append(f"  [T-degree {degree}] {g}")
    timing = ", ".join(f"{k} {v:.3f}s" for k, v in report.timings.items())
    lines.append(f"timings: {timing}")
    return "\n".join(lines)


@dataclass
class FamilyScanRecord:
    a: int
    b: int
    c: int
    d: int
    polynomial: str
    status: str
    locally_eulerian: Optional[bool]
    quasi_homogeneous: Optional[str]
    predicted: str
    rule: Optional[str]
    expected: Optional[bool]
    agreement: Optional[bool]
    reason: Optional[str] = None
    elapsed: float = 0.0

    @property
    def disagrees(self) -> bool:
        return self.agreement is False


@dataclass
class CorpusRecord:
    name: str
    polynomial: str
    variables: List[str]
    status: str
    gradient_linear_type: Optional[bool]
    expected: bool
    labels: List[str]
    expected_labels: Optional[List[str]]
    match: bool
    reason: Optional[str] = None
    elapsed: float = 0.0


@dataclass
class CubicTrialRecord:
    trial: int
    polynomial: str
    status: str
    gradient_linear_type: Optional[bool]
    labels: List[str]
    reason: Optional[str] = None
    elapsed: float = 0.0


def _apply_limits(limits: Optional[ResourceLimits]):
    if limits is not None:
        settings.limit_pairs = limits.max_pairs
        settings.limit_terms = limits.max_terms


def family_worker(payload) -> dict:
    (a, b, c, d), limits = payload
    _apply_limits(limits)
    start = time.perf_counter()
    try:
        verdict = family_member_verdict(a, b, c, d)
    except ResourceLimitExceeded as exc:
        predicted, rule = family_prediction(a, b, c, d)
        return asdict(
            FamilyScanRecord(
                a, b, c, d, str(family_polynomial(a, b, c, d)), "limit", None, None,
                predicted, rule, None, None, str(exc), _seconds(start),
            )
        )
    qh = verdict.quasi_homogeneous
    record = FamilyScanRecord(
        a, b, c, d,
        str(verdict.polynomial),
        verdict.status,
        verdict.locally_eulerian,
        None if qh is None else str(qh),
        verdict.prediction,
        verdict.rule,
        verdict.expected,
        verdict.agreement,
        verdict.reason,
        _seconds(start),
    )
    if record.disagrees:
        LOGGER.warning(f"{record.polynomial}: computed {record.locally_eulerian}, predicted {record.expected}")
    return asdict(record)


def _labels(X) -> List[str]:
    points, _ = rational_singular_points(X)
    return sorted(r.label for r in singularity_reports(X, points))


def corpus_worker(payload) -> dict:
    curve, limits = payload
    _apply_limits(limits)
    start = time.perf_counter()
    expected_labels = None if curve.labels is None else sorted(curve.labels)
    try:
        X = ProjectiveHypersurface.from_text(curve.polynomial, curve.variables)
        verdict = gradient_linear_type(X).is_linear_type
        labels = _labels(X)
    except ResourceLimitExceeded as exc:
        status, verdict, labels, reason = "limit", None, [], str(exc)
    except PreconditionError as exc:
        status, verdict, labels, reason = "degenerate", None, [], str(exc)
    else:
        status, reason = "ok", None
    match = verdict == curve.expected and (expected_labels is None or labels == expected_labels)
    return asdict(
        CorpusRecord(
            curve.name, curve.polynomial, list(curve.variables.split(",")), status, verdict,
            curve.expected, labels, expected_labels, match, reason, _seconds(start),
        )
    )


def cubic_worker(payload) -> dict:
    (trial, text, variables), limits = payload
    _apply_limits(limits)
    start = time.perf_counter()
    verdict, labels, reason = None, [], None
    try:
        X = ProjectiveHypersurface.from_text(text, variables)
        if not X.is_reduced:
            status, reason = "degenerate", "not reduced"
        elif not has_isolated_singularities(X):
            status, reason = "degenerate", "non-isolated singularities"
        elif X.is_smooth:
            status, verdict = "smooth", True
        else:
            verdict = gradient_linear_type(X).is_linear_type
            labels = _labels(X)
            status = "ok"
    except ResourceLimitExceeded as exc:
        status, reason = "limit", str(exc)
    except PreconditionError as exc:
        status, reason = "degenerate", str(exc)
    if verdict is False:
        LOGGER.warning(f"cubic trial {trial}: {text} is not of gradient linear type")
    return asdict(CubicTrialRecord(trial, text, status, verdict, labels, reason, _seconds(start)))


def write_json(path: str, payload):
    with open(path, "w") as handle:
        handle.write(ujson.dumps(payload, indent=2))
    LOGGER.info(f"wrote {path}")
