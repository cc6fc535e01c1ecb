import pytest
import ujson

from aluffi_kit.errors import (
    NonIsolatedSingularityError,
    NotReducedError,
    PolynomialSyntaxError,
    ResourceLimitExceeded,
    UnknownVariableError,
)
from aluffi_kit.groebner import ResourceLimits
from aluffi_kit.reports import (
    AnalysisReport,
    CorpusRecord,
    CubicTrialRecord,
    FamilyScanRecord,
    analyze,
    corpus_worker,
    cubic_worker,
    family_worker,
    render_text,
    write_json,
)
from aluffi_kit.corpus import SHIPPED_CURVES
from aluffi_kit.settings import settings


def test_affine_report():
    report = analyze("x^4 - x^2*y^2 + y^5", "x,y")
    verdicts = report.verdicts
    assert report.input == {
        "polynomial": "y^5 + x^4 - x^2*y^2",
        "variables": ["x", "y"],
        "kind": "affine",
    }
    assert verdicts["locally_eulerian"] is False
    assert verdicts["jacobian_linear_type"] is False
    assert verdicts["jacobian_linear_type_witness"]["t_degree"] == 2
    assert verdicts["gradient_linear_type"] is None
    assert verdicts["quasi_homogeneous"] is None
    [point] = report.singular_points
    assert point["point"] == ["0", "0"]
    assert point["multiplicity"] == 4
    assert point["label"] == "non-double-point"
    assert point["tjurina"] < point["milnor"]
    assert set(report.timings) >= {"parse", "singular_points", "verdicts"}


def test_quasi_homogeneous_report_with_presentations():
    report = analyze("y^2 - x^3", "x,y", presentations=True)
    assert report.verdicts["quasi_homogeneous"] == "d=6, r=(2, 3)"
    assert report.verdicts["jacobian_linear_type"] is True
    assert report.singular_points[0]["label"] == "A2"
    assert set(report.presentations) == {
        "sym",
        "rees",
        "aluffi",
        "aluffi_quasi_homogeneous",
        "aluffi_locally_eulerian",
    }
    assert all(d == 1 for d in report.presentations["sym"]["t_degrees"])
    assert "T0" in report.presentations["aluffi"]["basis"]


def test_projective_report():
    report = analyze("x*y*z + x*y*w + x*z*w + y*z*w", "x,y,z,w", projective=True)
    assert report.verdicts["gradient_linear_type"] is True
    assert report.verdicts["jacobian_linear_type"] is None
    assert len(report.verdicts["charts"]) == 4
    assert [p["label"] for p in report.singular_points] == ["A1"] * 4
    assert {p["evidence"]["chart"] for p in report.singular_points} == {"x", "y", "z", "w"}


def test_deep_projective_report_agrees():
    report = analyze("y^2*z - x^3", "x,y,z", projective=True, deep=True)
    assert report.verdicts["gradient_linear_type"] is True
    assert report.verdicts["jacobian_linear_type"] is True


def test_json_round_trip(tmp_path):
    report = analyze("y^2 - x^3 - x^2", "x,y", presentations=True)
    assert AnalysisReport.from_json(report.to_json()) == report
    path = tmp_path / "report.json"
    write_json(str(path), report.to_dict())
    assert AnalysisReport.from_dict(ujson.loads(path.read_text())) == report


def test_text_rendering():
    text = render_text(analyze("x^4 - x^2*y^2 + y^5", "x,y"))
    assert "locally Eulerian: no" in text
    assert "Jacobian linear type: no" in text
    assert "witness of T-degree 2" in text


def test_preconditions():
    with pytest.raises(NotReducedError):
        analyze("x^2*y", "x,y")
    with pytest.raises(NonIsolatedSingularityError):
        analyze("x*y", "x,y,z")


def test_limits_are_enforced(monkeypatch):
    monkeypatch.setattr(settings, "limit_pairs", 0)
    with pytest.raises(ResourceLimitExceeded):
        analyze("x^4 - x^2*y^2 + y^5", "x,y")


def test_family_worker():
    row = family_worker(((3, 3, 1, 1), ResourceLimits(50000, 2000000)))
    record = FamilyScanRecord(**row)
    assert record.status == "ok"
    assert record.agreement is True
    assert record.rule == "case 3"


def test_family_worker_region_without_prediction():
    record = FamilyScanRecord(**family_worker(((3, 3, 1, 3), None)))
    assert record.rule == "region II"
    assert record.agreement is None
    assert not record.disagrees


def test_family_worker_records_limits():
    row = family_worker(((5, 5, 2, 2), ResourceLimits(0, 2000000)))
    assert row["status"] == "limit"
    assert row["agreement"] is None


def test_corpus_worker():
    nodal = next(c for c in SHIPPED_CURVES if c.name == "nodal cubic")
    record = CorpusRecord(**corpus_worker((nodal, None)))
    assert record.match
    assert record.labels == ["A1"]
    assert record.gradient_linear_type is True


def test_cubic_worker():
    record = CubicTrialRecord(
        **cubic_worker(((0, "x*y*z + x*y*w + x*z*w + y*z*w", "x,y,z,w"), None))
    )
    assert record.status == "ok"
    assert record.gradient_linear_type is True
    assert record.labels == ["A1"] * 4
    smooth = CubicTrialRecord(**cubic_worker(((1, "x^3 + y^3 + z^3 + w^3", "x,y,z,w"), None)))
    assert smooth.status == "smooth"
    assert smooth.gradient_linear_type is True
    triangle = CubicTrialRecord(**cubic_worker(((2, "x*y*z", "x,y,z,w"), None)))
    assert triangle.status == "degenerate"
    assert triangle.reason == "non-isolated singularities"


def test_cubic_worker_does_not_hide_syntax_errors():
    with pytest.raises(UnknownVariableError):
        cubic_worker(((0, "x*y*q + z^3", "x,y,z,w"), None))
    with pytest.raises(PolynomialSyntaxError):
        cubic_worker(((0, "x*y*z +", "x,y,z,w"), None))


def test_projective_quintic_is_not_of_gradient_linear_type():
    report = analyze("x^4*z - x^2*y^2*z + y^5", "x,y,z", projective=True)
    assert report.verdicts["gradient_linear_type"] is False
    assert [c["locally_eulerian"] for c in report.verdicts["charts"]] == [True, True, False]
    assert "gradient linear type: no" in render_text(report)
