import ujson
import pytest

from aluffi_kit import __version__
from aluffi_kit.commands import _family_grid, execute


def test_analyze(capsys):
    assert execute(["analyze", "--vars", "x,y", "--poly", "x^4 - x^2*y^2 + y^5"]) == 0
    out = capsys.readouterr().out
    assert "locally Eulerian: no" in out
    assert "non-double-point" in out


def test_analyze_projective_json(capsys, tmp_path):
    path = tmp_path / "cayley.json"
    argv = [
        "analyze",
        "--vars", "x,y,z,w",
        "--poly", "x*y*z + x*y*w + x*z*w + y*z*w",
        "--projective",
        "--json", str(path),
    ]
    assert execute(argv) == 0
    assert "gradient linear type: yes" in capsys.readouterr().out
    data = ujson.loads(path.read_text())
    assert data["verdicts"]["gradient_linear_type"] is True
    assert len(data["singular_points"]) == 4


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "--vars", "x,y", "--poly", "x^2 +"], 1),
        (["analyze", "--vars", "x,y", "--poly", "x + q"], 1),
        (["analyze", "--vars", "x,y"], 1),
        (["no-such-command"], 1),
        (["analyze", "--vars", "x,y", "--poly", "x^2"], 2),
        (["analyze", "--vars", "x,y,z", "--poly", "x*y"], 2),
        (["analyze", "--vars", "x,y", "--poly", "x^2 + y", "--projective"], 2),
        (["--limit-pairs", "0", "analyze", "--vars", "x,y", "--poly", "x^4 - x^2*y^2 + y^5"], 3),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert execute(argv) == code


def test_precondition_message(capsys):
    execute(["analyze", "--vars", "x,y", "--poly", "x^2"])
    assert capsys.readouterr().err.startswith("error: ")


def test_version(capsys):
    assert execute(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_family_grid():
    grid = _family_grid(3, 3)
    assert len(grid) == 9 + 12 + 12 + 16
    assert (2, 2, 0, 0) in grid
    assert (3, 3, 3, 3) in grid
    assert all(c <= a and d <= b for a, b, c, d in grid)


def test_family_scan(capsys, tmp_path):
    path = tmp_path / "family.json"
    assert execute(["family-scan", "--a-max", "2", "--b-max", "2", "--json", str(path)]) == 0
    out = capsys.readouterr().out
    assert "9 members" in out
    assert "0 disagreements" in out
    data = ujson.loads(path.read_text())
    assert data["disagreements"] == 0
    by_member = {(r["a"], r["b"], r["c"], r["d"]): r for r in data["records"]}
    assert by_member[(2, 2, 1, 1)]["agreement"] is True
    assert by_member[(2, 2, 0, 0)]["status"] == "smooth"
    assert by_member[(2, 2, 2, 2)]["locally_eulerian"] is True


@pytest.mark.slow
def test_corpus(capsys, tmp_path, monkeypatch):
    from aluffi_kit.settings import settings

    monkeypatch.setattr(settings, "nodal_quartics", 1)
    path = tmp_path / "corpus.json"
    assert execute(["corpus", "--json", str(path)]) == 0
    out = capsys.readouterr().out
    assert "8 curves, 0 mismatches" in out
    data = ujson.loads(path.read_text())
    assert data["seed"] == settings.corpus_seed
    assert all(r["match"] for r in data["records"])


def test_cubic_experiment_without_trials(capsys):
    assert execute(["cubic-experiment", "--trials", "0"]) == 0
    assert "0 trials" in capsys.readouterr().out


def test_cubic_experiment_single_trial(capsys):
    assert execute(["cubic-experiment", "--trials", "1"]) == 0
    assert "1 trials" in capsys.readouterr().out


@pytest.mark.slow
def test_cubic_experiment(capsys, tmp_path):
    path = tmp_path / "cubics.json"
    argv = ["cubic-experiment", "--trials", "3", "--seed", "7", "--json", str(path)]
    assert execute(argv) == 0
    out = capsys.readouterr().out
    assert out.startswith("seed 7, 3 trials")
    data = ujson.loads(path.read_text())
    assert data["force_singular"] is True
    assert [r["trial"] for r in data["records"]] == [0, 1, 2]
    assert data["records"][0]["polynomial"] == "x*y*z + x*y*w + x*z*w + y*z*w"
    assert data["records"][0]["gradient_linear_type"] is True


def test_single_job_batches_time_out(capsys, tmp_path, monkeypatch):
    from aluffi_kit.settings import settings

    monkeypatch.setattr(settings, "trial_timeout", 0.001)
    path = tmp_path / "cubics.json"
    assert execute(["cubic-experiment", "--trials", "1", "--jobs", "1", "--json", str(path)]) == 0
    [record] = ujson.loads(path.read_text())["records"]
    assert record["status"] == "timeout"
