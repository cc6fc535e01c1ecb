import random

import pytest

from aluffi_kit.corpus import (
    CAYLEY_CUBIC,
    SHIPPED_CURVES,
    SPACE,
    corpus_curves,
    cubic_monomials,
    cubic_samples,
    nodal_quartics,
    quasi_homogeneous_curve,
    quasi_homogeneous_curves,
    random_nodal_quartic,
)
from aluffi_kit.hypersurfaces import (
    AffineHypersurface,
    ProjectiveHypersurface,
    quasi_homogeneous_type,
    rational_singular_points,
    singularity_reports,
)


def test_shipped_curves_parse():
    for curve in SHIPPED_CURVES:
        X = ProjectiveHypersurface.from_text(curve.polynomial, curve.variables)
        assert X.is_reduced


def test_corpus_is_deterministic():
    assert corpus_curves(2, seed=5) == corpus_curves(2, seed=5)
    assert len(corpus_curves(3)) == len(SHIPPED_CURVES) + 3


def test_nodal_quartic():
    f = random_nodal_quartic(random.Random(11))
    assert f.degree == 4
    assert f.is_homogeneous
    X = ProjectiveHypersurface(f)
    points, complete = rational_singular_points(X)
    assert complete
    assert [r.label for r in singularity_reports(X, points)] == ["A1"] * 4


def test_nodal_quartics_by_seed():
    first = nodal_quartics(2, 3)
    assert [c.name for c in first] == ["nodal quartic 0", "nodal quartic 1"]
    assert first == nodal_quartics(2, 3)


@pytest.mark.parametrize("p, q, s", [(1, 2, 2), (2, 3, 3), (1, 1, 3)])
def test_quasi_homogeneous_curve(p, q, s):
    f = quasi_homogeneous_curve(p, q, s)
    qh = quasi_homogeneous_type(f)
    assert qh is not None
    # weights are only determined up to scaling
    assert qh.weights[0] * q == qh.weights[1] * p


def test_quasi_homogeneous_curves_are_singular():
    for f in quasi_homogeneous_curves():
        X = AffineHypersurface(f)
        assert not X.is_smooth
        assert quasi_homogeneous_type(f) is not None


def test_forced_singular_monomials():
    assert len(cubic_monomials(False)) == 20
    forced = cubic_monomials(True)
    assert len(forced) == 16
    assert (0, 0, 0, 3) not in forced
    assert (0, 0, 1, 2) not in forced


def test_cubic_samples():
    assert cubic_samples(0, 1) == []
    samples = cubic_samples(4, 1)
    assert samples == cubic_samples(4, 1)
    assert samples[0] == str(SPACE.parse(CAYLEY_CUBIC))
    origin = (0, 0, 0, 1)
    for text in samples:
        f = SPACE.parse(text)
        assert f.degree == 3
        assert f.evaluate(origin) == 0
        assert all(f.diff(i).evaluate(origin) == 0 for i in range(4))
