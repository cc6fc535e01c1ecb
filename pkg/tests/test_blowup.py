import pytest

from aluffi_kit.blowup import (
    aluffi_presentation,
    euler_form,
    is_linear_type,
    koszul_minors,
    rees_ideal,
    sym_ideal,
)
from aluffi_kit.errors import PreconditionError
from aluffi_kit.hypersurfaces import AffineHypersurface, jacobian_ideal, quasi_homogeneous_type
from aluffi_kit.ideals import Ideal
from aluffi_kit.polynomials import PolynomialRing


def test_presentation_rings(plane):
    sym = sym_ideal(Ideal(plane, plane.gens))
    assert sym.t_variables == ("T0", "T1")
    assert sym.ring.variables == ("x", "y", "T0", "T1")
    # names already used by the base ring are avoided
    ring = PolynomialRing.from_names("x,T0")
    assert sym_ideal(Ideal(ring, ring.gens)).t_variables == ("T_0", "T_1")


def test_maximal_ideal_is_of_linear_type(plane):
    verdict = is_linear_type(Ideal(plane, plane.gens))
    assert verdict.is_linear_type
    assert verdict.witness is None
    relation = verdict.rees.ring.parse("x*T1 - y*T0")
    assert relation in verdict.sym.ideal
    assert verdict.sym.same_ideal(verdict.rees)


def test_square_of_the_maximal_ideal_is_not(plane):
    verdict = is_linear_type(Ideal.from_strings(plane, ["x^2", "x*y", "y^2"]))
    assert not verdict.is_linear_type
    assert verdict.witness_t_degree == 2
    assert verdict.rees.ring.parse("T0*T2 - T1^2") in verdict.rees.ideal
    assert verdict.rees.ring.parse("T0*T2 - T1^2") not in verdict.sym.ideal


def test_sym_forms_are_linear_in_t(plane):
    f = plane.parse("y^2 - x^3")
    sym = sym_ideal(jacobian_ideal(f))
    assert all(sym.t_degree(g) == 1 for g in sym.generators)
    assert all(sym.is_t_homogeneous(g) for g in sym.generators)
    assert all(degree == 1 for _, degree in sym.tagged())


def test_rees_contains_sym(plane):
    f = plane.parse("x^2*y + y^4")
    ideal = jacobian_ideal(f)
    sym, rees = sym_ideal(ideal), rees_ideal(ideal)
    assert rees.ideal.contains_ideal(sym.ideal)
    assert all(rees.is_t_homogeneous(g) for g in rees.generators)


def test_zero_ideal_has_no_presentation(plane):
    with pytest.raises(PreconditionError):
        sym_ideal(Ideal(plane, [plane.zero]))


def test_non_eulerian_quintic_is_not_of_linear_type(plane):
    f = plane.parse("x^4 - x^2*y^2 + y^5")
    verdict = is_linear_type(jacobian_ideal(f))
    assert not verdict.is_linear_type
    assert verdict.witness_t_degree == 2
    assert verdict.witness in verdict.rees.ideal


def test_cusp_is_of_linear_type(plane):
    assert is_linear_type(jacobian_ideal(plane.parse("y^2 - x^3"))).is_linear_type


def test_koszul_minors_and_euler_form(plane):
    f = plane.parse("y^2 - x^3")
    qh = quasi_homogeneous_type(f)
    ring = plane.extend(["T1", "T2"])
    x, y, T1, T2 = ring.gens
    fx, fy = f.diff(0).to_ring(ring), f.diff(1).to_ring(ring)
    assert koszul_minors([fx, fy], [T1, T2]) == (fx * T2 - fy * T1,)
    assert euler_form(qh, ring, [T1, T2]) == 2 * x * T1 + 3 * y * T2


def test_aluffi_presentation_of_a_quasi_homogeneous_curve(plane):
    presentation = aluffi_presentation(plane.parse("y^2 - x^3"))
    assert presentation.quasi_homogeneous is not None
    assert presentation.quasi_homogeneous_shape.same_ideal(presentation.presentation)
    assert presentation.eulerian_shape.same_ideal(presentation.presentation)
    T0 = presentation.presentation.ring.gen("T0")
    assert T0 in presentation.presentation.ideal


def test_aluffi_presentation_without_euler_shape(plane):
    presentation = aluffi_presentation(AffineHypersurface(plane.parse("x^4 - x^2*y^2 + y^5")))
    assert presentation.quasi_homogeneous is None
    assert presentation.quasi_homogeneous_shape is None
    assert presentation.eulerian_shape is None
