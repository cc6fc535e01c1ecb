import pytest

from aluffi_kit.errors import PolynomialSyntaxError, UnknownVariableError
from aluffi_kit.parsing import parse_polynomial


def test_parse_basic(plane):
    x, y = plane.gens
    assert parse_polynomial("x^4 - x^2*y^2 + y^5", plane) == x**4 - x**2 * y**2 + y**5
    assert parse_polynomial("  3/4 * x*y ", plane) == x * y * plane.constant("3/4")
    assert parse_polynomial("-(x + y)^2", plane) == -(x + y) ** 2
    assert parse_polynomial("+7", plane) == plane.constant(7)


def test_parse_nested_groups(projective_plane):
    f = parse_polynomial("(y - z)*(z - x)*(x - y)", projective_plane)
    x, y, z = projective_plane.gens
    assert f == (y - z) * (z - x) * (x - y)
    assert f.is_homogeneous


def test_printed_form_parses_back(plane):
    for text in ["x^4 - x^2*y^2 + y^5", "-1/3*x + 2", "x*y - 5/7", "0"]:
        f = parse_polynomial(text, plane)
        assert parse_polynomial(str(f), plane) == f


def test_dangling_operator_reports_offset(plane):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("x^2 +", plane)
    assert info.value.offset == 4


def test_missing_operator(plane):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("2 x", plane)
    assert info.value.offset == 2


def test_unknown_variable(plane):
    with pytest.raises(UnknownVariableError) as info:
        parse_polynomial("x + q", plane)
    assert info.value.name == "q"
    assert info.value.offset == 4


def test_zero_denominator(plane):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("1/0*x", plane)
    assert "zero denominator" in str(info.value)


def test_empty_input(plane):
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("", plane)
