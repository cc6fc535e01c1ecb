"""Randomized checks of algebraic identities, seeded for reproducibility."""
import random
from itertools import combinations_with_replacement

from conftest import random_polynomial
from sympy import QQ, Matrix

from aluffi_kit.blowup import sym_ideal, rees_ideal
from aluffi_kit.groebner import (
    is_reduced,
    module_membership,
    normal_form,
    reduced_groebner_basis,
    satisfies_buchberger_criterion,
    syzygy_basis,
)
from aluffi_kit.ideals import Ideal
from aluffi_kit.polynomials import PolynomialRing


def _random_form(ring, rng, degree, terms=4, bound=6):
    coefficients = {}
    for _ in range(terms):
        exponents = [0] * ring.nvars
        for _ in range(degree):
            exponents[rng.randrange(ring.nvars)] += 1
        coefficients[tuple(exponents)] = rng.randint(-bound, bound)
    return ring.from_terms({m: c for m, c in coefficients.items() if c})


def test_ring_axioms(space, rng):
    for _ in range(400):
        a, b, c = (random_polynomial(space, rng) for _ in range(3))
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == space.zero


def test_text_survives_parsing(space, rng):
    for _ in range(200):
        f = random_polynomial(space, rng, terms=6)
        assert space.parse(str(f)) == f


def test_euler_identity(space, rng):
    for _ in range(300):
        degree = rng.randint(1, 5)
        f = _random_form(space, rng, degree)
        euler = space.zero
        for i, x in enumerate(space.gens):
            euler = euler + x * f.diff(i)
        assert euler == f * degree


def test_translation_is_invertible(plane, rng):
    for _ in range(100):
        f = random_polynomial(plane, rng)
        point = (rng.randint(-3, 3), rng.randint(-3, 3))
        back = tuple(-c for c in point)
        assert f.translate(point).translate(back) == f
        assert f.translate(point).evaluate((0, 0)) == f.evaluate(point)


def test_groebner_bases(plane, rng):
    for _ in range(60):
        generators = [random_polynomial(plane, rng, terms=3, degree=3) for _ in range(2)]
        generators = [g for g in generators if not g.is_zero]
        if not generators:
            continue
        basis = reduced_groebner_basis(generators)
        assert is_reduced(basis)
        assert satisfies_buchberger_criterion(basis)
        assert all(normal_form(g, basis).is_zero for g in generators)
        assert reduced_groebner_basis(list(reversed(generators))) == basis


def test_basis_does_not_depend_on_variable_names(rng):
    first = PolynomialRing.from_names("x,y")
    second = PolynomialRing.from_names("u,v")
    for _ in range(40):
        f = random_polynomial(first, rng, terms=3, degree=3)
        g = random_polynomial(first, rng, terms=3, degree=3)
        if f.is_zero or g.is_zero:
            continue
        renamed = [second.from_terms(p.terms) for p in (f, g)]
        a = reduced_groebner_basis([f, g])
        b = reduced_groebner_basis(renamed)
        assert [p.terms for p in a.polynomials] == [p.terms for p in b.polynomials]


def test_sym_relations_lie_in_rees(plane):
    rng = random.Random(7)
    checked = 0
    while checked < 8:
        generators = [_random_form(plane, rng, rng.randint(1, 2), terms=2) for _ in range(2)]
        if any(g.is_zero for g in generators):
            continue
        ideal = Ideal(plane, generators)
        sym = sym_ideal(ideal)
        rees = rees_ideal(ideal)
        assert all(g in rees.ideal for g in sym.generators)
        assert all(rees.is_t_homogeneous(g) for g in rees.generators)
        checked += 1


def test_basis_ignores_generator_scaling(plane, rng):
    for _ in range(40):
        generators = [random_polynomial(plane, rng, terms=3, degree=3) for _ in range(3)]
        generators = [g for g in generators if not g.is_zero]
        if not generators:
            continue
        scaled = [g.scale(rng.choice([-3, 2, "1/5", "-7/2"])) for g in generators]
        assert reduced_groebner_basis(scaled) == reduced_groebner_basis(generators)


def _monomials_of_degree(nvars, degree):
    result = []
    for picks in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for i in picks:
            exponents[i] += 1
        result.append(tuple(exponents))
    return result


def _in_span_of_multiples(p, generators, degree):
    """Membership of a form of ``degree`` by linear algebra over every multiplier."""
    nvars = p.ring.nvars
    products = []
    for g in generators:
        if g.degree <= degree:
            for m in _monomials_of_degree(nvars, degree - g.degree):
                products.append(g * p.ring.from_terms({m: 1}))
    monomials = _monomials_of_degree(nvars, degree)
    if not products:
        return p.is_zero
    span = Matrix([[QQ.to_sympy(q.coefficient(m)) for q in products] for m in monomials])
    target = Matrix([QQ.to_sympy(p.coefficient(m)) for m in monomials])
    return span.rank() == span.row_join(target).rank()


def test_normal_form_matches_linear_algebra(projective_plane, rng):
    checked = 0
    while checked < 30:
        generators = [_random_form(projective_plane, rng, rng.randint(1, 3), terms=3) for _ in range(2)]
        if any(g.is_zero for g in generators):
            continue
        basis = reduced_groebner_basis(generators)
        degree = rng.randint(3, 4)
        p = _random_form(projective_plane, rng, degree, terms=3)
        if rng.random() < 0.5:
            p = projective_plane.zero
            for g in generators:
                if g.degree <= degree:
                    p = p + g * _random_form(projective_plane, rng, degree - g.degree, terms=2)
        remainder = normal_form(p, basis)
        assert remainder.is_zero == _in_span_of_multiples(p, generators, degree)
        assert _in_span_of_multiples(p - remainder, generators, degree)
        leading = basis.leading_monomials
        for m in remainder.monomials:
            assert not any(all(a <= b for a, b in zip(lm, m)) for lm in leading)
        checked += 1


def test_koszul_pairs_are_syzygies(plane):
    rng = random.Random(11)
    checked = 0
    while checked < 10:
        generators = [random_polynomial(plane, rng, terms=3, degree=3) for _ in range(3)]
        if any(g.is_zero or g.is_constant for g in generators):
            continue
        syzygies = syzygy_basis(generators)
        assert syzygies.annihilates()
        for i in range(3):
            for j in range(i + 1, 3):
                vector = [plane.zero] * 3
                vector[i] = generators[j]
                vector[j] = -generators[i]
                assert module_membership(vector, syzygies)
        checked += 1
