"""Ideal-level algebra on top of the Groebner engine.

Localization at a rational point is done algebraically: after moving the point
to the origin, the primary component at the origin of a zero-dimensional
ideal ``I`` is ``I : (I : m^inf)`` with ``m`` the maximal ideal of the origin.
"""
import logging
import threading
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Union

from .errors import (
    NotZeroDimensionalError,
    PointNotOnVarietyError,
    PreconditionError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .groebner import GroebnerBasis, ResourceLimits, normal_form, reduced_groebner_basis
from .orders import DEGREVLEX, elimination_order
from .polynomials import Monomial, Polynomial, PolynomialRing, RationalPoint

LOGGER = logging.getLogger(__name__)

__all__ = [
    "Ideal",
    "RationalPoint",
    "ideal_membership",
    "ideal_sum",
    "ideal_intersection",
    "ideal_quotient",
    "ideal_quotient_by_ideal",
    "saturation",
    "saturation_by_ideal",
    "eliminate",
    "krull_dimension",
    "standard_monomials",
    "vector_space_dimension",
    "maximal_ideal",
    "translate_ideal",
    "local_primary_component",
    "local_vector_space_dimension",
]


class Ideal:
    """Ideal of a polynomial ring given by generators.

    Reduced Groebner bases are cached per monomial order; the cache may be
    read and filled from several threads.
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        generators = tuple(generators)
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} lives in {g.ring}, not {ring}")
        self.ring = ring
        self.generators = generators
        self._bases = {}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, ring: PolynomialRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(text) for text in texts])

    @classmethod
    def unit(cls, ring: PolynomialRing) -> "Ideal":
        return cls(ring, [ring.one])

    def groebner_basis(self, order=DEGREVLEX, limits: Optional[ResourceLimits] = None) -> GroebnerBasis:
        with self._lock:
            cached = self._bases.get(order)
        if cached is not None:
            return cached
        nonzero = [g for g in self.generators if not g.is_zero]
        if nonzero:
            basis = reduced_groebner_basis(nonzero, order, limits)
        else:
            basis = GroebnerBasis(self.ring, order, ())
        with self._lock:
            return self._bases.setdefault(order, basis)

    @property
    def basis(self) -> GroebnerBasis:
        return self.groebner_basis()

    @property
    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.generators)

    @property
    def is_unit(self) -> bool:
        if any(g.is_constant and not g.is_zero for g in self.generators):
            return True
        return self.basis.is_unit

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.basis)

    def __contains__(self, p: Polynomial) -> bool:
        return ideal_membership(p, self)

    def contains_ideal(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} and {other.ring} differ")
        return all(g in self for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def evaluate(self, point) -> List:
        return [g.evaluate(point) for g in self.generators]

    def vanishes_at(self, point) -> bool:
        return not any(self.evaluate(point))

    def to_ring(self, ring: PolynomialRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _check_same_ring(*ideals: Ideal):
    ring = ideals[0].ring
    for ideal in ideals[1:]:
        if ideal.ring != ring:
            raise RingMismatchError(f"{ideal.ring} and {ring} differ")


def ideal_membership(p: Polynomial, ideal: Ideal) -> bool:
    if p.ring != ideal.ring:
        raise RingMismatchError(f"{p.ring} and {ideal.ring} differ")
    return normal_form(p, ideal.basis).is_zero


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _check_same_ring(a, b)
    return Ideal(a.ring, a.generators + b.generators)


def ideal_intersection(a: Ideal, b: Ideal, limits=None) -> Ideal:
    """``a`` and ``b`` intersected, through ``t*a + (1 - t)*b`` with ``t`` eliminated."""
    _check_same_ring(a, b)
    if a.is_zero or b.is_zero:
        return Ideal(a.ring, [])
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    (name,) = a.ring.fresh_names("t", 1)
    ring = a.ring.extend([name], front=True)
    t = ring.gen(0)
    generators = [t * g.to_ring(ring) for g in a.generators if not g.is_zero]
    generators += [(1 - t) * g.to_ring(ring) for g in b.generators if not g.is_zero]
    basis = reduced_groebner_basis(generators, elimination_order(ring.nvars, [0]), limits)
    kept = [g.to_ring(a.ring) for g in basis.polynomials if 0 not in g.support_variables()]
    return Ideal(a.ring, kept)


def ideal_quotient(ideal: Ideal, p: Polynomial, limits=None) -> Ideal:
    """``(I : p) = {q : q*p in I}``, from the intersection of ``I`` and ``(p)``."""
    if p.ring != ideal.ring:
        raise RingMismatchError(f"{p.ring} and {ideal.ring} differ")
    if p.is_zero:
        raise ZeroPolynomialError("cannot take the quotient by zero")
    if p.is_constant:
        return ideal
    meet = ideal_intersection(ideal, Ideal(ideal.ring, [p]), limits)
    quotients = [ideal.ring.wrap(g.element.exquo(p.element)) for g in meet.generators]
    return Ideal(ideal.ring, quotients)


def ideal_quotient_by_ideal(ideal: Ideal, other: Ideal, limits=None) -> Ideal:
    _check_same_ring(ideal, other)
    generators = [g for g in other.generators if not g.is_zero]
    if not generators:
        return Ideal.unit(ideal.ring)
    result = ideal_quotient(ideal, generators[0], limits)
    for g in generators[1:]:
        result = ideal_intersection(result, ideal_quotient(ideal, g, limits), limits)
    return result


def saturation(ideal: Ideal, p: Polynomial, limits=None) -> Ideal:
    """``(I : p^inf)``, iterating quotients until the basis stops changing."""
    current = ideal
    steps = 0
    while True:
        following = ideal_quotient(current, p, limits)
        steps += 1
        if following == current:
            LOGGER.debug(f"saturation by {p} stable after {steps} quotients")
            return current
        current = following


def saturation_by_ideal(ideal: Ideal, other: Ideal, limits=None) -> Ideal:
    """``(I : J^inf)`` as the intersection of the saturations by each generator of ``J``."""
    _check_same_ring(ideal, other)
    generators = [g for g in other.generators if not g.is_zero]
    if not generators:
        return Ideal.unit(ideal.ring)
    result = saturation(ideal, generators[0], limits)
    for g in generators[1:]:
        result = ideal_intersection(result, saturation(ideal, g, limits), limits)
    return result


def eliminate(
    ideal: Ideal, variables: Iterable[Union[int, str]], drop: bool = False, limits=None
) -> Ideal:
    """``I`` intersected with the subring free of ``variables``.

    With ``drop`` the result lives in the smaller ring.
    """
    indices = sorted({ideal.ring.index(v) for v in variables})
    if not indices:
        return ideal
    if len(indices) == ideal.ring.nvars:
        raise PreconditionError("cannot eliminate every variable")
    order = elimination_order(ideal.ring.nvars, indices)
    kept = [
        g
        for g in ideal.groebner_basis(order, limits).polynomials
        if not set(indices) & set(g.support_variables())
    ]
    if drop:
        ring = ideal.ring.drop(indices)
        return Ideal(ring, [g.to_ring(ring) for g in kept])
    return Ideal(ideal.ring, kept)


def _leading_monomials(ideal: Ideal) -> List[Monomial]:
    return list(ideal.basis.leading_monomials)


def krull_dimension(ideal: Ideal) -> int:
    """Dimension of ``R/I`` from maximal independent sets of the leading terms; -1 for ``(1)``."""
    if ideal.is_unit:
        return -1
    supports = [
        {i for i, e in enumerate(m) if e} for m in _leading_monomials(ideal)
    ]
    n = ideal.ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(support <= chosen for support in supports):
                return size
    return 0


def standard_monomials(ideal: Ideal) -> List[Monomial]:
    """Monomials outside the leading-term ideal of a zero-dimensional ideal."""
    if ideal.is_unit:
        return []
    if krull_dimension(ideal) != 0:
        raise NotZeroDimensionalError(f"{ideal} is not zero-dimensional")
    leading = _leading_monomials(ideal)
    n = ideal.ring.nvars

    def standard(monomial):
        return not any(all(a <= b for a, b in zip(lm, monomial)) for lm in leading)

    start = (0,) * n
    found, frontier = {start}, [start]
    while frontier:
        monomial = frontier.pop()
        for i in range(n):
            successor = monomial[:i] + (monomial[i] + 1,) + monomial[i + 1:]
            if successor not in found and standard(successor):
                found.add(successor)
                frontier.append(successor)
    return sorted(found, key=DEGREVLEX)


def vector_space_dimension(ideal: Ideal) -> int:
    return len(standard_monomials(ideal))


def maximal_ideal(ring: PolynomialRing, point: Optional[RationalPoint] = None) -> Ideal:
    if point is None:
        return Ideal(ring, ring.gens)
    return Ideal(ring, [x - c for x, c in zip(ring.gens, point.coordinates)])


def translate_ideal(ideal: Ideal, point) -> Ideal:
    return Ideal(ideal.ring, [g.translate(point) for g in ideal.generators])


def _at_origin(ideal: Ideal, point: RationalPoint) -> Ideal:
    if point.dimension != ideal.ring.nvars:
        raise ValueError(f"point {point} does not have {ideal.ring.nvars} coordinates")
    if not ideal.vanishes_at(point):
        raise PointNotOnVarietyError(f"{point} is not a zero of {ideal}")
    if point.is_origin:
        return ideal
    return translate_ideal(ideal, point)


def local_primary_component(ideal: Ideal, point: RationalPoint, limits=None) -> Ideal:
    """Component of ``I`` at ``point``, in coordinates where the point is the origin.

    ``point`` must be an isolated point of ``V(I)``.
    """
    moved = _at_origin(ideal, point)
    elsewhere = saturation_by_ideal(moved, maximal_ideal(moved.ring), limits)
    if elsewhere.is_unit:
        component = moved
    else:
        component = ideal_quotient_by_ideal(moved, elsewhere, limits)
    if krull_dimension(component) != 0:
        raise NotZeroDimensionalError(f"{point} is not an isolated point of V{ideal}")
    return component


def local_vector_space_dimension(ideal: Ideal, point: RationalPoint, limits=None) -> int:
    """Colength of ``I`` localized at ``point``."""
    moved = _at_origin(ideal, point)
    if krull_dimension(moved) == 0:
        elsewhere = saturation_by_ideal(moved, maximal_ideal(moved.ring), limits)
        rest = 0 if elsewhere.is_unit else vector_space_dimension(elsewhere)
        return vector_space_dimension(moved) - rest
    return vector_space_dimension(local_primary_component(ideal, point, limits))
