"""Exact sparse polynomials over the rationals.

A :class:`Polynomial` pairs a :class:`PolynomialRing` (an ordered tuple of
variable names) with a sympy ``PolyElement`` living in the degrevlex ring over
``QQ`` on those names. The Groebner engine moves elements into rings carrying
other orders; everything handed back to callers is in the canonical ring.
"""
import logging
import operator
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, Symbol
from sympy.polys.polyerrors import GeneratorsError
from sympy.polys.rings import PolyRing

from .errors import (
    NameCollisionError,
    NotHomogeneousError,
    PreconditionError,
    RingMismatchError,
    UnknownVariableError,
    ZeroPolynomialError,
)
from .orders import DEGREVLEX

LOGGER = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Rational = QQ.dtype

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def to_rational(value) -> Rational:
    """Coerce ints, "p/q" strings and rational-like objects into ``QQ``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        numerator, _, denominator = value.strip().partition("/")
        return QQ(int(numerator), int(denominator or 1))
    try:
        return QQ(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError(f"cannot read {value!r} as an exact rational") from None


def format_rational(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=None)
def _sympy_ring(variables: Tuple[str, ...], order) -> PolyRing:
    return PolyRing(tuple(Symbol(name) for name in variables), QQ, order)


@dataclass(frozen=True)
class PolynomialRing:
    """``QQ[x_1, ..., x_n]`` with variables in declaration order."""

    variables: Tuple[str, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise NameCollisionError(f"duplicate variable names in {variables}")
        for name in variables:
            if not IDENTIFIER.fullmatch(name):
                raise ValueError(f"{name!r} is not a valid variable name")

    @classmethod
    def from_names(cls, names: Union[str, Iterable[str]]) -> "PolynomialRing":
        if isinstance(names, str):
            names = [name.strip() for name in names.split(",") if name.strip()]
        return cls(tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def sympy_ring(self, order=DEGREVLEX) -> PolyRing:
        return _sympy_ring(self.variables, order)

    def index(self, variable: Union[int, str]) -> int:
        if not isinstance(variable, str):
            variable = operator.index(variable)
            if not 0 <= variable < self.nvars:
                raise IndexError(f"variable index {variable} out of range for {self}")
            return variable
        try:
            return self.variables.index(variable)
        except ValueError:
            raise UnknownVariableError(variable) from None

    def wrap(self, element) -> "Polynomial":
        """Wrap a sympy element of any ring on a subset of our variables."""
        canonical = self.sympy_ring()
        if element.ring != canonical:
            try:
                element = element.set_ring(canonical)
            except GeneratorsError:
                raise RingMismatchError(f"{element} does not live in {self}") from None
        return Polynomial(self, element)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, self.sympy_ring().zero)

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, self.sympy_ring().one)

    def constant(self, value) -> "Polynomial":
        return Polynomial(self, self.sympy_ring().ground_new(to_rational(value)))

    def gen(self, variable: Union[int, str]) -> "Polynomial":
        return Polynomial(self, self.sympy_ring().gens[self.index(variable)])

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(Polynomial(self, g) for g in self.sympy_ring().gens)

    def from_terms(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        ring = self.sympy_ring()
        cleaned = {}
        for monomial, coefficient in terms.items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != self.nvars or any(e < 0 for e in monomial):
                raise ValueError(f"monomial {monomial} does not fit {self}")
            cleaned[monomial] = to_rational(coefficient)
        return Polynomial(self, ring.from_dict(cleaned))

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def extend(self, names: Sequence[str], front: bool = False) -> "PolynomialRing":
        names = tuple(names)
        clash = set(names) & set(self.variables)
        if clash:
            raise NameCollisionError(f"{sorted(clash)} already belong to {self}")
        if front:
            return PolynomialRing(names + self.variables)
        return PolynomialRing(self.variables + names)

    def drop(self, names: Iterable[Union[int, str]]) -> "PolynomialRing":
        dropped = {self.index(name) for name in names}
        return PolynomialRing(
            tuple(v for i, v in enumerate(self.variables) if i not in dropped)
        )

    def fresh_names(
        self, stem: str, count: int, avoid: Iterable[str] = (), numbered: bool = False
    ) -> Tuple[str, ...]:
        """``count`` names ``stem0, stem1, ...`` unused by the ring.

        A single name is ``stem`` itself unless ``numbered`` is set.
        """
        taken = set(self.variables) | set(avoid)
        prefix = stem
        while True:
            if count == 1 and not numbered and prefix not in taken:
                return (prefix,)
            names = tuple(f"{prefix}{i}" for i in range(count))
            if not taken & set(names):
                return names
            prefix += "_"

    def __str__(self):
        return f"QQ[{','.join(self.variables)}]"


class Polynomial:
    """Immutable exact polynomial.

    Arithmetic between polynomials of different rings raises
    :class:`RingMismatchError`; ints and rationals are promoted to constants.
    """

    __slots__ = ("ring", "element", "_hash")

    def __init__(self, ring: PolynomialRing, element):
        self.ring = ring
        self.element = element
        self._hash = None

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} and {other.ring} differ")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, self.element + other.element)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, self.element - other.element)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, other.element - self.element)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, self.element * other.element)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(self.ring, -self.element)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        return Polynomial(self.ring, self.element**exponent)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and dict(self.element) == dict(other.element)
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.element.items())))
        return self._hash

    def __bool__(self):
        return bool(self.element)

    @property
    def is_zero(self) -> bool:
        return not self.element

    @property
    def terms(self) -> Dict[Monomial, Rational]:
        """Monomial -> coefficient, in descending degrevlex order."""
        return dict(self.element.terms())

    def ordered_terms(self, order=DEGREVLEX):
        return self.element.terms(order)

    @property
    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(self.element.itermonoms())

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(m) for m in self.element.itermonoms())

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.element.itermonoms())

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.element.itermonoms()}) <= 1

    def support_variables(self) -> Tuple[int, ...]:
        used = set()
        for monomial in self.element.itermonoms():
            used.update(i for i, e in enumerate(monomial) if e)
        return tuple(sorted(used))

    def coefficient(self, monomial: Monomial) -> Rational:
        return self.element.get(tuple(monomial), QQ.zero)

    def leading_monomial(self, order=DEGREVLEX) -> Monomial:
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return max(self.element.itermonoms(), key=order)

    def leading_coefficient(self, order=DEGREVLEX) -> Rational:
        return self.element[self.leading_monomial(order)]

    def monic(self, order=DEGREVLEX) -> "Polynomial":
        if self.is_zero:
            return self
        return Polynomial(self.ring, self.element.quo_ground(self.leading_coefficient(order)))

    def scale(self, value) -> "Polynomial":
        return Polynomial(self.ring, self.element.mul_ground(to_rational(value)))

    def primitive(self) -> "Polynomial":
        """Scaled to coprime integer coefficients with positive leading coefficient."""
        if self.is_zero:
            return self
        _, element = self.element.clear_denoms()
        element = element.primitive()[1]
        if element.LC < 0:
            element = -element
        return Polynomial(self.ring, element.set_ring(self.ring.sympy_ring()))

    def in_order(self, order):
        """The underlying element in the ring carrying ``order``."""
        return self.element.set_ring(self.ring.sympy_ring(order))

    def to_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Same polynomial read in ``ring``, matching variables by name."""
        if ring == self.ring:
            return self
        return ring.wrap(self.element)

    def diff(self, variable: Union[int, str]) -> "Polynomial":
        gen = self.ring.sympy_ring().gens[self.ring.index(variable)]
        return Polynomial(self.ring, self.element.diff(gen))

    def evaluate(self, point) -> Rational:
        coordinates = _coordinates(point)
        if len(coordinates) != self.ring.nvars:
            raise ValueError(f"point {point} does not have {self.ring.nvars} coordinates")
        total = QQ.zero
        for monomial, coefficient in self.element.iterterms():
            value = coefficient
            for c, e in zip(coordinates, monomial):
                if e:
                    value *= c**e
            total += value
        return total

    def translate(self, point) -> "Polynomial":
        """``f(x + p)``; the result evaluated at the origin equals ``f(p)``."""
        coordinates = _coordinates(point)
        if len(coordinates) != self.ring.nvars:
            raise ValueError(f"point {point} does not have {self.ring.nvars} coordinates")
        gens = self.ring.sympy_ring().gens
        replacements = [(g, g + c) for g, c in zip(gens, coordinates) if c]
        if not replacements or self.is_zero:
            return self
        return Polynomial(self.ring, self.element.compose(replacements))

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return self.ring.from_terms(
            {m: c for m, c in self.element.iterterms() if sum(m) == degree}
        )

    def multiplicity(self) -> int:
        """Order of vanishing at the origin."""
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no multiplicity")
        return min(sum(m) for m in self.element.itermonoms())

    def homogenize(self, name: str) -> "Polynomial":
        ring = self.ring.extend([name])
        degree = self.degree
        return ring.from_terms(
            {m + (degree - sum(m),): c for m, c in self.element.iterterms()}
        )

    def dehomogenize(self, variable: Union[int, str]) -> "Polynomial":
        index = self.ring.index(variable)
        if self.ring.nvars < 2:
            raise PreconditionError("cannot dehomogenize a univariate polynomial")
        if not self.is_homogeneous:
            raise NotHomogeneousError(f"{self} is not homogeneous")
        ring = self.ring.drop([index])
        return ring.from_terms(
            {m[:index] + m[index + 1:]: c for m, c in self.element.iterterms()}
        )

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring})"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text in the parser's grammar, terms in descending degrevlex."""
    pieces = []
    for monomial, coefficient in f.element.terms():
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(f.ring.variables, monomial)
            if e
        ]
        magnitude = abs(coefficient)
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(magnitude)] + factors)
        negative = coefficient < 0
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) or "0"


@dataclass(frozen=True)
class RationalPoint:
    """A point with rational coordinates.

    Projective points keep the representative whose ``chart`` coordinate is 1;
    by default the chart is the last nonzero coordinate.
    """

    coordinates: Tuple[Rational, ...]
    kind: str = "affine"
    chart: Optional[int] = None

    def __post_init__(self):
        coordinates = tuple(to_rational(c) for c in self.coordinates)
        if not coordinates:
            raise ValueError("a point needs at least one coordinate")
        if self.kind not in ("affine", "projective"):
            raise ValueError(f"unknown point kind {self.kind!r}")
        chart = self.chart
        if self.kind == "projective":
            nonzero = [i for i, c in enumerate(coordinates) if c]
            if not nonzero:
                raise ValueError("the zero vector is not a projective point")
            if chart is None:
                chart = nonzero[-1]
            if not coordinates[chart]:
                raise ValueError(f"chart {chart} coordinate of {coordinates} vanishes")
            scale = coordinates[chart]
            coordinates = tuple(c / scale for c in coordinates)
        elif chart is not None:
            raise ValueError("affine points carry no chart")
        object.__setattr__(self, "coordinates", coordinates)
        object.__setattr__(self, "chart", chart)

    @classmethod
    def origin(cls, dimension: int) -> "RationalPoint":
        return cls(tuple(QQ.zero for _ in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    @property
    def is_origin(self) -> bool:
        return not any(self.coordinates)

    def __neg__(self) -> "RationalPoint":
        if self.kind != "affine":
            raise ValueError("only affine points can be negated")
        return RationalPoint(tuple(-c for c in self.coordinates))

    def in_chart(self, chart: int) -> "RationalPoint":
        """Affine coordinates of a projective point in the chart ``x_chart = 1``."""
        if self.kind != "projective":
            raise ValueError("only projective points have charts")
        scale = self.coordinates[chart]
        if not scale:
            raise ValueError(f"{self} does not lie in chart {chart}")
        return RationalPoint(
            tuple(c / scale for i, c in enumerate(self.coordinates) if i != chart)
        )

    @classmethod
    def from_chart(cls, point: "RationalPoint", chart: int) -> "RationalPoint":
        """Projective point whose chart-``chart`` affine coordinates are ``point``."""
        coordinates = list(point.coordinates)
        coordinates.insert(chart, QQ.one)
        return cls(tuple(coordinates), kind="projective", chart=chart)

    def projective_key(self) -> Tuple[Rational, ...]:
        """Representative with first nonzero coordinate 1; equal for equivalent points."""
        first = next(c for c in self.coordinates if c)
        return tuple(c / first for c in self.coordinates)

    def to_strings(self):
        return [format_rational(c) for c in self.coordinates]

    def __str__(self):
        text = [format_rational(c) for c in self.coordinates]
        if self.kind == "projective":
            return "[" + ":".join(text) + "]"
        return "(" + ", ".join(text) + ")"


def _coordinates(point) -> Tuple[Rational, ...]:
    if isinstance(point, RationalPoint):
        return point.coordinates
    return tuple(to_rational(c) for c in point)


def ring_arithmetic(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} and {b.ring} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: Polynomial, variable: Union[int, str]) -> Polynomial:
    return f.diff(variable)


def translate_to_origin(f: Polynomial, point) -> Polynomial:
    return f.translate(point)


def homogenize(f: Polynomial, name: str) -> Polynomial:
    return f.homogenize(name)


def dehomogenize(f: Polynomial, variable: Union[int, str]) -> Polynomial:
    return f.dehomogenize(variable)


def multiplicity_at_origin(f: Polynomial) -> int:
    return f.multiplicity()
