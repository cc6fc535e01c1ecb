"""Singularities of hypersurfaces.

Affine verdicts work with the gradient ideal ``J(f)`` and the Jacobian ideal
``I(f) = (f) + J(f)``. The global locally-Eulerian check ``1 in I(f) + (J(f):f)``
needs no singular point to be rational; per-point data (Milnor and Tjurina
numbers, labels) is only produced at rational points.
"""
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import product
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from sympy import Matrix, Poly, Symbol, ilcm
from sympy import QQ
from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

from .errors import (
    InconsistentVerdictError,
    NonIsolatedSingularityError,
    NotHomogeneousError,
    NotReducedError,
    NotZeroDimensionalError,
    PointNotOnVarietyError,
    PreconditionError,
    SmoothPointError,
    ZeroPolynomialError,
)
from .ideals import (
    Ideal,
    eliminate,
    ideal_quotient,
    krull_dimension,
    local_vector_space_dimension,
    vector_space_dimension,
)
from .polynomials import Polynomial, PolynomialRing, RationalPoint, format_rational

LOGGER = logging.getLogger(__name__)


def gradient_ideal(f: Polynomial) -> Ideal:
    if f.is_constant:
        raise PreconditionError(f"{f} is constant")
    return Ideal(f.ring, [f.diff(i) for i in range(f.ring.nvars)])


def jacobian_ideal(f: Polynomial) -> Ideal:
    """``(f, df/dx_1, ..., df/dx_n)``; ``f`` is always the first generator."""
    if f.is_constant:
        raise PreconditionError(f"{f} is constant")
    return Ideal(f.ring, [f] + [f.diff(i) for i in range(f.ring.nvars)])


class AffineHypersurface:
    """``V(f)`` in affine space; derived ideals are computed once."""

    projective = False

    def __init__(self, f: Polynomial):
        if f.is_constant:
            raise PreconditionError(f"{f} is constant")
        self.f = f

    @classmethod
    def from_text(cls, text: str, variables) -> "AffineHypersurface":
        return cls(PolynomialRing.from_names(variables).parse(text))

    @property
    def ring(self) -> PolynomialRing:
        return self.f.ring

    @cached_property
    def gradient(self) -> Ideal:
        return gradient_ideal(self.f)

    @cached_property
    def jacobian(self) -> Ideal:
        return jacobian_ideal(self.f)

    @cached_property
    def colon(self) -> Ideal:
        """``(J(f) : f)``"""
        return ideal_quotient(self.gradient, self.f)

    @cached_property
    def singular_dimension(self) -> int:
        return krull_dimension(self.jacobian)

    @property
    def is_smooth(self) -> bool:
        return self.jacobian.is_unit

    @cached_property
    def is_reduced(self) -> bool:
        return self.singular_dimension <= self.ring.nvars - 2

    def require_isolated(self):
        if not self.is_reduced:
            raise NotReducedError(f"{self.f} is not reduced")
        if not has_isolated_singularities(self):
            raise NonIsolatedSingularityError(f"{self.f} has non-isolated singularities")

    def __str__(self):
        return f"V({self.f}) in A^{self.ring.nvars}"


class ProjectiveHypersurface:
    """``V(f)`` in projective space, ``f`` homogeneous of degree at least 2."""

    projective = True

    def __init__(self, f: Polynomial):
        if f.is_zero or not f.is_homogeneous:
            raise NotHomogeneousError(f"{f} is not a nonzero homogeneous polynomial")
        if f.degree < 2:
            raise PreconditionError(f"{f} has degree {f.degree} < 2")
        self.f = f
        self._charts: Dict[int, AffineHypersurface] = {}

    @classmethod
    def from_text(cls, text: str, variables) -> "ProjectiveHypersurface":
        return cls(PolynomialRing.from_names(variables).parse(text))

    @property
    def ring(self) -> PolynomialRing:
        return self.f.ring

    @property
    def degree(self) -> int:
        return self.f.degree

    @cached_property
    def gradient(self) -> Ideal:
        return gradient_ideal(self.f)

    @cached_property
    def jacobian(self) -> Ideal:
        return jacobian_ideal(self.f)

    @cached_property
    def is_reduced(self) -> bool:
        return krull_dimension(self.jacobian) <= self.ring.nvars - 2

    @property
    def is_smooth(self) -> bool:
        return krull_dimension(self.gradient) <= 0

    def chart(self, index: int) -> AffineHypersurface:
        if index not in self._charts:
            self._charts[index] = AffineHypersurface(self.f.dehomogenize(index))
        return self._charts[index]

    def require_isolated(self):
        if not self.is_reduced:
            raise NotReducedError(f"{self.f} is not reduced")
        if not has_isolated_singularities(self):
            raise NonIsolatedSingularityError(f"{self.f} has non-isolated singularities")

    def __str__(self):
        return f"V({self.f}) in P^{self.ring.nvars - 1}"


Hypersurface = Union[AffineHypersurface, ProjectiveHypersurface]


def _affine(X) -> AffineHypersurface:
    if isinstance(X, Polynomial):
        return AffineHypersurface(X)
    if isinstance(X, ProjectiveHypersurface):
        raise TypeError("expected an affine hypersurface")
    return X


def check_reduced(X: Hypersurface) -> bool:
    """Squarefree test: ``I(f)`` has codimension at least 2."""
    if isinstance(X, Polynomial):
        X = AffineHypersurface(X)
    return X.is_reduced


def has_isolated_singularities(X: Hypersurface) -> bool:
    if isinstance(X, Polynomial):
        X = AffineHypersurface(X)
    if not X.is_reduced:
        raise NotReducedError(f"{X.f} is not reduced")
    if X.projective:
        return krull_dimension(X.gradient) <= 1
    return X.singular_dimension <= 0


class SingularPoints(NamedTuple):
    points: List[RationalPoint]
    complete: bool


def _rational_roots(g: Polynomial, index: int) -> List:
    if g.is_constant:
        return []
    symbol = Symbol(g.ring.variables[index])
    univariate = Poly(g.element.as_expr(), symbol, domain="QQ").sqf_part()
    return sorted(QQ.from_sympy(root) for root in univariate.ground_roots())


def _affine_rational_points(ideal: Ideal) -> SingularPoints:
    if ideal.is_unit:
        return SingularPoints([], True)
    if krull_dimension(ideal) != 0:
        raise NonIsolatedSingularityError(f"V{ideal} is not finite")
    n = ideal.ring.nvars
    candidates = []
    for i in range(n):
        others = [k for k in range(n) if k != i]
        pool = eliminate(ideal, others).generators if others else ideal.basis.polynomials
        univariate = min(pool, key=lambda g: (g.degree, str(g)))
        candidates.append(_rational_roots(univariate, i))
    points = [
        RationalPoint(coordinates)
        for coordinates in product(*candidates)
        if ideal.vanishes_at(coordinates)
    ]
    found = sum(local_vector_space_dimension(ideal, p) for p in points)
    complete = found == vector_space_dimension(ideal)
    LOGGER.debug(f"{len(points)} rational points of V{ideal}, complete: {complete}")
    return SingularPoints(points, complete)


def rational_singular_points(X: Hypersurface) -> SingularPoints:
    """Rational singular points, and whether they exhaust the singular scheme."""
    if isinstance(X, Polynomial):
        X = AffineHypersurface(X)
    X.require_isolated()
    if not X.projective:
        return _affine_rational_points(X.jacobian)
    seen, points, complete = set(), [], True
    for index in range(X.ring.nvars):
        chart = X.chart(index)
        if chart.f.is_constant:
            continue
        found = _affine_rational_points(chart.jacobian)
        complete = complete and found.complete
        for affine in found.points:
            point = RationalPoint.from_chart(affine, index)
            key = point.projective_key()
            if key not in seen:
                seen.add(key)
                points.append(RationalPoint(point.coordinates, kind="projective"))
    points.sort(key=lambda p: p.projective_key())
    return SingularPoints(points, complete)


def _require_singular(X: AffineHypersurface, point: RationalPoint):
    if X.f.evaluate(point):
        raise PointNotOnVarietyError(f"{point} is not on {X}")
    if any(g.evaluate(point) for g in X.gradient.generators):
        raise SmoothPointError(f"{X} is smooth at {point}")


def milnor_tjurina(f, point: RationalPoint) -> Tuple[int, int]:
    """Milnor and Tjurina numbers of ``f`` at the singular point ``point``."""
    X = _affine(f)
    _require_singular(X, point)
    try:
        milnor = local_vector_space_dimension(X.gradient, point)
        tjurina = local_vector_space_dimension(X.jacobian, point)
    except NotZeroDimensionalError as exc:
        raise NonIsolatedSingularityError(str(exc)) from exc
    if tjurina > milnor:
        raise InconsistentVerdictError(f"tau={tjurina} > mu={milnor} at {point} for {X.f}")
    return milnor, tjurina


def is_locally_eulerian(X, point: Optional[RationalPoint] = None, check: bool = True) -> bool:
    """Whether ``f`` lies in ``J(f)`` localized at ``point``, or at every singular point."""
    X = _affine(X)
    if check:
        X.require_isolated()
    if point is None:
        if X.is_smooth:
            return True
        return (X.jacobian + X.colon).is_unit
    return any(g.evaluate(point) for g in X.colon.basis.polynomials)


@dataclass(frozen=True)
class QuasiHomogeneousType:
    """``<weights, alpha> == degree`` for every exponent ``alpha`` of ``f``."""

    degree: int
    weights: Tuple[int, ...]

    @property
    def euler_coefficients(self):
        return tuple(QQ(w, self.degree) for w in self.weights)

    def __str__(self):
        return f"d={self.degree}, r=({', '.join(str(w) for w in self.weights)})"


def _weight_solutions(support) -> Optional[Tuple[Matrix, Matrix]]:
    """Exact solutions ``base + directions * p`` of ``<alpha, r> = 1`` over the support.

    None when the system is inconsistent over QQ.
    """
    A = Matrix(support)
    try:
        solution, params = A.gauss_jordan_solve(Matrix([1] * len(support)))
    except ValueError:
        return None
    origin = {p: 0 for p in params}
    base = solution.subs(origin)
    directions = Matrix.hstack(*[solution.diff(p) for p in params]) if params else Matrix.zeros(A.cols, 0)
    return base, directions


def _positive_weights(base: Matrix, directions: Matrix) -> Optional[List]:
    n, k = directions.shape
    if k == 0:
        return list(base)
    # maximize t with t <= r_i(p) and t <= 1; p = u - v with u, v >= 0
    rows = [[1] + [-directions[i, j] for j in range(k)] + [directions[i, j] for j in range(k)] for i in range(n)]
    rows.append([1] + [0] * (2 * k))
    bounds = list(base) + [1]
    try:
        optimum, point = linprog(Matrix([[-1] + [0] * (2 * k)]), Matrix(rows), Matrix(bounds))
    except (InfeasibleLPError, UnboundedLPError):
        return None
    if -optimum <= 0:
        return None
    p = Matrix([point[1 + j] - point[1 + k + j] for j in range(k)])
    return list(base + directions * p)


def quasi_homogeneous_type(f: Polynomial) -> Optional[QuasiHomogeneousType]:
    """Positive weights making ``f`` weighted homogeneous in the given coordinates.

    The equations ``<alpha, r> = 1`` over the exponents ``alpha`` of ``f`` are solved
    exactly first; positivity is then searched over their solution space by
    maximizing ``min(r_i, 1)``. Every candidate is checked against the Euler relation.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no weights")
    n = f.ring.nvars
    support = [list(m) for m in f.monomials]
    solutions = _weight_solutions(support)
    if solutions is None:
        return None
    weights = _positive_weights(*solutions)
    if weights is None:
        return None
    weights = [QQ.from_sympy(w) for w in weights]
    if any(w <= 0 for w in weights):
        return None
    if any(sum(e * w for e, w in zip(m, weights)) != 1 for m in support):
        LOGGER.debug(f"weights {weights} miss the support of {f}")
        return None
    scale = 1
    for w in weights:
        scale = ilcm(scale, int(w.denominator))
    integers = [int((w * scale).numerator) for w in weights]
    common = gcd(scale, *integers)
    result = QuasiHomogeneousType(scale // common, tuple(w // common for w in integers))
    euler = f.ring.zero
    for coefficient, x, i in zip(result.euler_coefficients, f.ring.gens, range(n)):
        euler = euler + x * f.diff(i) * coefficient
    if euler != f:
        LOGGER.debug(f"weights {result} do not satisfy the Euler relation of {f}")
        return None
    return result


@dataclass(frozen=True)
class SingularityReport:
    point: RationalPoint
    multiplicity: int
    milnor: int
    tjurina: int
    locally_eulerian: bool
    label: str
    evidence: Dict[str, object] = field(default_factory=dict, compare=False)


def _quadratic_rank(local: Polynomial) -> int:
    quadratic = local.homogeneous_part(2)
    n = local.ring.nvars
    origin = (0,) * n
    hessian = Matrix(
        n,
        n,
        lambda i, j: QQ.to_sympy(quadratic.diff(int(i)).diff(int(j)).evaluate(origin)),
    )
    return hessian.rank()


def _plane_tangent_evidence(local: Polynomial, point: RationalPoint) -> Dict[str, object]:
    a = local.coefficient((2, 0))
    b = local.coefficient((1, 1))
    c = local.coefficient((0, 2))
    discriminant = b * b - 4 * a * c
    evidence = {"discriminant": format_rational(discriminant)}
    if discriminant:
        return evidence
    x, y = local.ring.gens
    tangent = x * (2 * a) + y * b if a else x * b + y * (2 * c)
    origin = RationalPoint.origin(2)
    try:
        contact = local_vector_space_dimension(Ideal(local.ring, [local, tangent]), origin)
    except NotZeroDimensionalError:
        contact = None
    evidence["tangent_line"] = str(tangent.translate(-point).primitive())
    evidence["tangent_contact"] = contact
    evidence["contact_label"] = None if contact is None else f"A{contact}"
    return evidence


def analyze_point(f, point: RationalPoint) -> SingularityReport:
    """Multiplicity, Milnor/Tjurina numbers and a label at a singular point.

    Double points whose quadratic part has corank at most one are ``A_mu``;
    corank two or more gives ``double-point``; multiplicity three or more gives
    ``non-double-point``.
    """
    X = _affine(f)
    _require_singular(X, point)
    local = X.f.translate(point)
    multiplicity = local.multiplicity()
    milnor, tjurina = milnor_tjurina(X, point)
    eulerian = is_locally_eulerian(X, point, check=False)
    if eulerian != (milnor == tjurina):
        raise InconsistentVerdictError(
            f"locally Eulerian={eulerian} but mu={milnor}, tau={tjurina} at {point}"
        )
    evidence: Dict[str, object] = {}
    if multiplicity == 2:
        rank = _quadratic_rank(local)
        corank = X.ring.nvars - rank
        evidence["quadratic_rank"] = rank
        if (corank == 0) != (milnor == 1):
            raise InconsistentVerdictError(f"rank {rank} quadratic part with mu={milnor} at {point}")
        label = f"A{milnor}" if corank <= 1 else "double-point"
        if X.ring.nvars == 2:
            evidence.update(_plane_tangent_evidence(local, point))
    else:
        label = "non-double-point"
    LOGGER.info(f"{X.f} at {point}: m={multiplicity}, mu={milnor}, tau={tjurina}, {label}")
    return SingularityReport(point, multiplicity, milnor, tjurina, eulerian, label, evidence)


def classify_plane_singularity(f, point: RationalPoint) -> SingularityReport:
    X = _affine(f)
    if X.ring.nvars != 2:
        raise PreconditionError(f"{X.f} is not a plane curve")
    return analyze_point(X, point)


def intersection_multiplicity_with_line(f: Polynomial, point: RationalPoint, line: Polynomial) -> int:
    if line.is_zero or line.degree != 1:
        raise PreconditionError(f"{line} is not a line")
    if f.evaluate(point) or line.evaluate(point):
        raise PointNotOnVarietyError(f"{point} is not on both {f} and {line}")
    return local_vector_space_dimension(Ideal(f.ring, [f, line]), point)


def singularity_reports(X: Hypersurface, points: List[RationalPoint]) -> List[SingularityReport]:
    """Reports for rational singular points; projective ones are read in their own chart."""
    if isinstance(X, Polynomial):
        X = AffineHypersurface(X)
    if not X.projective:
        return [analyze_point(X, p) for p in points]
    reports = []
    for p in points:
        report = analyze_point(X.chart(p.chart), p.in_chart(p.chart))
        reports.append(replace(report, point=p))
    return reports


@dataclass(frozen=True)
class ChartEvidence:
    chart: int
    variable: str
    polynomial: Polynomial
    smooth: bool
    locally_eulerian: bool
    euler_relation: bool
    jacobian_matches: bool


@dataclass(frozen=True)
class GradientLinearTypeVerdict:
    is_linear_type: bool
    charts: Tuple[ChartEvidence, ...]


def _chart_evidence(X: ProjectiveHypersurface, index: int) -> ChartEvidence:
    chart = X.chart(index)
    F = chart.f
    d = X.degree
    partials = [X.f.diff(j).dehomogenize(index) for j in range(X.ring.nvars)]
    euler = partials[index]
    for k in range(F.ring.nvars):
        euler = euler + F.ring.gen(k) * F.diff(k)
    euler_relation = euler == F * d
    jacobian_matches = Ideal(F.ring, partials) == chart.jacobian
    if not (euler_relation and jacobian_matches):
        raise InconsistentVerdictError(f"chart {index} of {X.f} breaks the dehomogenized Euler relation")
    smooth = chart.is_smooth
    eulerian = True if smooth else is_locally_eulerian(chart, check=False)
    LOGGER.info(f"chart {X.ring.variables[index]}=1 of {X.f}: locally Eulerian {eulerian}")
    return ChartEvidence(
        index, X.ring.variables[index], F, smooth, eulerian, euler_relation, jacobian_matches
    )


def gradient_linear_type(X: ProjectiveHypersurface) -> GradientLinearTypeVerdict:
    """Chart-wise test: ``J(f)`` is of linear type iff every chart is locally Eulerian."""
    if isinstance(X, Polynomial):
        X = ProjectiveHypersurface(X)
    X.require_isolated()
    charts = tuple(_chart_evidence(X, i) for i in range(X.ring.nvars))
    return GradientLinearTypeVerdict(all(c.locally_eulerian for c in charts), charts)


FAMILY_RING = PolynomialRing(("x", "y"))


def family_polynomial(a: int, b: int, c: int, d: int) -> Polynomial:
    x, y = FAMILY_RING.gens
    return x**a + x**c * y**d + y**b


def family_prediction(a: int, b: int, c: int, d: int) -> Tuple[str, Optional[str]]:
    """Predicted verdict for ``x^a + x^c*y^d + y^b`` and the rule that gives it.

    Cases 1-8 predict ``true``. Regions I-III (with ``a, b >= 3``) predict
    ``conditional-on-QH``: locally Eulerian exactly when quasi-homogeneous.
    Cases are tried first.
    """
    large = a >= 3 and b >= 3
    cases = [
        c >= a and d >= b,
        a >= 2 and b >= 2 and c == a - 1 and d == b - 1,
        a >= 2 and b >= 2 and c == 1 and d == 1,
        large and c == 1 and 2 * d <= b + 1,
        large and d == 1 and 2 * c <= a + 1,
        large and c == a - 1 and 2 * d >= b - 1,
        large and d == b - 1 and 2 * c >= a - 1,
        a == 2 or b == 2,
    ]
    for number, holds in enumerate(cases, start=1):
        if holds:
            return "true", f"case {number}"
    if large:
        regions = [
            ("I", 2 <= c <= a - 2 and 2 <= d <= b - 2),
            ("II", (c == 1 and 2 * d > b + 1) or (d == b - 1 and 2 * c < a - 1)),
            ("III", (d == 1 and 2 * c > a + 1) or (c == a - 1 and 2 * d < b - 1)),
        ]
        for name, holds in regions:
            if holds:
                return "conditional-on-QH", f"region {name}"
    return "unspecified", None


@dataclass(frozen=True)
class FamilyVerdict:
    a: int
    b: int
    c: int
    d: int
    polynomial: Polynomial
    status: str
    locally_eulerian: Optional[bool]
    quasi_homogeneous: Optional[QuasiHomogeneousType]
    prediction: str
    rule: Optional[str]
    reason: Optional[str] = None

    @property
    def expected(self) -> Optional[bool]:
        if self.status == "degenerate":
            return None
        if self.prediction == "true":
            return True
        if self.prediction == "conditional-on-QH":
            return self.quasi_homogeneous is not None
        return None

    @property
    def inconclusive(self) -> bool:
        """Locally Eulerian region member that is not quasi-homogeneous in these coordinates.

        Quasi-homogeneity may still hold after an analytic change of
        coordinates, which is not searched.
        """
        return (
            self.prediction == "conditional-on-QH"
            and self.quasi_homogeneous is None
            and self.locally_eulerian is True
        )

    @property
    def agreement(self) -> Optional[bool]:
        if self.expected is None or self.locally_eulerian is None or self.inconclusive:
            return None
        return self.expected == self.locally_eulerian


def family_member_verdict(a: int, b: int, c: int, d: int) -> FamilyVerdict:
    """Computed and predicted locally-Eulerian verdicts for one family member."""
    if min(a, b, c, d) < 0:
        raise ValueError("exponents must be nonnegative")
    f = family_polynomial(a, b, c, d)
    prediction, rule = family_prediction(a, b, c, d)
    qh = quasi_homogeneous_type(f)
    if f.is_constant:
        return FamilyVerdict(a, b, c, d, f, "degenerate", None, qh, prediction, rule, "constant")
    X = AffineHypersurface(f)
    try:
        X.require_isolated()
    except (NotReducedError, NonIsolatedSingularityError) as exc:
        LOGGER.info(f"family member {f} is degenerate: {exc}")
        return FamilyVerdict(a, b, c, d, f, "degenerate", None, qh, prediction, rule, str(exc))
    if X.is_smooth:
        return FamilyVerdict(a, b, c, d, f, "smooth", True, qh, prediction, rule)
    eulerian = is_locally_eulerian(X, check=False)
    if qh is not None and not eulerian:
        raise InconsistentVerdictError(f"{f} is quasi-homogeneous ({qh}) but not locally Eulerian")
    reason = None
    if prediction == "conditional-on-QH" and qh is None and eulerian:
        reason = "not quasi-homogeneous in these coordinates; coordinate changes are not searched"
        LOGGER.info(f"{f}: {reason}")
    return FamilyVerdict(a, b, c, d, f, "ok", eulerian, qh, prediction, rule, reason)
