"""Shipped curves and the random samplers used by the batch commands."""
import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import QQ

from .polynomials import Polynomial, PolynomialRing

LOGGER = logging.getLogger(__name__)

PLANE = PolynomialRing(("x", "y", "z"))
SPACE = PolynomialRing(("x", "y", "z", "w"))
AFFINE_PLANE = PolynomialRing(("x", "y"))

CAYLEY_CUBIC = "x*y*z + x*y*w + x*z*w + y*z*w"


@dataclass(frozen=True)
class CorpusCurve:
    """A projective hypersurface with its expected gradient-linear-type verdict.

    ``labels`` lists the expected singularity labels, or is None when they
    are not pinned down.
    """

    name: str
    polynomial: str
    variables: str
    expected: bool
    labels: Optional[Tuple[str, ...]] = None


SHIPPED_CURVES = (
    CorpusCurve("nodal cubic", "y^2*z - x^3 - x^2*z", "x,y,z", True, ("A1",)),
    CorpusCurve("cuspidal cubic", "y^2*z - x^3", "x,y,z", True, ("A2",)),
    CorpusCurve("three concurrent lines", "(y - z)*(z - x)*(x - y)", "x,y,z", True, ("non-double-point",)),
    CorpusCurve("conic and secant line", "(x*z - y^2)*y", "x,y,z", True, ("A1", "A1")),
    CorpusCurve("conic and tangent line", "(x*z - y^2)*x", "x,y,z", True, ("A3",)),
    CorpusCurve("non-Eulerian quintic", "x^4*z - x^2*y^2*z + y^5", "x,y,z", False, ("non-double-point",)),
    CorpusCurve("Cayley cubic surface", CAYLEY_CUBIC, "x,y,z,w", True, ("A1",) * 4),
)


def _conic_matrix(c) -> Matrix:
    # coefficients of x^2, xy, y^2, xz, yz, z^2
    a, b, cc, d, e, f = c
    half = Rational(1, 2)
    return Matrix([[a, b * half, d * half], [b * half, cc, e * half], [d * half, e * half, f]])


_CONIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))


def _general_position(points) -> bool:
    for p, q, r in combinations(points, 3):
        if Matrix([[*p, 1], [*q, 1], [*r, 1]]).det() == 0:
            return False
    return len(set(points)) == len(points)


def random_nodal_quartic(rng: random.Random, span: int = 4) -> Polynomial:
    """Product of two smooth conics of the pencil through four random rational points.

    Two members of the pencil meet transversally in the four base points, so
    the quartic has exactly four rational nodes.
    """
    while True:
        points = [(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(4)]
        if _general_position(points):
            break
    rows = [[u * u, u * v, v * v, u, v, 1] for u, v in points]
    first, second = Matrix(rows).nullspace()
    conics = []
    while len(conics) < 2:
        alpha, beta = rng.randint(-3, 3), rng.randint(-3, 3)
        if (alpha, beta) == (0, 0):
            continue
        candidate = alpha * first + beta * second
        if _conic_matrix(candidate).det() == 0:
            continue
        if conics and Matrix.hstack(conics[0][1], candidate).rank() < 2:
            continue
        conics.append(((alpha, beta), candidate))
    product = PLANE.one
    for _, vector in conics:
        product = product * PLANE.from_terms(
            {m: QQ.from_sympy(c) for m, c in zip(_CONIC_MONOMIALS, vector) if c != 0}
        )
    LOGGER.debug(f"nodal quartic through {points}: {product}")
    return product.primitive()


def nodal_quartics(count: int, seed: int) -> List[CorpusCurve]:
    rng = random.Random(seed)
    return [
        CorpusCurve(f"nodal quartic {k}", str(random_nodal_quartic(rng)), "x,y,z", True, ("A1",) * 4)
        for k in range(count)
    ]


def corpus_curves(quartics: int = 5, seed: int = 1729) -> List[CorpusCurve]:
    return list(SHIPPED_CURVES) + nodal_quartics(quartics, seed)


QUASI_HOMOGENEOUS_SHAPES = ((1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (1, 3))


def quasi_homogeneous_curve(p: int, q: int, s: int, a=1, b=1, coefficients=None) -> Polynomial:
    """``a*x^(s*q) + b*y^(s*p) + sum_r c_r * x^((s-r)*q) * y^(r*p)`` for ``0 < r < s``.

    Weights ``(p, q)`` make every term of weighted degree ``s*p*q``.
    """
    x, y = AFFINE_PLANE.gens
    if coefficients is None:
        coefficients = {r: r for r in range(1, s)}
    f = a * x ** (s * q) + b * y ** (s * p)
    for r, c in coefficients.items():
        f = f + c * x ** ((s - r) * q) * y ** (r * p)
    return f


def quasi_homogeneous_curves() -> List[Polynomial]:
    """Singular, reduced quasi-homogeneous plane curves with isolated singularity."""
    x, y = AFFINE_PLANE.gens
    curves = [y ** 2 - x ** 3, x * y, x ** 2 + y ** 2]
    for p, q in QUASI_HOMOGENEOUS_SHAPES:
        for s in (2, 3):
            curves.append(quasi_homogeneous_curve(p, q, s))
    return curves


_FORCED_ZERO = {(0, 0, 0, 3), (1, 0, 0, 2), (0, 1, 0, 2), (0, 0, 1, 2)}


def cubic_monomials(force_singular: bool = True) -> List[Tuple[int, ...]]:
    monomials = [
        (i, j, k, 3 - i - j - k)
        for i in range(4)
        for j in range(4 - i)
        for k in range(4 - i - j)
    ]
    monomials.sort(reverse=True)
    if force_singular:
        monomials = [m for m in monomials if m not in _FORCED_ZERO]
    return monomials


def random_cubic(rng: random.Random, bound: int = 3, force_singular: bool = True) -> Polynomial:
    """Random integer cubic in ``x, y, z, w``; singular at ``[0:0:0:1]`` when forced."""
    monomials = cubic_monomials(force_singular)
    while True:
        terms = {m: rng.randint(-bound, bound) for m in monomials}
        f = SPACE.from_terms({m: c for m, c in terms.items() if c})
        if not f.is_zero:
            return f


def cubic_samples(trials: int, seed: int, bound: int = 3, force_singular: bool = True) -> List[str]:
    """Trial 0 is Cayley's cubic, the rest are drawn from ``random.Random(seed)``."""
    if trials <= 0:
        return []
    rng = random.Random(seed)
    samples = [str(SPACE.parse(CAYLEY_CUBIC))]
    samples += [str(random_cubic(rng, bound, force_singular)) for _ in range(trials - 1)]
    return samples
