"""Presentations of blowup algebras.

For an ideal ``I = (g_0, ..., g_m)`` of ``R`` all presentations live in
``R[T_0, ..., T_m]`` with ``T_j`` standing for ``g_j``:

  * Sym: the linear forms ``sum_j s_j T_j`` for the first syzygies ``s`` of ``I``;
  * Rees: the kernel of ``T_j -> t*g_j``, by eliminating ``t``;
  * Aluffi of ``I(f)/(f)``: Rees plus ``(f, T_0)``, ``T_0`` being paired with ``f``.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from .errors import InconsistentVerdictError, PreconditionError
from .groebner import SyzygyMatrix, reduced_groebner_basis, syzygy_basis
from .hypersurfaces import AffineHypersurface, QuasiHomogeneousType, is_locally_eulerian, quasi_homogeneous_type
from .ideals import Ideal
from .orders import elimination_order
from .polynomials import Polynomial, PolynomialRing

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PresentationIdeal:
    kind: str
    base_ring: PolynomialRing
    ring: PolynomialRing
    t_variables: Tuple[str, ...]
    generators: Tuple[Polynomial, ...]
    syzygies: Optional[SyzygyMatrix] = field(default=None, compare=False)

    @cached_property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    @property
    def basis(self) -> Tuple[Polynomial, ...]:
        """Reduced Groebner basis in the extended ring, degrevlex."""
        return self.ideal.basis.polynomials

    def t_degree(self, p: Polynomial) -> int:
        first = self.base_ring.nvars
        degrees = {sum(m[first:]) for m in p.monomials}
        return max(degrees) if degrees else 0

    def is_t_homogeneous(self, p: Polynomial) -> bool:
        first = self.base_ring.nvars
        return len({sum(m[first:]) for m in p.monomials}) <= 1

    def tagged(self) -> List[Tuple[Polynomial, int]]:
        return [(g, self.t_degree(g)) for g in self.generators]

    def same_ideal(self, other: "PresentationIdeal") -> bool:
        return self.ring == other.ring and self.ideal == other.ideal

    def __len__(self):
        return len(self.generators)


def _presentation_ring(ring: PolynomialRing, count: int):
    names = ring.fresh_names("T", count, numbered=True)
    return ring.extend(names), names


def _t_gens(ring: PolynomialRing, names: Sequence[str]) -> List[Polynomial]:
    return [ring.gen(name) for name in names]


def _require_nonzero(ideal: Ideal):
    if ideal.is_zero:
        raise PreconditionError("blowup algebras of the zero ideal are not presented")


def sym_ideal(ideal: Ideal, limits=None) -> PresentationIdeal:
    """``I_1([T] . phi)`` for the first syzygy matrix ``phi`` of the generators."""
    _require_nonzero(ideal)
    ring, names = _presentation_ring(ideal.ring, len(ideal.generators))
    T = _t_gens(ring, names)
    syzygies = syzygy_basis(ideal.generators, limits)
    generators = []
    for column in syzygies.columns:
        form = ring.zero
        for s, t in zip(column, T):
            if not s.is_zero:
                form = form + s.to_ring(ring) * t
        generators.append(form)
    return PresentationIdeal("sym", ideal.ring, ring, names, tuple(generators), syzygies)


def rees_ideal(ideal: Ideal, limits=None) -> PresentationIdeal:
    """Kernel of ``T_j -> t*g_j``: ``t`` is eliminated with a block order ``t >> (x, T)``."""
    _require_nonzero(ideal)
    ring, names = _presentation_ring(ideal.ring, len(ideal.generators))
    (t_name,) = ring.fresh_names("t", 1)
    big = ring.extend([t_name], front=True)
    t = big.gen(0)
    generators = [
        big.gen(name) - t * g.to_ring(big) for name, g in zip(names, ideal.generators)
    ]
    basis = reduced_groebner_basis(generators, elimination_order(big.nvars, [0]), limits)
    kept = tuple(g.to_ring(ring) for g in basis.polynomials if 0 not in g.support_variables())
    LOGGER.debug(f"Rees ideal of {ideal} has {len(kept)} generators")
    return PresentationIdeal("rees", ideal.ring, ring, names, kept)


@dataclass(frozen=True)
class LinearTypeVerdict:
    is_linear_type: bool
    witness: Optional[Polynomial]
    witness_t_degree: Optional[int]
    sym: PresentationIdeal = field(compare=False)
    rees: PresentationIdeal = field(compare=False)


def is_linear_type(ideal: Ideal, limits=None) -> LinearTypeVerdict:
    """Compare the Sym and Rees presentations; a Rees generator outside Sym is the witness."""
    sym = sym_ideal(ideal, limits)
    rees = rees_ideal(ideal, limits)
    for g in sym.generators:
        if g not in rees.ideal:
            raise InconsistentVerdictError(f"syzygy form {g} is not a Rees relation")
    extra = [g for g in rees.generators if g not in sym.ideal]
    if not extra:
        return LinearTypeVerdict(True, None, None, sym, rees)
    witness = min(extra, key=lambda g: (rees.t_degree(g), len(g.terms), str(g)))
    degree = rees.t_degree(witness)
    if degree < 2:
        raise InconsistentVerdictError(f"linear Rees relation {witness} is not a syzygy form")
    LOGGER.info(f"{ideal} is not of linear type, witness of T-degree {degree}")
    return LinearTypeVerdict(False, witness, degree, sym, rees)


def koszul_minors(generators: Sequence[Polynomial], T: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    """The 2x2 minors ``g_i T_j - g_j T_i`` of the matrix with rows ``g`` and ``T``."""
    return tuple(
        generators[i] * T[j] - generators[j] * T[i]
        for i in range(len(generators))
        for j in range(i + 1, len(generators))
    )


def euler_form(qh: QuasiHomogeneousType, ring: PolynomialRing, T: Sequence[Polynomial]) -> Polynomial:
    """``sum_i r_i x_i T_i``, the Euler relation scaled by the degree."""
    form = ring.zero
    for weight, x, t in zip(qh.weights, ring.gens, T):
        form = form + x * t * weight
    return form


@dataclass(frozen=True)
class AluffiPresentation:
    presentation: PresentationIdeal
    quasi_homogeneous: Optional[QuasiHomogeneousType] = None
    quasi_homogeneous_shape: Optional[PresentationIdeal] = None
    eulerian_shape: Optional[PresentationIdeal] = None


def aluffi_presentation(f, limits=None) -> AluffiPresentation:
    """Presentation of the Aluffi algebra of ``I(f)/(f)``.

    The short shapes (Euler form and Koszul minors for quasi-homogeneous ``f``;
    Sym with the ``T_0`` row dropped for locally Eulerian ``f``) are emitted next
    to the general construction and checked to present the same ideal.
    """
    X = f if isinstance(f, AffineHypersurface) else AffineHypersurface(f)
    X.require_isolated()
    ideal = X.jacobian
    rees = rees_ideal(ideal, limits)
    ring = rees.ring
    T = _t_gens(ring, rees.t_variables)
    lifted = X.f.to_ring(ring)
    general = PresentationIdeal(
        "aluffi", X.ring, ring, rees.t_variables, rees.generators + (lifted, T[0])
    )

    qh = quasi_homogeneous_type(X.f)
    qh_shape = None
    if qh is not None:
        gradient = [g.to_ring(ring) for g in ideal.generators[1:]]
        generators = (lifted, T[0], euler_form(qh, ring, T[1:])) + koszul_minors(gradient, T[1:])
        qh_shape = PresentationIdeal("aluffi-quasi-homogeneous", X.ring, ring, rees.t_variables, generators)
        if not qh_shape.same_ideal(general):
            raise InconsistentVerdictError(f"quasi-homogeneous presentation of {X.f} differs")

    eulerian_shape = None
    if is_locally_eulerian(X, check=False):
        sym = sym_ideal(ideal, limits)
        forms = []
        for column in sym.syzygies.columns:
            form = ring.zero
            for s, t in zip(column[1:], T[1:]):
                if not s.is_zero:
                    form = form + s.to_ring(ring) * t
            if not form.is_zero:
                forms.append(form)
        eulerian_shape = PresentationIdeal(
            "aluffi-locally-eulerian", X.ring, ring, rees.t_variables, (lifted, T[0]) + tuple(forms)
        )
        if not eulerian_shape.same_ideal(general):
            raise InconsistentVerdictError(f"locally Eulerian presentation of {X.f} differs")

    return AluffiPresentation(general, qh, qh_shape, eulerian_shape)
