"""Buchberger's algorithm, normal forms and first syzygies.

The engine works on sympy ``PolyElement``s of a ring carrying the requested
monomial order and hands :class:`Polynomial` objects of the canonical ring back
to callers. Critical pairs are managed with the Gebauer-Moeller update (chain
and product criteria) and selected by sugar degree, ties broken by the order
of the pair's lcm.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from .errors import ResourceLimitExceeded, RingMismatchError
from .orders import DEGREVLEX, BlockOrder
from .polynomials import Polynomial, PolynomialRing
from .settings import settings

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResourceLimits:
    max_pairs: int
    max_terms: int

    @classmethod
    def from_settings(cls) -> "ResourceLimits":
        return cls(settings.limit_pairs, settings.limit_terms)

    def check(self, pairs: int, terms: int):
        if pairs > self.max_pairs:
            LOGGER.warning(f"critical pair queue at {pairs}, limit {self.max_pairs}")
            raise ResourceLimitExceeded("critical pairs", pairs, self.max_pairs)
        if terms > self.max_terms:
            LOGGER.warning(f"basis holds {terms} terms, limit {self.max_terms}")
            raise ResourceLimitExceeded("basis terms", terms, self.max_terms)


class GroebnerBasis:
    """Reduced Groebner basis of an ideal for one monomial order.

    Elements are monic, sorted by descending leading monomial and kept as
    elements of the sympy ring that carries ``order``.
    """

    __slots__ = ("ring", "order", "elements")

    def __init__(self, ring: PolynomialRing, order, elements=()):
        self.ring = ring
        self.order = order
        self.elements = tuple(sorted(elements, key=lambda g: order(g.LM), reverse=True))

    @property
    def polynomials(self) -> Tuple[Polynomial, ...]:
        return tuple(self.ring.wrap(g) for g in self.elements)

    @property
    def leading_monomials(self):
        return tuple(g.LM for g in self.elements)

    @property
    def is_zero(self) -> bool:
        return not self.elements

    @property
    def is_unit(self) -> bool:
        return any(not any(g.LM) for g in self.elements)

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.polynomials)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and [dict(g) for g in self.elements] == [dict(g) for g in other.elements]
        )

    def __hash__(self):
        return hash((self.ring, self.order, tuple(frozenset(g.items()) for g in self.elements)))

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.polynomials) + "]"

    def __repr__(self):
        return f"GroebnerBasis({self}, order={self.order})"


@dataclass(frozen=True)
class SyzygyMatrix:
    """First syzygies of ``generators``; each column annihilates the tuple."""

    ring: PolynomialRing
    generators: Tuple[Polynomial, ...]
    columns: Tuple[Tuple[Polynomial, ...], ...]

    def __len__(self):
        return len(self.columns)

    def annihilates(self) -> bool:
        for column in self.columns:
            total = self.ring.zero
            for s, g in zip(column, self.generators):
                total = total + s * g
            if not total.is_zero:
                return False
        return True

    def contains(self, vector: Sequence[Polynomial], limits=None) -> bool:
        return module_membership(vector, self, limits)

    def __str__(self):
        return "\n".join("(" + ", ".join(str(s) for s in column) + ")" for column in self.columns)


def _common_ring(polynomials: Sequence[Polynomial]) -> PolynomialRing:
    if not polynomials:
        raise ValueError("at least one generator is required")
    ring = polynomials[0].ring
    for p in polynomials[1:]:
        if p.ring != ring:
            raise RingMismatchError(f"{p.ring} and {ring} differ")
    return ring


def _sugar_degree(p) -> int:
    return max(sum(m) for m in p.itermonoms())


def _buchberger(generators, ring, limits: ResourceLimits, lift: bool = False):
    """Reduced Groebner basis of ``generators`` inside the sympy ``ring``.

    With ``lift`` every basis element comes with its coordinates on the input
    generators: ``basis[k] == sum(rep[k][j] * generators[j])``.
    """
    order = ring.order
    m = len(generators)
    f, reps, sugar = [], [], []

    def add(h, rep, s):
        lc = h.LC
        if lc != 1:
            h = h.quo_ground(lc)
            if lift:
                rep = [c.quo_ground(lc) for c in rep]
        f.append(h)
        reps.append(rep)
        sugar.append(s)
        return len(f) - 1

    def reduce(p, rep, indices):
        divisors = [f[k] for k in indices]
        if not lift:
            return (p.rem(divisors) if divisors else p), None
        if not divisors:
            return p, rep
        quotients, r = p.div(divisors)
        rep = list(rep)
        for q, k in zip(quotients, indices):
            if q:
                for c in range(m):
                    rep[c] = rep[c] - q * reps[k][c]
        return r, rep

    for j, g in enumerate(generators):
        if g:
            unit = [ring.one if c == j else ring.zero for c in range(m)] if lift else None
            add(g, unit, _sugar_degree(g))

    pair_sugar: Dict[Tuple[int, int], int] = {}
    pair_lcm: Dict[Tuple[int, int], tuple] = {}

    def update(G, B, ih):
        # Gebauer-Moeller: new pairs with h, then prune old pairs and the basis
        h = f[ih]
        mh = h.LM
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM)) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        while D:
            pair = D.pop()
            ig = pair[1]
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)
            if monomial_mul(mh, mg) != lcm_hg:
                E.add(pair)
                pair_lcm[pair] = lcm_hg
                pair_sugar[pair] = max(
                    sugar[ih] - sum(mh), sugar[ig] - sum(mg)
                ) + sum(lcm_hg)

        B_new = set()
        while B:
            pair = B.pop()
            mg1, mg2 = f[pair[0]].LM, f[pair[1]].LM
            lcm12 = pair_lcm[pair]
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add(pair)
        B_new |= E

        G_new = {ig for ig in G if monomial_div(f[ig].LM, mh) is None}
        G_new.add(ih)
        return G_new, B_new

    G, CP = set(), set()
    for ih in sorted(range(len(f)), key=lambda k: order(f[k].LM)):
        G, CP = update(G, CP, ih)
    limits.check(len(CP), sum(len(f[k]) for k in G))

    processed = zero_reductions = 0
    while CP:
        pair = min(CP, key=lambda p: (pair_sugar[p], order(pair_lcm[p])))
        CP.remove(pair)
        i, j = pair
        lcm_ij = pair_lcm[pair]
        mi = monomial_div(lcm_ij, f[i].LM)
        mj = monomial_div(lcm_ij, f[j].LM)
        s = f[i].mul_monom(mi) - f[j].mul_monom(mj)
        srep = None
        if lift:
            srep = [
                reps[i][c].mul_monom(mi) - reps[j][c].mul_monom(mj) for c in range(m)
            ]
        divisors = sorted(G, key=lambda k: order(f[k].LM))
        h, hrep = reduce(s, srep, divisors)
        processed += 1
        if h:
            ih = add(h, hrep, pair_sugar[pair])
            G, CP = update(G, CP, ih)
            limits.check(len(CP), sum(len(f[k]) for k in G))
        else:
            zero_reductions += 1

    # minimal basis, then tail reduction against the other minimal elements
    minimal: List[int] = []
    for k in sorted(G, key=lambda k: order(f[k].LM)):
        if not any(monomial_divides(f[l].LM, f[k].LM) for l in minimal):
            minimal.append(k)
    basis, representations = [], []
    for k in minimal:
        h, rep = reduce(f[k], reps[k], [l for l in minimal if l != k])
        lc = h.LC
        if lc != 1:
            h = h.quo_ground(lc)
            if lift:
                rep = [c.quo_ground(lc) for c in rep]
        basis.append(h)
        representations.append(rep)

    LOGGER.debug(
        f"basis of {len(basis)} elements in {ring.ngens} variables after "
        f"{processed} pairs, {zero_reductions} reduced to zero"
    )
    ranked = sorted(range(len(basis)), key=lambda k: order(basis[k].LM), reverse=True)
    return [basis[k] for k in ranked], [representations[k] for k in ranked]


def reduced_groebner_basis(
    generators: Sequence[Polynomial], order=DEGREVLEX, limits: Optional[ResourceLimits] = None
) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal spanned by ``generators``."""
    ring = _common_ring(generators)
    sympy_ring = ring.sympy_ring(order)
    basis, _ = _buchberger(
        [g.in_order(order) for g in generators],
        sympy_ring,
        limits or ResourceLimits.from_settings(),
    )
    return GroebnerBasis(ring, order, basis)


def normal_form(p: Polynomial, basis: GroebnerBasis) -> Polynomial:
    if p.ring != basis.ring:
        raise RingMismatchError(f"{p.ring} and {basis.ring} differ")
    if basis.is_zero or p.is_zero:
        return p
    return basis.ring.wrap(p.in_order(basis.order).rem(list(basis.elements)))


def s_polynomial(f: Polynomial, g: Polynomial, order=DEGREVLEX) -> Polynomial:
    ring = _common_ring([f, g])
    a, b = f.in_order(order), g.in_order(order)
    lcm_ab = monomial_lcm(a.LM, b.LM)
    s = a.mul_monom(monomial_div(lcm_ab, a.LM)).quo_ground(a.LC) - b.mul_monom(
        monomial_div(lcm_ab, b.LM)
    ).quo_ground(b.LC)
    return ring.wrap(s)


def satisfies_buchberger_criterion(basis: GroebnerBasis) -> bool:
    elements = list(basis.elements)
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            lcm_ab = monomial_lcm(a.LM, b.LM)
            s = a.mul_monom(monomial_div(lcm_ab, a.LM)).quo_ground(a.LC) - b.mul_monom(
                monomial_div(lcm_ab, b.LM)
            ).quo_ground(b.LC)
            if s and s.rem(elements):
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    """Monic, and no term of an element is divisible by another leading monomial."""
    for g in basis.elements:
        if g.LC != 1:
            return False
        others = [h.LM for h in basis.elements if h is not g]
        for monomial in g.itermonoms():
            if any(monomial_divides(lm, monomial) for lm in others):
                return False
    return True


def syzygy_basis(
    generators: Sequence[Polynomial], limits: Optional[ResourceLimits] = None
) -> SyzygyMatrix:
    """Generators of the first syzygy module of the tuple ``generators``.

    Schreyer relations among the lifted basis elements are pulled back to the
    input generators and completed by the relations expressing each input
    generator through the basis. The set is not minimal.
    """
    ring = _common_ring(generators)
    sympy_ring = ring.sympy_ring(DEGREVLEX)
    inputs = [g.in_order(DEGREVLEX) for g in generators]
    m = len(inputs)
    basis, lifts = _buchberger(
        inputs, sympy_ring, limits or ResourceLimits.from_settings(), lift=True
    )
    zero = sympy_ring.zero

    def pull_back(row):
        return [
            sum((row[k] * lifts[k][c] for k in range(len(basis)) if row[k]), zero)
            for c in range(m)
        ]

    columns = []
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            lcm_ab = monomial_lcm(basis[a].LM, basis[b].LM)
            ma = monomial_div(lcm_ab, basis[a].LM)
            mb = monomial_div(lcm_ab, basis[b].LM)
            s = basis[a].mul_monom(ma) - basis[b].mul_monom(mb)
            row = [zero] * len(basis)
            if s:
                quotients, remainder = s.div(basis)
                if remainder:
                    raise ArithmeticError("S-polynomial of a Groebner basis did not reduce to zero")
                row = [-q for q in quotients]
            row[a] = row[a] + sympy_ring.one.mul_monom(ma)
            row[b] = row[b] - sympy_ring.one.mul_monom(mb)
            columns.append(pull_back(row))

    for j, g in enumerate(inputs):
        quotients = [zero] * len(basis)
        if g and basis:
            quotients, remainder = g.div(basis)
            if remainder:
                raise ArithmeticError("generator is not reduced to zero by its own basis")
        through_basis = pull_back(quotients)
        columns.append(
            [(sympy_ring.one if c == j else zero) - through_basis[c] for c in range(m)]
        )

    seen, unique = set(), []
    for column in columns:
        if not any(column):
            continue
        key = tuple(frozenset(s.items()) for s in column)
        if key not in seen:
            seen.add(key)
            unique.append(tuple(ring.wrap(s) for s in column))
    LOGGER.debug(f"{len(unique)} syzygies for {m} generators")
    return SyzygyMatrix(ring, tuple(generators), tuple(unique))


def _module_embedding(module_ring: PolynomialRing, rank: int):
    names = module_ring.fresh_names("e", rank)
    ring = module_ring.extend(names, front=True)
    order = BlockOrder.from_sizes((rank, module_ring.nvars))
    positions = ring.gens[:rank]

    def embed(vector):
        total = ring.zero
        for e, c in zip(positions, vector):
            if not c.is_zero:
                total = total + e * c.to_ring(ring)
        return total

    squares = [positions[i] * positions[j] for i in range(rank) for j in range(i, rank)]
    return embed, squares, order


def module_groebner_basis(module: SyzygyMatrix, limits: Optional[ResourceLimits] = None):
    """Groebner basis of the submodule, in position-over-term order.

    The module sits inside an ideal of a ring with one extra variable per
    position, ranked above every original variable; the products of position
    variables keep only the part linear in them.
    """
    rank = len(module.generators)
    embed, squares, order = _module_embedding(module.ring, rank)
    generators = [embed(column) for column in module.columns] + squares
    return embed, reduced_groebner_basis(generators, order, limits)


def module_membership(
    vector: Sequence[Polynomial], module: SyzygyMatrix, limits: Optional[ResourceLimits] = None
) -> bool:
    if len(vector) != len(module.generators):
        raise ValueError(f"vector of length {len(vector)} for rank {len(module.generators)}")
    if all(c.is_zero for c in vector):
        return True
    if not module.columns:
        return False
    embed, basis = module_groebner_basis(module, limits)
    return basis.contains(embed(vector))


def module_contains(big: SyzygyMatrix, small: SyzygyMatrix, limits=None) -> bool:
    if not small.columns:
        return True
    if not big.columns:
        return all(all(c.is_zero for c in column) for column in small.columns)
    embed, basis = module_groebner_basis(big, limits)
    return all(basis.contains(embed(column)) for column in small.columns)


def modules_equal(a: SyzygyMatrix, b: SyzygyMatrix, limits=None) -> bool:
    return module_contains(a, b, limits) and module_contains(b, a, limits)
