"""Monomial orders.

Every order is a sympy ``MonomialOrder``: calling it on an exponent tuple
returns a sort key, larger keys meaning larger monomials. ``lex`` and
``grevlex`` come straight from sympy; the weighted and block orders below add
hashable parameters so that rings and basis caches keyed by an order compare
equal across instances (sympy's ``ProductOrder`` holds lambdas and does not).
"""
from typing import Sequence

from sympy.polys.orderings import MonomialOrder, grevlex, lex

LEX = lex
DEGREVLEX = grevlex


def _reversed_negated(monomial):
    return tuple(reversed([-e for e in monomial]))


class WeightedReverseLexOrder(MonomialOrder):
    """Weighted degree first, ties broken reverse-lexicographically."""

    alias = "wdegrevlex"
    is_global = True

    def __init__(self, weights: Sequence[int]):
        weights = tuple(weights)
        if not weights or any(w <= 0 for w in weights):
            raise ValueError(f"weights must be positive, got {weights}")
        self.weights = weights

    def __call__(self, monomial):
        return (
            sum(w * e for w, e in zip(self.weights, monomial)),
            _reversed_negated(monomial),
        )

    def __repr__(self):
        return f"{self.__class__.__name__}({self.weights})"

    def __str__(self):
        return f"{self.alias}{self.weights}"

    def __eq__(self, other):
        return isinstance(other, WeightedReverseLexOrder) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__.__name__, self.weights))


class BlockOrder(MonomialOrder):
    """Compare the variables of the first block, then the second, ...

    Blocks are tuples of variable indices; together they must cover every
    variable exactly once. Eliminating the first block is the usual reason to
    build one.
    """

    alias = "block"

    def __init__(self, blocks: Sequence[Sequence[int]], orders: Sequence[MonomialOrder] = None):
        blocks = tuple(tuple(block) for block in blocks)
        if orders is None:
            orders = (DEGREVLEX,) * len(blocks)
        orders = tuple(orders)
        if len(orders) != len(blocks):
            raise ValueError("one inner order per block is required")
        indices = sorted(i for block in blocks for i in block)
        if indices != list(range(len(indices))) or any(not block for block in blocks):
            raise ValueError(f"blocks {blocks} do not partition the variables")
        self.blocks = blocks
        self.orders = orders
        self.is_global = all(order.is_global for order in orders)

    @classmethod
    def from_sizes(cls, sizes: Sequence[int], orders: Sequence[MonomialOrder] = None):
        blocks, start = [], 0
        for size in sizes:
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(blocks, orders)

    @property
    def nvars(self) -> int:
        return sum(len(block) for block in self.blocks)

    def __call__(self, monomial):
        return tuple(
            order(tuple(monomial[i] for i in block))
            for block, order in zip(self.blocks, self.orders)
        )

    def __repr__(self):
        return f"{self.__class__.__name__}({self.blocks}, {self.orders})"

    def __str__(self):
        inner = ", ".join(f"{order}{list(block)}" for block, order in zip(self.blocks, self.orders))
        return f"block({inner})"

    def __eq__(self, other):
        return (
            isinstance(other, BlockOrder)
            and self.blocks == other.blocks
            and self.orders == other.orders
        )

    def __hash__(self):
        return hash((self.__class__.__name__, self.blocks, self.orders))


def elimination_order(nvars: int, eliminated: Sequence[int]) -> BlockOrder:
    """Block order with ``eliminated`` variables ranked above all others."""
    eliminated = tuple(sorted(set(eliminated)))
    kept = tuple(i for i in range(nvars) if i not in eliminated)
    if not eliminated or not kept:
        raise ValueError("elimination needs a proper nonempty subset of the variables")
    return BlockOrder((eliminated, kept))

