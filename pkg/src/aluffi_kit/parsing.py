"""Polynomial grammar.

    poly   := sign? term (addop term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := number | variable | '(' poly ')'
    number := uint ('/' uint)?

Whitespace is insignificant. Every token swallows the whitespace after it, so
parse errors point at the first character that could not be consumed.
"""
import logging

from parsimonious.exceptions import IncompleteParseError, ParseError
from parsimonious.grammar import Grammar
from parsimonious.nodes import NodeVisitor

from .errors import PolynomialSyntaxError, UnknownVariableError
from .polynomials import Polynomial, PolynomialRing

LOGGER = logging.getLogger(__name__)

GRAMMAR = Grammar(
    r"""
    poly      = ws sign? term (addop term)*
    sign      = ~"[+-]" ws
    addop     = ~"[+-]" ws
    term      = factor (mulop factor)*
    mulop     = "*" ws
    factor    = base power?
    power     = "^" ws uint
    base      = number / variable / group
    group     = "(" ws poly ")" ws
    number    = uint fraction?
    fraction  = "/" ws uint
    uint      = ~"[0-9]+" ws
    variable  = ~"[A-Za-z_][A-Za-z0-9_]*" ws
    ws        = ~"\s*"
    """
)


class PolynomialVisitor(NodeVisitor):
    """Evaluates a parse tree into a :class:`Polynomial` of a fixed ring."""

    grammar = GRAMMAR
    unwrapped_exceptions = (UnknownVariableError, PolynomialSyntaxError)

    def __init__(self, ring: PolynomialRing, text: str = ""):
        self.ring = ring
        self.text = text

    def visit_poly(self, node, visited_children):
        _, sign, first, rest = visited_children
        result = first
        if isinstance(sign, list) and sign[0] < 0:
            result = -result
        if isinstance(rest, list):
            for op, term in rest:
                result = result + term if op > 0 else result - term
        return result

    def visit_sign(self, node, visited_children):
        op, _ = visited_children
        return -1 if op.text == "-" else 1

    visit_addop = visit_sign

    def visit_term(self, node, visited_children):
        result, rest = visited_children
        if isinstance(rest, list):
            for _, factor in rest:
                result = result * factor
        return result

    def visit_factor(self, node, visited_children):
        base, power = visited_children
        if isinstance(power, list):
            return base ** power[0]
        return base

    def visit_power(self, node, visited_children):
        _, _, exponent = visited_children
        return exponent

    def visit_base(self, node, visited_children):
        return visited_children[0]

    def visit_group(self, node, visited_children):
        _, _, poly, _, _ = visited_children
        return poly

    def visit_number(self, node, visited_children):
        numerator, fraction = visited_children
        denominator = fraction[0] if isinstance(fraction, list) else 1
        if denominator == 0:
            raise PolynomialSyntaxError(self.text, node.start, "zero denominator")
        return self.ring.constant(f"{numerator}/{denominator}")

    def visit_fraction(self, node, visited_children):
        _, _, denominator = visited_children
        return denominator

    def visit_uint(self, node, visited_children):
        digits, _ = visited_children
        return int(digits.text)

    def visit_variable(self, node, visited_children):
        name, _ = visited_children
        if name.text not in self.ring.variables:
            raise UnknownVariableError(name.text, node.start)
        return self.ring.gen(name.text)

    def generic_visit(self, node, visited_children):
        return visited_children or node


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` into the canonical sparse form over ``ring``."""
    try:
        tree = GRAMMAR.parse(text)
    except IncompleteParseError as exc:
        raise PolynomialSyntaxError(text, exc.pos, "unexpected input") from None
    except ParseError as exc:
        raise PolynomialSyntaxError(text, exc.pos) from None
    return PolynomialVisitor(ring, text).visit(tree)
