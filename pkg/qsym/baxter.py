"""
Baxter Operators
================

Sequences are multiplied entrywise. The strict prefix-sum operator S and the
inclusive prefix-sum operator P satisfy

    B(a * B(b)) + B(b * B(a)) = B(a) * B(b) + B(theta * a * b)

with theta = -1 for S and +1 for P. Nested operator words such as
xS(xS(xP(x))) applied to the sequence (x_1, ..., x_n) total to fundamental
quasi-symmetric functions.

Grammar (whitespace ignored):

    expr   := factor+
    factor := 'x' | ('S' | 'P') '(' expr ')'
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, TypeVar, Union

from algebra.polynomials import MultiPolynomial
from errors import InvalidArgument, MalformedWord
from qsym.compositions import MonomialExpansion

logger = logging.getLogger(__name__)

T = TypeVar("T", Fraction, MultiPolynomial)

THETA = {'S': -1, 'P': 1}


def _prefix_sums(seq: Sequence[T], zero: T, inclusive: bool) -> List[T]:
    out: List[T] = []
    running = zero
    for value in seq:
        if inclusive:
            running = running + value
            out.append(running)
        else:
            out.append(running)
            running = running + value
    return out


def apply_operator(op: str, seq: Sequence[T], zero: T) -> List[T]:
    """S(a)_r = sum_{i<r} a_i; P(a)_r = sum_{i<=r} a_i."""
    if op not in THETA:
        raise MalformedWord(f"unknown operator {op!r}")
    return _prefix_sums(seq, zero, inclusive=(op == 'P'))


def baxter_identity_holds(op: str, a: Sequence[Fraction], b: Sequence[Fraction], theta: int) -> bool:
    """Check B(aB(b)) + B(bB(a)) == B(a)B(b) + B(theta*a*b) on rational sequences."""
    if len(a) != len(b):
        raise InvalidArgument(f"sequence lengths differ: {len(a)} and {len(b)}")
    zero = Fraction(0)
    ba = apply_operator(op, a, zero)
    bb = apply_operator(op, b, zero)
    left_one = apply_operator(op, [x * y for x, y in zip(a, bb)], zero)
    left_two = apply_operator(op, [y * x for y, x in zip(b, ba)], zero)
    weighted = apply_operator(op, [theta * x * y for x, y in zip(a, b)], zero)
    left = [u + v for u, v in zip(left_one, left_two)]
    right = [u * v + w for u, v, w in zip(ba, bb, weighted)]
    return left == right


# =============================================================================
# Operator words
# =============================================================================

@dataclass(frozen=True)
class Leaf:
    """The sequence (x_1, ..., x_n)."""


@dataclass(frozen=True)
class Apply:
    op: str
    body: Tuple[Node, ...]


Node = Union[Leaf, Apply]


class _Parser:
    def __init__(self, word: str):
        self.text = "".join(word.split())
        self.pos = 0

    def fail(self, message: str) -> MalformedWord:
        return MalformedWord(f"{message} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Tuple[Node, ...]:
        factors: List[Node] = []
        while self.peek() in ('x', 'S', 'P'):
            factors.append(self.factor())
        if not factors:
            raise self.fail("expected x, S( or P(")
        return tuple(factors)

    def factor(self) -> Node:
        char = self.peek()
        self.pos += 1
        if char == 'x':
            return Leaf()
        if self.peek() != '(':
            raise self.fail(f"expected '(' after {char}")
        self.pos += 1
        body = self.expr()
        if self.peek() != ')':
            raise self.fail("expected ')'")
        self.pos += 1
        return Apply(char, body)

    def parse(self) -> Tuple[Node, ...]:
        if not self.text:
            raise MalformedWord("empty operator word")
        nodes = self.expr()
        if self.pos != len(self.text):
            raise self.fail(f"unexpected {self.peek()!r}")
        return nodes


def parse_word(word: str) -> Tuple[Node, ...]:
    """
    Parse an operator word into a product of factors.

    Raises:
        MalformedWord: On unknown characters, unbalanced parentheses or empty bodies
    """
    return _Parser(word).parse()


def _evaluate(nodes: Tuple[Node, ...], n_vars: int) -> List[MultiPolynomial]:
    zero = MultiPolynomial(n_vars, {})
    result = [MultiPolynomial.one(n_vars)] * n_vars
    for node in nodes:
        if isinstance(node, Leaf):
            factor = [
                MultiPolynomial(n_vars, {tuple(int(i == r) for i in range(n_vars)): 1}) for r in range(n_vars)
            ]
        else:
            factor = apply_operator(node.op, _evaluate(node.body, n_vars), zero)
        result = [u * v for u, v in zip(result, factor)]
    return result


def baxter_apply(word: str, n_vars: int) -> MonomialExpansion:
    """
    Total of the sequence an operator word produces from (x_1, ..., x_n).

    Raises:
        MalformedWord: If the word does not parse
    """
    if n_vars < 1:
        raise InvalidArgument(f"n_vars must be positive, got {n_vars}")
    nodes = parse_word(word)
    total = MultiPolynomial(n_vars, {})
    for entry in _evaluate(nodes, n_vars):
        total = total + entry
    logger.debug("baxter_apply %s over %d variables: %d terms", word, n_vars, len(total.terms))
    return total

