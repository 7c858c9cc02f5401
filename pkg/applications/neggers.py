"""
Real-Rootedness of Descent Polynomials
======================================

Tests whether W(P, omega; t) = sum over linear extensions of t^des has only
real roots. Counterexamples are known in general, so a False result is an
observation rather than an error.
"""

import logging
from dataclasses import dataclass
from typing import Dict

from algebra.polynomials import IntPolynomial
from algebra.roots import real_rooted
from gf.descents import descent_gf
from poset.core import LabeledPoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeggersResult:
    w: IntPolynomial
    real_rooted: bool

    def to_dict(self) -> Dict[str, object]:
        return {'w': self.w.render("t"), 'coefficients': list(self.w.coeffs), 'real_rooted': self.real_rooted}


def neggers_test(P: LabeledPoset) -> NeggersResult:
    """
    Raises:
        BudgetExceeded: If the linear extensions exceed the configured budget
    """
    w = descent_gf(P).w_polynomial()
    result = NeggersResult(w, real_rooted(w))
    if not result.real_rooted:
        logger.warning("W = %s is not real-rooted", w.render("t"))
    return result
