"""Hall-algebra bookkeeping on P^1: classes, the Euler form, multiplicity polynomials."""

from .classes import CohClassP1, GenericPoint, euler_form
from .element import HallElementP1
from .polynomials import (
    MultiplicityPolynomialTable,
    SumRuleReport,
    hall_product_counts,
    hall_product_skyscraper,
    multiplicity_polynomials,
    verify_sum_rule,
)

__all__ = [
    "CohClassP1",
    "GenericPoint",
    "HallElementP1",
    "MultiplicityPolynomialTable",
    "SumRuleReport",
    "euler_form",
    "hall_product_counts",
    "hall_product_skyscraper",
    "multiplicity_polynomials",
    "verify_sum_rule",
]
