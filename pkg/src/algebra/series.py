"""
Multivariate power series truncated at a total weight
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

from src.algebra import comb
from src.algebra.comb import LPartite
from src.algebra.element import to_fraction
from src.algebra.errors import LevelMismatchError, PreconditionError

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """Coefficients of t^n for all n with |n| <= max_weight"""

    __slots__ = ("level", "max_weight", "_coeffs")

    def __init__(self, level: int, max_weight: int, coeffs: Mapping[LPartite, Any] = None):
        self.level = comb.check_level(level)
        if max_weight < 0:
            raise PreconditionError("truncation weight must be a natural number")
        self.max_weight = max_weight
        self._coeffs: Dict[LPartite, Fraction] = {}
        for n, c in (coeffs or {}).items():
            n = comb.validate_lpartite(n, level)
            c = to_fraction(c)
            if c and sum(n) <= max_weight:
                self._coeffs[n] = self._coeffs.get(n, Fraction(0)) + c

    @classmethod
    def constant(cls, level: int, max_weight: int, value: Any = 1) -> "TruncatedSeries":
        return cls(level, max_weight, {comb.zero(level): value})

    @classmethod
    def monomial(cls, level: int, max_weight: int, exponent: Sequence[int], coef: Any = 1) -> "TruncatedSeries":
        return cls(level, max_weight, {tuple(exponent): coef})

    def coefficient(self, n: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(n), Fraction(0))

    def items(self):
        return sorted(self._coeffs.items(), key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))

    def _check(self, other: "TruncatedSeries") -> None:
        if (other.level, other.max_weight) != (self.level, self.max_weight):
            raise LevelMismatchError("series of different levels or truncations")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        coeffs = dict(self._coeffs)
        for n, c in other._coeffs.items():
            coeffs[n] = coeffs.get(n, Fraction(0)) + c
        return TruncatedSeries(self.level, self.max_weight, coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.level, self.max_weight, {n: -c for n, c in self._coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        coeffs: Dict[LPartite, Fraction] = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                if sum(a) + sum(b) > self.max_weight:
                    continue
                n = comb.vector_add(a, b)
                coeffs[n] = coeffs.get(n, Fraction(0)) + ca * cb
        return TruncatedSeries(self.level, self.max_weight, coeffs)

    def inverse(self) -> "TruncatedSeries":
        head = self.coefficient(comb.zero(self.level))
        if not head:
            raise PreconditionError("a power series is invertible only with a nonzero constant term")
        result: Dict[LPartite, Fraction] = {}
        for n in comb.lpartites_up_to_weight(self.max_weight, self.level):
            if comb.is_zero(n):
                result[n] = 1 / head
                continue
            total = Fraction(0)
            for j, c in self._coeffs.items():
                if comb.is_zero(j) or not comb.leq(j, n):
                    continue
                total += c * result.get(comb.vector_sub(n, j), Fraction(0))
            result[n] = -total / head
        return TruncatedSeries(self.level, self.max_weight, result)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.level, self.max_weight, self._coeffs) == (other.level, other.max_weight, other._coeffs)

    __hash__ = None

    def by_degree(self) -> Dict[LPartite, Fraction]:
        """Every coefficient up to the truncation, zeros included"""
        return {n: self.coefficient(n) for n in comb.lpartites_up_to_weight(self.max_weight, self.level)}

    def weight_graded(self) -> List[Fraction]:
        """Coefficients after setting every variable equal to t"""
        totals = [Fraction(0)] * (self.max_weight + 1)
        for n, c in self._coeffs.items():
            totals[sum(n)] += c
        return totals

    def __repr__(self) -> str:
        return f"TruncatedSeries(level={self.level}, max_weight={self.max_weight}, terms={len(self._coeffs)})"
