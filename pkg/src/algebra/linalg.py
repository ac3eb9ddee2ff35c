"""
Exact linear algebra over QQ for spans of sparse elements
"""

import logging
from typing import Hashable, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.element import LinearCombination

logger = logging.getLogger(__name__)


def _columns(elements: Sequence[LinearCombination], sort_key) -> List[Hashable]:
    keys = set()
    for element in elements:
        keys.update(element.terms)
    return sorted(keys, key=sort_key)


def coefficient_matrix(elements: Sequence[LinearCombination]) -> DomainMatrix:
    """One row per element, columns indexed by basis keys in canonical order"""
    if not elements:
        return DomainMatrix([], (0, 0), QQ)
    sort_key = type(elements[0])._sort_key
    columns = _columns(elements, sort_key)
    rows = [[QQ(c.numerator, c.denominator) for c in (e.coefficient(key) for key in columns)]
            for e in elements]
    return DomainMatrix(rows, (len(rows), len(columns)), QQ)


def rank(elements: Sequence[LinearCombination]) -> int:
    elements = [e for e in elements if e]
    if not elements:
        return 0
    value = coefficient_matrix(elements).rank()
    logger.debug("rank of %d elements: %d", len(elements), value)
    return value


def in_span(target: LinearCombination, elements: Sequence[LinearCombination]) -> bool:
    if not target:
        return True
    return rank(list(elements) + [target]) == rank(elements)


def same_span(first: Sequence[LinearCombination], second: Sequence[LinearCombination]) -> bool:
    r = rank(first)
    return r == rank(second) == rank(list(first) + list(second))
