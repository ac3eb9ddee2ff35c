"""
Quasisymmetric functions of level l

Elements are stored in the monomial basis M. The fundamental (F),
power sum dual (P) and eta bases are coordinate views reached through
triangular changes of basis.
"""

import json
import logging
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.algebra import comb
from src.algebra.comb import Composition, LPartite, RefinementOrder
from src.algebra.element import LinearCombination, Tensor, to_fraction
from src.algebra.errors import InputFormatError, LevelMismatchError, PreconditionError

logger = logging.getLogger(__name__)


def format_composition(I: Composition) -> str:
    return json.dumps([list(column) for column in I], separators=(",", ":"))


class CompositionIndexed(LinearCombination):
    """Shared key handling for algebras indexed by vector compositions"""

    def _validate_key(self, key) -> Composition:
        try:
            columns = tuple(tuple(column) for column in key)
        except TypeError as exc:
            raise InputFormatError(f"not a vector composition: {key!r}") from exc
        return comb.validate_composition(columns, self.level)

    def _degree_of(self, key: Composition) -> LPartite:
        return comb.column_sum(key, self.level)

    @classmethod
    def _sort_key(cls, key: Composition) -> Tuple:
        return comb.canonical_key(key)

    @classmethod
    def _format_key(cls, key: Composition) -> str:
        return format_composition(key)


class QSymElem(CompositionIndexed):
    """An element of QSym^(l) in the M-basis"""

    algebra = "QSym"
    basis = "M"

    def _multiply_keys(self, a: Composition, b: Composition) -> Mapping[Composition, int]:
        return comb.quasi_shuffles(a, b)

    def _coproduct_key(self, key: Composition) -> Mapping[Tuple[Composition, Composition], int]:
        return {(key[:r], key[r:]): 1 for r in range(len(key) + 1)}

    def _antipode_key(self, key: Composition) -> Mapping[Composition, int]:
        return _m_antipode(key)


class Basis(str, Enum):
    M = "M"
    F = "F"
    P = "P"
    ETA = "eta"


def parse_basis(name: str) -> Basis:
    aliases = {"η": "eta", "Eta": "eta", "ETA": "eta"}
    try:
        return Basis(aliases.get(name, name))
    except ValueError as exc:
        raise InputFormatError(f"unknown QSym basis {name!r}") from exc


def M(level: int, I: Iterable, coef=1) -> QSymElem:
    return QSymElem(level, {tuple(tuple(c) for c in I): coef})


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

def m_product(a: QSymElem, b: QSymElem) -> QSymElem:
    return a * b


def m_coproduct(a: QSymElem) -> Tensor:
    return a.coproduct()


@lru_cache(maxsize=None)
def _m_antipode(I: Composition) -> Dict[Composition, int]:
    sign = (-1) ** len(I)
    return {J: sign for J in comb.coarsenings(comb.reverse(I))}


def m_antipode(a: QSymElem) -> QSymElem:
    return a.antipode()


def counit(a: QSymElem) -> Fraction:
    return a.counit()


# ---------------------------------------------------------------------------
# Changes of basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _expansion_in_m(basis: Basis, I: Composition) -> Tuple[Tuple[Composition, Fraction], ...]:
    if basis == Basis.M:
        terms = {I: Fraction(1)}
    elif basis == Basis.F:
        terms = {J: Fraction(1) for J in comb.refinements(I, RefinementOrder.WEAK)}
    elif basis == Basis.P:
        terms = {J: Fraction(1, comb.block_sp(J, I)) for J in comb.coarsenings(I)}
    else:
        terms = {J: Fraction(2 ** len(J)) for J in comb.coarsenings(I)}
    return tuple(terms.items())


@lru_cache(maxsize=None)
def _m_in_basis(basis: Basis, I: Composition) -> Tuple[Tuple[Composition, Fraction], ...]:
    if basis == Basis.M:
        terms = {I: Fraction(1)}
    elif basis == Basis.F:
        terms = {J: Fraction((-1) ** (len(J) - len(I)))
                 for J in comb.refinements(I, RefinementOrder.WEAK)}
    elif basis == Basis.P:
        terms = {J: Fraction((-1) ** (len(I) - len(J)) * comb.pi(J), comb.block_len(J, I))
                 for J in comb.coarsenings(I)}
    else:
        terms = {J: Fraction((-1) ** (len(I) - len(J)), 2 ** len(I)) for J in comb.coarsenings(I)}
    return tuple(terms.items())


def basis_element(basis: Basis, I: Sequence, level: int) -> QSymElem:
    """The basis element X_I of the named basis, expanded in M"""
    I = comb.validate_composition(I, level)
    return QSymElem(level, dict(_expansion_in_m(Basis(basis), I)))


def F(level: int, I: Iterable) -> QSymElem:
    return basis_element(Basis.F, tuple(tuple(c) for c in I), level)


def P(level: int, I: Iterable) -> QSymElem:
    return basis_element(Basis.P, tuple(tuple(c) for c in I), level)


def eta(level: int, I: Iterable) -> QSymElem:
    return basis_element(Basis.ETA, tuple(tuple(c) for c in I), level)


def from_coordinates(level: int, basis: Basis, coordinates: Mapping[Composition, object]) -> QSymElem:
    """Materialize sum c_I X_I in the M-basis"""
    result: Dict[Composition, Fraction] = {}
    for I, coef in coordinates.items():
        coef = to_fraction(coef)
        I = comb.validate_composition(I, level)
        for J, c in _expansion_in_m(Basis(basis), I):
            result[J] = result.get(J, Fraction(0)) + coef * c
    return QSymElem(level, result)


def coordinates(a: QSymElem, basis: Basis) -> Dict[Composition, Fraction]:
    """Coordinates of an M-basis element in the named basis"""
    result: Dict[Composition, Fraction] = {}
    for I, coef in a.terms.items():
        for J, c in _m_in_basis(Basis(basis), I):
            result[J] = result.get(J, Fraction(0)) + coef * c
    return {J: c for J, c in result.items() if c}


def convert(a: QSymElem, source: Basis, target: Basis) -> QSymElem:
    """Reinterpret the keys of a as source-basis coordinates and return target-basis coordinates"""
    source, target = Basis(source), Basis(target)
    if source == target:
        return a
    in_m = from_coordinates(a.level, source, a.terms)
    logger.debug("converted %d %s-terms to %d M-terms", len(a), source.value, len(in_m))
    return QSymElem(a.level, coordinates(in_m, target))


# ---------------------------------------------------------------------------
# eta <-> P through Euler numbers
# ---------------------------------------------------------------------------

def _odd_length_factorizations(I: Composition) -> List[Tuple[Composition, ...]]:
    return [blocks for blocks in comb.nonempty_factorizations(I)
            if all(len(block) % 2 == 1 for block in blocks)]


def eta_from_p(I: Sequence, level: int) -> QSymElem:
    """eta_I written in P-coordinates"""
    I = comb.validate_composition(I, level)
    terms: Dict[Composition, Fraction] = {}
    for blocks in _odd_length_factorizations(I):
        coef = Fraction(2 ** len(blocks))
        for block in blocks:
            coef *= Fraction(comb.composition_weight(block), len(block))
        key = tuple(comb.column_sum(block, level) for block in blocks)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return QSymElem(level, terms)


def p_from_eta(I: Sequence, level: int) -> QSymElem:
    """P_I written in eta-coordinates, inverse to eta_from_p"""
    I = comb.validate_composition(I, level)
    terms: Dict[Composition, Fraction] = {}
    for blocks in _odd_length_factorizations(I):
        m = len(blocks)
        coef = Fraction((-1) ** ((len(I) - m) // 2), 2 ** len(I) * comb.pi(I))
        for block in blocks:
            coef *= Fraction(comb.euler_number(len(block)), math.factorial(len(block)))
        key = tuple(comb.column_sum(block, level) for block in blocks)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return QSymElem(level, terms)


# ---------------------------------------------------------------------------
# Multi-symmetric functions
# ---------------------------------------------------------------------------

def _arrangements(parts: Sequence[LPartite]) -> List[Composition]:
    return sorted(set(permutations(parts)), key=comb.canonical_key)


def monomial_symmetric(parts: Sequence[Sequence[int]], level: int) -> QSymElem:
    parts = comb.validate_composition(parts, level)
    return QSymElem(level, {I: 1 for I in _arrangements(parts)})


def complete_symmetric(n: Sequence[int], level: int) -> QSymElem:
    n = comb.validate_lpartite(n, level)
    terms: Dict[Composition, Fraction] = {}
    for u in comb.color_words(n):
        for J in comb.coarsenings(comb.coordinate_composition(u, level)):
            terms[J] = terms.get(J, Fraction(0)) + 1
    return QSymElem(level, terms)


def power_sum(parts: Sequence[Sequence[int]], level: int) -> QSymElem:
    parts = comb.validate_composition(parts, level)
    result = QSymElem.one(level)
    for part in parts:
        result = result * M(level, [part])
    return result


def power_sum_via_p_basis(parts: Sequence[Sequence[int]], level: int) -> QSymElem:
    """z_lambda times the sum of P_I over arrangements of lambda"""
    parts = comb.validate_composition(parts, level)
    coords = {I: comb.z_lambda(parts) for I in _arrangements(parts)}
    return from_coordinates(level, Basis.P, coords)


def sym_embed(kind: str, index: Sequence, level: int) -> QSymElem:
    if kind == "m":
        return monomial_symmetric(index, level)
    if kind == "h":
        return complete_symmetric(index, level)
    if kind == "p":
        return power_sum(index, level)
    raise PreconditionError(f"unknown symmetric family {kind!r}; expected m, h or p")


# ---------------------------------------------------------------------------
# Colored monomials
# ---------------------------------------------------------------------------

ColoredIndex = Tuple[Tuple[int, int], ...]


class ColoredQSymElem(LinearCombination):
    """Coordinates over colored compositions ((part, color), ...)"""

    algebra = "QSymColored"
    basis = "M"

    def _validate_key(self, key) -> ColoredIndex:
        key = tuple((int(part), int(color)) for part, color in key)
        for part, color in key:
            if part < 1 or not 0 <= color < self.level:
                raise InputFormatError(f"bad colored part ({part}, {color}) at level {self.level}")
        return key

    def _degree_of(self, key: ColoredIndex) -> LPartite:
        degree = [0] * self.level
        for part, color in key:
            degree[color] += part
        return tuple(degree)

    @classmethod
    def _format_key(cls, key: ColoredIndex) -> str:
        return json.dumps([list(pair) for pair in key], separators=(",", ":"))


def colored_monomial(alpha: Sequence[Tuple[int, int]], level: int) -> QSymElem:
    """M^(l)_alpha as a sum over strict coarsenings of its coordinate-column composition"""
    columns = []
    for part, color in alpha:
        if part < 1:
            raise PreconditionError(f"colored parts must be positive, got {part}")
        if not 0 <= color < level:
            raise LevelMismatchError(f"color {color} is outside 0..{level - 1}")
        columns.append(tuple(part if c == color else 0 for c in range(level)))
    return QSymElem(level, {J: 1 for J in comb.coarsenings(tuple(columns), RefinementOrder.STRICT)})


def monochromatic_project(a: QSymElem) -> ColoredQSymElem:
    """Keep the monochromatic M_I and relabel them by their (weight, color) words"""
    terms: Dict[ColoredIndex, Fraction] = {}
    for I, coef in a.terms.items():
        supports = [comb.support(column) for column in I]
        if all(len(s) == 1 for s in supports):
            key = tuple((sum(column), s[0]) for column, s in zip(I, supports))
            terms[key] = terms.get(key, Fraction(0)) + coef
    return ColoredQSymElem(a.level, terms)


def dimension(n: LPartite) -> int:
    return len(comb.compositions_of(tuple(n)))
