"""
Noncommutative symmetric functions of level l

Elements are stored in the complete basis S^I; the power sum basis Phi
and the basis Upsilon dual to eta are coordinate views.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from src.algebra import comb
from src.algebra.comb import Composition, LPartite
from src.algebra.element import to_fraction
from src.algebra.errors import InputFormatError, PreconditionError
from src.algebra.qsym import CompositionIndexed

logger = logging.getLogger(__name__)


class NSymElem(CompositionIndexed):
    """An element of NSym^(l) in the S-basis"""

    algebra = "NSym"
    basis = "S"

    def _multiply_keys(self, a: Composition, b: Composition) -> Mapping[Composition, int]:
        return {a + b: 1}

    def _coproduct_key(self, key: Composition) -> Mapping[Tuple[Composition, Composition], int]:
        return dict(_s_coproduct(key))

    def _antipode_key(self, key: Composition) -> Mapping[Composition, int]:
        return dict(_s_antipode(key))


class NSymBasis(str, Enum):
    S = "S"
    PHI = "Phi"
    UPSILON = "Upsilon"


def parse_nsym_basis(name: str) -> NSymBasis:
    aliases = {"Φ": "Phi", "phi": "Phi", "Υ": "Upsilon", "upsilon": "Upsilon"}
    try:
        return NSymBasis(aliases.get(name, name))
    except ValueError as exc:
        raise InputFormatError(f"unknown NSym basis {name!r}") from exc


def S(level: int, I: Iterable, coef=1) -> NSymElem:
    return NSymElem(level, {tuple(tuple(c) for c in I): coef})


def complete(n: Sequence[int], level: int) -> NSymElem:
    """S_n; S_0 is the unit"""
    n = comb.validate_lpartite(n, level)
    return NSymElem.one(level) if comb.is_zero(n) else S(level, [n])


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

def s_product(a: NSymElem, b: NSymElem) -> NSymElem:
    return a * b


@lru_cache(maxsize=None)
def _s_coproduct(I: Composition) -> Tuple[Tuple[Tuple[Composition, Composition], int], ...]:
    terms: Dict[Tuple[Composition, Composition], int] = {((), ()): 1}
    for column in I:
        step: Dict[Tuple[Composition, Composition], int] = {}
        for (left, right), mult in terms.items():
            for j in comb.lpartites_below(column):
                rest = comb.vector_sub(column, j)
                key = (left + ((j,) if any(j) else ()), right + ((rest,) if any(rest) else ()))
                step[key] = step.get(key, 0) + mult
        terms = step
    return tuple(terms.items())


def s_coproduct(a: NSymElem):
    return a.coproduct()


@lru_cache(maxsize=None)
def _s_antipode(I: Composition) -> Tuple[Tuple[Composition, int], ...]:
    return tuple((comb.reverse(K), (-1) ** len(K)) for K in comb.refinements(I))


def antipode(a: NSymElem, in_basis: NSymBasis = NSymBasis.S) -> NSymElem:
    """Antipode of a; with in_basis=Phi the keys of a are read and returned as Phi-coordinates"""
    in_basis = NSymBasis(in_basis)
    if in_basis == NSymBasis.S:
        return a.antipode()
    if in_basis == NSymBasis.PHI:
        return NSymElem(a.level, {comb.reverse(I): (-1) ** len(I) * c for I, c in a.terms.items()})
    raise PreconditionError("antipode is available in the S and Phi bases")


# ---------------------------------------------------------------------------
# Changes of basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _expansion_in_s(basis: NSymBasis, I: Composition) -> Tuple[Tuple[Composition, Fraction], ...]:
    if basis == NSymBasis.S:
        return ((I, Fraction(1)),)
    terms = {}
    for J in comb.refinements(I):
        sign = (-1) ** (len(J) - len(I))
        if basis == NSymBasis.PHI:
            terms[J] = Fraction(sign * comb.pi(I), comb.block_len(I, J))
        else:
            terms[J] = Fraction(sign, 2 ** len(J))
    return tuple(terms.items())


@lru_cache(maxsize=None)
def _s_in_basis(basis: NSymBasis, I: Composition) -> Tuple[Tuple[Composition, Fraction], ...]:
    if basis == NSymBasis.S:
        return ((I, Fraction(1)),)
    terms = {}
    for J in comb.refinements(I):
        if basis == NSymBasis.PHI:
            terms[J] = Fraction(1, comb.block_sp(I, J))
        else:
            terms[J] = Fraction(2 ** len(I))
    return tuple(terms.items())


def from_coordinates(level: int, basis: NSymBasis, coordinates: Mapping[Composition, object]) -> NSymElem:
    result: Dict[Composition, Fraction] = {}
    for I, coef in coordinates.items():
        coef = to_fraction(coef)
        I = comb.validate_composition(I, level)
        for J, c in _expansion_in_s(NSymBasis(basis), I):
            result[J] = result.get(J, Fraction(0)) + coef * c
    return NSymElem(level, result)


def coordinates(a: NSymElem, basis: NSymBasis) -> NSymElem:
    """Coordinates of an S-basis element in the named basis, wrapped as an element"""
    result: Dict[Composition, Fraction] = {}
    for I, coef in a.terms.items():
        for J, c in _s_in_basis(NSymBasis(basis), I):
            result[J] = result.get(J, Fraction(0)) + coef * c
    return NSymElem(a.level, result)


def phi_from_s(a: NSymElem) -> NSymElem:
    return coordinates(a, NSymBasis.PHI)


def s_from_phi(a: NSymElem) -> NSymElem:
    return from_coordinates(a.level, NSymBasis.PHI, a.terms)


def upsilon_from_s(a: NSymElem) -> NSymElem:
    return coordinates(a, NSymBasis.UPSILON)


def s_from_upsilon(a: NSymElem) -> NSymElem:
    return from_coordinates(a.level, NSymBasis.UPSILON, a.terms)


def convert(a: NSymElem, source: NSymBasis, target: NSymBasis) -> NSymElem:
    source, target = NSymBasis(source), NSymBasis(target)
    if source == target:
        return a
    return coordinates(from_coordinates(a.level, source, a.terms), target)


def phi(level: int, I: Iterable) -> NSymElem:
    """Phi^I expanded in S"""
    return from_coordinates(level, NSymBasis.PHI, {tuple(tuple(c) for c in I): 1})


def upsilon(level: int, I: Iterable) -> NSymElem:
    """Upsilon^I expanded in S"""
    return from_coordinates(level, NSymBasis.UPSILON, {tuple(tuple(c) for c in I): 1})


def phi_power(n: Sequence[int], level: int) -> NSymElem:
    n = comb.validate_lpartite(n, level)
    if comb.is_zero(n):
        raise PreconditionError("Phi_n needs n != 0")
    return phi(level, [n])


def upsilon_power(n: Sequence[int], level: int) -> NSymElem:
    n = comb.validate_lpartite(n, level)
    if comb.is_zero(n):
        raise PreconditionError("Upsilon_n needs n != 0")
    return upsilon(level, [n])


def upsilon_from_phi(I: Sequence, level: int) -> NSymElem:
    """Upsilon^I in Phi-coordinates, summed over blockwise refinements with odd block lengths"""
    I = comb.validate_composition(I, level)
    terms: Dict[Composition, Fraction] = {}
    for J in comb.refinements(I):
        blocks = comb.refinement_blocks(I, J)
        if any(len(block) % 2 == 0 for block in blocks):
            continue
        coef = Fraction((-1) ** ((len(J) - len(I)) // 2), 2 ** len(J))
        for block in blocks:
            coef *= Fraction(comb.euler_number(len(block)), comb.sp(block))
        terms[J] = coef
    return NSymElem(level, terms)


# ---------------------------------------------------------------------------
# Euler elements
# ---------------------------------------------------------------------------

def euler_chi(n: Sequence[int], level: int) -> NSymElem:
    """chi_n = sum over j <= n of (-1)^|j| S^(j, n - j), zero parts dropped"""
    n = comb.validate_lpartite(n, level)
    if comb.is_zero(n):
        raise PreconditionError("euler_chi needs n != 0")
    terms: Dict[Composition, int] = {}
    for j in comb.lpartites_below(n):
        rest = comb.vector_sub(n, j)
        key = tuple(part for part in (j, rest) if any(part))
        terms[key] = terms.get(key, 0) + (-1) ** sum(j)
    return NSymElem(level, terms)


def degree_of(a: NSymElem) -> LPartite:
    degrees = a.degrees()
    if len(degrees) != 1:
        raise PreconditionError("element is not homogeneous")
    return degrees[0]
