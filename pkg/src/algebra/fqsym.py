"""
Free quasisymmetric functions of level l

Basis elements F_{sigma,u} are keyed by colored permutations.
"""

import json
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Mapping, Sequence, Tuple

from src.algebra import comb
from src.algebra.comb import ColoredPermutation, LPartite
from src.algebra.element import LinearCombination, Tensor
from src.algebra.errors import InputFormatError, LevelMismatchError
from src.algebra.qsym import QSymElem

logger = logging.getLogger(__name__)

UNIT = ColoredPermutation((), ())


def colored_permutation(sigma: Sequence[int], u: Sequence[int], level: int) -> ColoredPermutation:
    sigma, u = tuple(sigma), comb.parse_color_word(u)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise InputFormatError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    if len(u) != len(sigma):
        raise InputFormatError(f"color word {u} and permutation {sigma} differ in length")
    for color in u:
        if not 0 <= color < level:
            raise LevelMismatchError(f"color {color} is outside 0..{level - 1}")
    return ColoredPermutation(sigma, u)


def _standard_part(sigma: Sequence[int], u: Sequence[int]) -> ColoredPermutation:
    return ColoredPermutation(comb.standardize(sigma) if sigma else (), tuple(u))


class FQSymElem(LinearCombination):
    """An element of FQSym^(l) in the F-basis"""

    algebra = "FQSym"
    basis = "F"

    def _validate_key(self, key) -> ColoredPermutation:
        try:
            sigma, u = key
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"not a colored permutation: {key!r}") from exc
        return colored_permutation(sigma, u, self.level)

    @classmethod
    def _unit_key(cls, level: int) -> ColoredPermutation:
        return UNIT

    @classmethod
    def _sort_key(cls, key: ColoredPermutation) -> Tuple:
        return (len(key.sigma), key.sigma, key.colors)

    def _degree_of(self, key: ColoredPermutation) -> LPartite:
        return comb.mdeg(key.colors, self.level)

    def _multiply_keys(self, a: ColoredPermutation, b: ColoredPermutation) -> Mapping[ColoredPermutation, int]:
        shift = len(a.sigma)
        left = tuple(zip(a.sigma, a.colors))
        right = tuple((x + shift, c) for x, c in zip(b.sigma, b.colors))
        result: Dict[ColoredPermutation, int] = {}
        for word, mult in comb.shuffles(left, right).items():
            key = ColoredPermutation(tuple(x for x, _ in word), tuple(c for _, c in word))
            result[key] = result.get(key, 0) + mult
        return result

    def _coproduct_key(self, key: ColoredPermutation) -> Mapping[Tuple[ColoredPermutation, ColoredPermutation], int]:
        sigma, u = key
        return {(_standard_part(sigma[:r], u[:r]), _standard_part(sigma[r:], u[r:])): 1
                for r in range(len(sigma) + 1)}

    def _antipode_key(self, key: ColoredPermutation) -> Mapping[ColoredPermutation, Fraction]:
        return dict(_antipode(key, self.level))

    @classmethod
    def _format_key(cls, key: ColoredPermutation) -> str:
        return json.dumps([list(key.sigma), list(key.colors)], separators=(",", ":"))


@lru_cache(maxsize=None)
def _antipode(key: ColoredPermutation, level: int) -> Tuple[Tuple[ColoredPermutation, Fraction], ...]:
    """S(x) = -x - sum of S(x1) x2 over coproduct terms with both factors nontrivial"""
    if key == UNIT:
        return ((UNIT, Fraction(1)),)
    x = FQSymElem.monomial(level, key)
    total = -x
    for (left, right), _ in x._coproduct_key(key).items():
        if left == UNIT or right == UNIT:
            continue
        s_left = FQSymElem(level, dict(_antipode(left, level)))
        total = total - s_left * FQSymElem.monomial(level, right)
    return tuple(total.terms.items())


def F(level: int, sigma: Sequence[int], u: Sequence[int], coef=1) -> FQSymElem:
    return FQSymElem(level, {(tuple(sigma), comb.parse_color_word(u)): coef})


def product(a: FQSymElem, b: FQSymElem) -> FQSymElem:
    return a * b


def coproduct(a: FQSymElem) -> Tensor:
    return a.coproduct()


def antipode(a: FQSymElem) -> FQSymElem:
    return a.antipode()


def counit(a: FQSymElem) -> Fraction:
    return a.counit()


def s_embed(n: Sequence[int], level: int) -> FQSymElem:
    """S_n as the sum of F_{12...m,u} over color words u of multidegree n"""
    n = comb.validate_lpartite(n, level)
    identity = tuple(range(1, sum(n) + 1))
    return FQSymElem(level, {(identity, u): 1 for u in comb.color_words(n)})


def descent_class(sigma: Sequence[int], u: Sequence[int], level: int) -> Dict[Tuple, int]:
    """M-coordinates of the sum over I with wdes(sigma, u) below I below E_u"""
    n = len(sigma)
    if n == 0:
        return {(): 1}
    forced = comb.descents(sigma)
    free = [d for d in range(1, n) if d not in forced]
    terms: Dict[Tuple, int] = {}
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            I = comb.cut_word(tuple(u), forced | set(extra), level)
            terms[I] = terms.get(I, 0) + 1
    return terms


def d_map(a: FQSymElem) -> QSymElem:
    """The abelianization onto QSym^(l)"""
    level = a.level
    return a.map_linear(lambda key: QSymElem(level, descent_class(key.sigma, key.colors, level)),
                        target=QSymElem)
