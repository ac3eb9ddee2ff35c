"""
Induced coalgebra morphisms, the descents-to-peaks maps and peak functions
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple, Union

from src.algebra import comb
from src.algebra.comb import INF, ColorWord, Composition
from src.algebra.errors import PreconditionError
from src.algebra.functionals import GradedFunctional, NuK
from src.algebra.qsym import Basis, QSymElem, eta

logger = logging.getLogger(__name__)


class PeakPair(NamedTuple):
    """A peak set S of [n] with a color word u of length n"""
    S: FrozenSet[int]
    u: ColorWord

    @classmethod
    def of(cls, S: Iterable[int], u: Union[str, Sequence[int]]) -> "PeakPair":
        u = comb.parse_color_word(u)
        S = frozenset(S)
        if not comb.is_peak_set(S, len(u)):
            raise PreconditionError(f"{sorted(S)} is not a peak subset of [{len(u)}]")
        return cls(S, u)


# ---------------------------------------------------------------------------
# Induced morphisms
# ---------------------------------------------------------------------------

def _value(f: GradedFunctional, J: Composition) -> Fraction:
    return f.component(comb.column_sum(J, f.level)).coefficient(J)


def _induced_on_key(f: GradedFunctional, I: Composition) -> Dict[Composition, Fraction]:
    image: Dict[Composition, Fraction] = {}
    for blocks in comb.nonempty_factorizations(I):
        coef = Fraction(1)
        for block in blocks:
            coef *= _value(f, block)
            if not coef:
                break
        if coef:
            key = tuple(comb.column_sum(block, f.level) for block in blocks)
            image[key] = image.get(key, Fraction(0)) + coef
    return image


def induced_map(f: GradedFunctional, a: QSymElem) -> QSymElem:
    """The coalgebra morphism Psi with zeta composed with Psi equal to f"""
    if a.level != f.level:
        raise PreconditionError(f"functional of level {f.level} applied to level {a.level}")
    return a.map_linear(lambda I: QSymElem(a.level, _induced_on_key(f, I)))


def theta_k(a: QSymElem, k: Sequence) -> QSymElem:
    """Theta^(k) through the morphism induced by nu^k"""
    return induced_map(NuK(a.level, k), a)


# ---------------------------------------------------------------------------
# Peak functions
# ---------------------------------------------------------------------------

def _covered(S: FrozenSet[int], D: FrozenSet[int]) -> bool:
    return all(s in D or s - 1 in D for s in S)


@lru_cache(maxsize=None)
def _peak_function(S: FrozenSet[int], u: ColorWord, level: int) -> Tuple[Tuple[Composition, int], ...]:
    E = comb.coordinate_composition(u, level)
    return tuple((J, 2 ** len(J)) for J in comb.coarsenings(E) if _covered(S, comb.dof(J)))


def peak_function(p: PeakPair, level: int) -> QSymElem:
    """theta_{S,u}: sum of 2^len(J) M_J over J below E_u with S inside dof(J) and dof(J)+1"""
    p = PeakPair.of(p.S, p.u)
    return QSymElem(level, dict(_peak_function(p.S, p.u, level)))


def admissible_pairs(n: int, level: int) -> List[PeakPair]:
    """Admissible (S, u) with len(u) = n; they index a basis of the peak algebra in degree weight n"""
    found = []
    for u in product(range(level), repeat=n):
        found.extend(PeakPair(S, u) for S in comb.admissible_pairs(u, level))
    return found


# ---------------------------------------------------------------------------
# Theta
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _theta_on_m(I: Composition, level: int) -> Tuple[Tuple[Composition, Fraction], ...]:
    if not I:
        return (((), Fraction(1)),)
    if sum(I[-1]) % 2 == 0:
        return ()
    sign = (-1) ** (len(I) + comb.composition_weight(I))
    return tuple((J, sign * c) for J, c in eta(level, comb.odd_part(I)).terms.items())


def _theta_on_f(I: Composition, level: int) -> Dict[Composition, int]:
    return dict(_peak_function(comb.pof(I), comb.cof(I), level))


def theta_inf(a: QSymElem, input_basis: Union[str, Basis] = Basis.M) -> QSymElem:
    """Theta on an element whose keys are coordinates in the M or F basis; the result is in M"""
    input_basis = Basis(input_basis)
    level = a.level
    if input_basis == Basis.M:
        return a.map_linear(lambda I: QSymElem(level, dict(_theta_on_m(I, level))))
    if input_basis == Basis.F:
        return a.map_linear(lambda I: QSymElem(level, _theta_on_f(I, level)))
    raise PreconditionError("Theta has closed forms on the M and F bases only")


def _covers_descents(dof_I: FrozenSet[int], D: FrozenSet[int], k: int) -> bool:
    shifted = D | {0}
    return all(any(d - t in shifted for t in range(k + 1)) for d in dof_I)


@lru_cache(maxsize=None)
def _theta_k_level1(I: Composition, k: int) -> Tuple[Tuple[Composition, int], ...]:
    n = comb.composition_weight(I)
    peaks, descents = comb.pof(I), comb.dof(I)
    terms = []
    for J in comb.compositions_of((n,)):
        D = comb.dof(J)
        if _covered(peaks, D) and _covers_descents(descents, D, k):
            terms.append((J, 2 ** len(J)))
    return tuple(terms)


def theta_k_level1(a: QSymElem, k: Union[int, float], input_basis: Union[str, Basis] = Basis.F) -> QSymElem:
    """Theta^(k) at level 1 on F-coordinates; even k gives the same map as k - 1"""
    if a.level != 1:
        raise PreconditionError("the closed form of Theta^(k) is available at level 1 only")
    if Basis(input_basis) != Basis.F:
        raise PreconditionError("the closed form of Theta^(k) takes F-coordinates")
    if k == INF:
        return theta_inf(a, Basis.F)
    if not isinstance(k, int) or k < 1:
        raise PreconditionError(f"Theta^(k) needs k >= 1, got {k!r}")
    if k % 2 == 0:
        k -= 1
    return a.map_linear(lambda I: QSymElem(1, dict(_theta_k_level1(I, k))))


# ---------------------------------------------------------------------------
# eta <-> theta
# ---------------------------------------------------------------------------

def _subsets(S: FrozenSet[int]) -> List[FrozenSet[int]]:
    items = sorted(S)
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def eta_in_theta(I: Sequence, level: int) -> Dict[PeakPair, Fraction]:
    """eta_I for odd I as a signed sum of peak functions"""
    I = comb.validate_composition(I, level)
    if not comb.is_odd_composition(I):
        raise PreconditionError("eta_I has a peak expansion only when every column has odd weight")
    u = comb.cof(I)
    return {PeakPair(S, u): Fraction((-1) ** len(S)) for S in _subsets(comb.pof(comb.tilde(I)))}


def theta_in_eta(p: PeakPair, level: int) -> Dict[Composition, Fraction]:
    """theta_{S,u} for admissible (S, u) as a signed sum of eta_I with odd I"""
    p = PeakPair.of(p.S, p.u)
    if not comb.is_admissible(p.S, p.u, level):
        raise PreconditionError(f"({sorted(p.S)}, {''.join(map(str, p.u))}) is not admissible")
    coords: Dict[Composition, Fraction] = {}
    for T in _subsets(p.S):
        I = comb.odd_part(comb.peak_composition(T, p.u, level))
        coords[I] = coords.get(I, Fraction(0)) + (-1) ** len(T)
    return {I: c for I, c in coords.items() if c}


def eta_theta_convert(direction: str, index, level: int) -> QSymElem:
    """Expand either side of the eta/theta dictionary in M

    direction "eta-to-theta" takes an odd composition and sums the peak
    functions; "theta-to-eta" takes a PeakPair and sums the eta basis.
    """
    if direction == "eta-to-theta":
        total = QSymElem.zero(level)
        for p, c in eta_in_theta(index, level).items():
            total = total + peak_function(p, level).scale(c)
        return total
    if direction == "theta-to-eta":
        total = QSymElem.zero(level)
        for I, c in theta_in_eta(index, level).items():
            total = total + eta(level, I).scale(c)
        return total
    raise PreconditionError(f"direction must be eta-to-theta or theta-to-eta, got {direction!r}")


def theta_basis_change(p: PeakPair, level: int) -> Dict[PeakPair, Fraction]:
    """Round trip theta -> eta -> theta in coordinates; the identity on admissible pairs"""
    result: Dict[PeakPair, Fraction] = {}
    for I, c in theta_in_eta(p, level).items():
        for q, d in eta_in_theta(I, level).items():
            result[q] = result.get(q, Fraction(0)) + c * d
    return {q: c for q, c in result.items() if c}
