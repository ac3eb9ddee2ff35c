"""
Canonical k-odd and k-even subalgebras of QSym^(l) and their orthogonal ideals

Everything is exposed degreewise: a basis or ideal piece is requested for
one multidegree n, and series are truncated at a total weight.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from src.algebra import comb, functionals, linalg, nsym
from src.algebra.comb import INF, Composition, LPartite
from src.algebra.errors import InputFormatError, MultiQSymError, PreconditionError
from src.algebra.nsym import NSymElem
from src.algebra.qsym import Basis, QSymElem, basis_element
from src.algebra.series import TruncatedSeries

logger = logging.getLogger(__name__)


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


class GeneratorKind(str, Enum):
    PHI = "Phi"
    UPSILON = "Upsilon"
    CHI = "Chi"
    S = "S"


class HilbertMode(str, Enum):
    CLOSED_FORM = "closed_form"
    ENUMERATE = "enumerate"
    BOTH = "both"


class OddEvenSpec(BaseModel):
    """Level, threshold k and parity selecting O^k or E^k"""

    model_config = ConfigDict(frozen=True)

    level: int
    k: Tuple[Union[int, float], ...]
    parity: Parity

    @classmethod
    def build(cls, level: int, k: Sequence, parity: Union[str, Parity]) -> "OddEvenSpec":
        level = comb.check_level(level)
        k = comb.validate_ext_lpartite(k, level)
        try:
            parity = Parity(parity)
        except ValueError as exc:
            raise InputFormatError(f"parity must be 'odd' or 'even', got {parity!r}") from exc
        return cls(level=level, k=k, parity=parity)

    def forbids(self, column: LPartite) -> bool:
        """Columns n <= k of the wrong weight parity are excluded from basis indices"""
        if not comb.leq(column, self.k):
            return False
        wrong = 0 if self.parity == Parity.ODD else 1
        return sum(column) % 2 == wrong


def _require(spec: OddEvenSpec, parity: Parity) -> None:
    if spec.parity != parity:
        raise PreconditionError(f"operation needs parity={parity.value}, got {spec.parity.value}")


# ---------------------------------------------------------------------------
# Bases
# ---------------------------------------------------------------------------

def basis_indices(spec: OddEvenSpec, n: Sequence[int]) -> List[Composition]:
    n = comb.validate_lpartite(n, spec.level)
    return [I for I in comb.compositions_of(n) if not any(spec.forbids(c) for c in I)]


def odd_basis(spec: OddEvenSpec, n: Sequence[int], basis: Union[str, Basis] = Basis.P) -> List[Composition]:
    """Indices I of the P- (or eta-) basis of O^k_n"""
    _require(spec, Parity.ODD)
    if Basis(basis) not in (Basis.P, Basis.ETA):
        raise PreconditionError("the odd subalgebra has bases indexed in P or eta")
    return basis_indices(spec, n)


def even_basis(spec: OddEvenSpec, n: Sequence[int]) -> List[Composition]:
    """Indices I of the M-basis of E^k_n"""
    _require(spec, Parity.EVEN)
    return basis_indices(spec, n)


def basis_elements(spec: OddEvenSpec, n: Sequence[int], basis: Union[str, Basis] = Basis.P) -> List[QSymElem]:
    """The basis of the degree-n piece, expanded in M"""
    if spec.parity == Parity.ODD:
        return [basis_element(basis, I, spec.level) for I in odd_basis(spec, n, basis)]
    return [basis_element(Basis.M, I, spec.level) for I in even_basis(spec, n)]


@lru_cache(maxsize=None)
def _dimension_table(spec: OddEvenSpec, n: LPartite) -> Dict[LPartite, int]:
    table: Dict[LPartite, int] = {}
    for m in sorted(comb.lpartites_below(n), key=sum):
        if comb.is_zero(m):
            table[m] = 1
            continue
        table[m] = sum(table[comb.vector_sub(m, c)] for c in comb.lpartites_below(m)
                       if not comb.is_zero(c) and not spec.forbids(c))
    return table


def basis_dimension(spec: OddEvenSpec, n: Sequence[int]) -> int:
    n = comb.validate_lpartite(n, spec.level)
    return _dimension_table(spec, n)[n]


# ---------------------------------------------------------------------------
# Ideal generators
# ---------------------------------------------------------------------------

def generator_degrees(spec: OddEvenSpec, max_weight: int) -> List[LPartite]:
    """Degrees 0 < n <= k of even weight (odd parity) or odd weight (even parity)"""
    found = []
    for w in range(1, max_weight + 1):
        for n in comb.lpartites_of_weight(w, spec.level):
            if spec.forbids(n):
                found.append(n)
    return found


def _generator(kind: GeneratorKind, n: LPartite, level: int) -> NSymElem:
    if kind == GeneratorKind.PHI:
        return nsym.phi_power(n, level)
    if kind == GeneratorKind.UPSILON:
        return nsym.upsilon_power(n, level)
    if kind == GeneratorKind.CHI:
        return nsym.euler_chi(n, level)
    return nsym.complete(n, level)


def _check_kind(spec: OddEvenSpec, kind: Union[str, GeneratorKind]) -> GeneratorKind:
    try:
        kind = GeneratorKind(kind)
    except ValueError as exc:
        raise InputFormatError(f"unknown generator family {kind!r}") from exc
    if (kind == GeneratorKind.S) != (spec.parity == Parity.EVEN):
        raise PreconditionError(f"generator family {kind.value} does not apply to parity {spec.parity.value}")
    return kind


def ideal_generators(spec: OddEvenSpec, kind: Union[str, GeneratorKind],
                     max_weight: int) -> List[Tuple[LPartite, NSymElem]]:
    """(degree, generator) pairs of the orthogonal ideal up to a total weight"""
    kind = _check_kind(spec, kind)
    return [(n, _generator(kind, n, spec.level)) for n in generator_degrees(spec, max_weight)]


def ideal_piece(spec: OddEvenSpec, n: Sequence[int],
                kind: Union[str, GeneratorKind] = None) -> List[NSymElem]:
    """A spanning set S^A g S^B of the degree-n piece of the two-sided ideal"""
    n = comb.validate_lpartite(n, spec.level)
    if kind is None:
        kind = GeneratorKind.PHI if spec.parity == Parity.ODD else GeneratorKind.S
    kind = _check_kind(spec, kind)
    spanning = []
    for g in comb.lpartites_below(n):
        if comb.is_zero(g) or not spec.forbids(g):
            continue
        generator = _generator(kind, g, spec.level)
        rest = comb.vector_sub(n, g)
        for a in comb.lpartites_below(rest):
            b = comb.vector_sub(rest, a)
            for A in comb.compositions_of(a):
                left = NSymElem.monomial(spec.level, A)
                for B in comb.compositions_of(b):
                    spanning.append(left * generator * NSymElem.monomial(spec.level, B))
    logger.debug("ideal piece at %s spanned by %d products", n, len(spanning))
    return spanning


def ideal_dimension(spec: OddEvenSpec, n: Sequence[int], kind: Union[str, GeneratorKind] = None) -> int:
    return linalg.rank(ideal_piece(spec, n, kind))


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _defining_pair(level: int, parity: Parity) -> Tuple[functionals.GradedFunctional, functionals.GradedFunctional]:
    if parity == Parity.ODD:
        return functionals.ZetaBar(level), functionals.ZetaInverse(level)
    return functionals.ZetaBar(level), functionals.Zeta(level)


def _membership_by_coproduct(a: QSymElem, spec: OddEvenSpec) -> bool:
    """Each homogeneous component is tested on its own"""
    return all(_homogeneous_membership(a.homogeneous_component(n), spec) for n in a.degrees())


def _homogeneous_membership(a: QSymElem, spec: OddEvenSpec) -> bool:
    phi, psi = _defining_pair(spec.level, spec.parity)
    residue: Dict[Tuple[Composition, Composition], Fraction] = {}
    for (left, middle, right), coef in a.coproduct().split_factor(1).terms.items():
        n = comb.column_sum(middle, spec.level)
        if comb.is_zero(n) or not comb.leq(n, spec.k):
            continue
        difference = phi.component(n).coefficient(middle) - psi.component(n).coefficient(middle)
        if difference:
            key = (left, right)
            residue[key] = residue.get(key, Fraction(0)) + coef * difference
    return not any(residue.values())


def membership_by_span(a: QSymElem, spec: OddEvenSpec) -> bool:
    """Degreewise span test against the explicit basis"""
    for n in a.degrees():
        if not linalg.in_span(a.homogeneous_component(n), basis_elements(spec, n)):
            return False
    return True


def membership(a: QSymElem, spec: OddEvenSpec, cross_check: bool = False) -> bool:
    """True when a lies in O^k (odd) or E^k (even)"""
    if a.level != spec.level:
        raise PreconditionError(f"element of level {a.level} tested against level {spec.level}")
    result = _membership_by_coproduct(a, spec)
    if cross_check and result != membership_by_span(a, spec):
        logger.error("membership tests disagree for %r", a)
        raise MultiQSymError("coproduct and span membership tests disagree")
    return result


# ---------------------------------------------------------------------------
# Algebra generators
# ---------------------------------------------------------------------------

def lyndon_generators(spec: OddEvenSpec, max_weight: int, order: Optional[str] = None) -> List[Composition]:
    """Lyndon indices I with no forbidden column; the P_I generate O^k freely as an algebra"""
    _require(spec, Parity.ODD)
    key = comb.LYNDON_ORDERS.get(order or "lex")
    if key is None:
        raise InputFormatError(f"unknown Lyndon order {order!r}")
    found = []
    for w in range(1, max_weight + 1):
        found.extend(I for I in comb.lyndon_compositions(w, spec.level, key)
                     if not any(spec.forbids(c) for c in I))
    return found


def sym_generator_degrees(spec: OddEvenSpec, max_weight: int) -> List[LPartite]:
    """Parts allowed in power sums p_lambda lying in O^k"""
    _require(spec, Parity.ODD)
    return [n for w in range(1, max_weight + 1) for n in comb.lpartites_of_weight(w, spec.level)
            if not spec.forbids(n)]


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def hilbert_closed_form(spec: OddEvenSpec, max_weight: int) -> TruncatedSeries:
    """Evaluate the rational generating function of dim O^k_n as a truncated series"""
    _require(spec, Parity.ODD)
    level = spec.level
    one = TruncatedSeries.constant(level, max_weight)

    def t(i: int, power: int) -> TruncatedSeries:
        exponent = tuple(power if j == i else 0 for j in range(level))
        return TruncatedSeries.monomial(level, max_weight, exponent)

    squares, plus = one, one
    for i in range(level):
        squares = squares * (one - t(i, 2))
        plus = plus * (one + t(i, 1))
    correction = TruncatedSeries(level, max_weight)
    for b in product((0, 1), repeat=level):
        if sum(b) % 2:
            continue
        term = one
        for i, (b_i, k_i) in enumerate(zip(b, spec.k)):
            factor = t(i, b_i)
            if k_i != INF:
                factor = factor * (one - t(i, 2 * ((int(k_i) - b_i) // 2) + 2))
            term = term * factor
        correction = correction + term
    return squares / (squares - plus + correction)


def hilbert_enumerate(spec: OddEvenSpec, max_weight: int) -> TruncatedSeries:
    coeffs = {n: basis_dimension(spec, n) for n in comb.lpartites_up_to_weight(max_weight, spec.level)}
    return TruncatedSeries(spec.level, max_weight, coeffs)


def hilbert_series(spec: OddEvenSpec, max_weight: int,
                   mode: Union[str, HilbertMode] = HilbertMode.ENUMERATE) -> TruncatedSeries:
    mode = HilbertMode(mode)
    if mode == HilbertMode.ENUMERATE:
        return hilbert_enumerate(spec, max_weight)
    if spec.parity == Parity.EVEN:
        raise PreconditionError("the closed form is known for the odd subalgebra only; use mode=enumerate")
    closed = hilbert_closed_form(spec, max_weight)
    if mode == HilbertMode.BOTH and closed != hilbert_enumerate(spec, max_weight):
        raise MultiQSymError("closed form and enumeration of the Hilbert series disagree")
    return closed
