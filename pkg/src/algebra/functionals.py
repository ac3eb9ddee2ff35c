"""
Linear functionals on QSym^(l)

A functional is stored degreewise: its restriction to QSym_n is an
element of NSym_n through the S/M duality. Components are built lazily
and memoized.
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence

from src.algebra import comb, nsym
from src.algebra.comb import Composition, ExtLPartite, LPartite
from src.algebra.errors import LevelMismatchError, PreconditionError
from src.algebra.nsym import NSymElem
from src.algebra.qsym import Basis, QSymElem, basis_element

logger = logging.getLogger(__name__)


def pair(t: NSymElem, a: QSymElem) -> Fraction:
    """<S^I, M_J> = delta, extended bilinearly"""
    if not isinstance(t, NSymElem) or not isinstance(a, QSymElem):
        raise LevelMismatchError("pairing needs an NSym element and a QSym element")
    if t.level != a.level:
        raise LevelMismatchError(f"cannot pair level {t.level} with level {a.level}")
    terms = a.terms
    return sum((coef * terms.get(I, 0) for I, coef in t.terms.items()), Fraction(0))


class GradedFunctional:
    """A linear functional given by its homogeneous components"""

    name = "functional"

    def __init__(self, level: int):
        self.level = comb.check_level(level)
        self._cache: Dict[LPartite, NSymElem] = {}
        self._lock = threading.Lock()

    def _compute(self, n: LPartite) -> NSymElem:
        raise NotImplementedError

    def component(self, n: Sequence[int]) -> NSymElem:
        n = comb.validate_lpartite(n, self.level)
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        value = self._compute(n)
        with self._lock:
            return self._cache.setdefault(n, value)

    def unit_value(self) -> Fraction:
        return self.component(comb.zero(self.level)).unit_coefficient()

    def __call__(self, a: QSymElem) -> Fraction:
        return evaluate(self, a)

    def __mul__(self, other: "GradedFunctional") -> "GradedFunctional":
        return convolve(self, other)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(level={self.level})"


def _unit(level: int) -> NSymElem:
    return NSymElem.one(level)


class Epsilon(GradedFunctional):
    """The counit: 1 on QSym_0 and 0 elsewhere"""

    name = "epsilon"

    def _compute(self, n: LPartite) -> NSymElem:
        return _unit(self.level) if comb.is_zero(n) else NSymElem.zero(self.level)


class Zeta(GradedFunctional):
    """The universal character: S_n in every degree"""

    name = "zeta"

    def _compute(self, n: LPartite) -> NSymElem:
        return nsym.complete(n, self.level)


class ZetaBar(GradedFunctional):
    name = "zeta-bar"

    def _compute(self, n: LPartite) -> NSymElem:
        return nsym.complete(n, self.level).scale((-1) ** sum(n))


class ZetaInverse(GradedFunctional):
    name = "zeta-inv"

    def _compute(self, n: LPartite) -> NSymElem:
        return nsym.complete(n, self.level).antipode()


class ZetaK(GradedFunctional):
    """zeta-bar in degrees n <= k and zeta above"""

    name = "zeta-k"

    def __init__(self, level: int, k: Sequence):
        super().__init__(level)
        self.k: ExtLPartite = comb.validate_ext_lpartite(k, self.level)

    def _compute(self, n: LPartite) -> NSymElem:
        sign = (-1) ** sum(n) if comb.leq(n, self.k) else 1
        return nsym.complete(n, self.level).scale(sign)

    def __repr__(self) -> str:
        return f"ZetaK(level={self.level}, k={self.k})"


class Chi(GradedFunctional):
    """The Euler character zeta-bar * zeta"""

    name = "chi"

    def _compute(self, n: LPartite) -> NSymElem:
        if comb.is_zero(n):
            return _unit(self.level)
        return nsym.euler_chi(n, self.level)


class Explicit(GradedFunctional):
    """A functional given by a finite table of components; absent degrees are zero"""

    name = "explicit"

    def __init__(self, level: int, components: Mapping[LPartite, NSymElem]):
        super().__init__(level)
        self._given: Dict[LPartite, NSymElem] = {}
        for n, value in components.items():
            n = comb.validate_lpartite(n, self.level)
            if value.level != self.level:
                raise LevelMismatchError(f"component at {n} has level {value.level}")
            if value and value.degrees() != [n]:
                raise PreconditionError(f"component at {n} is not homogeneous of degree {n}")
            self._given[n] = value

    def _compute(self, n: LPartite) -> NSymElem:
        return self._given.get(n, NSymElem.zero(self.level))


class Convolution(GradedFunctional):
    """(f g)_n = sum over j <= n of f_j g_(n-j)"""

    name = "convolution"

    def __init__(self, left: GradedFunctional, right: GradedFunctional):
        if left.level != right.level:
            raise LevelMismatchError(f"cannot convolve level {left.level} with level {right.level}")
        super().__init__(left.level)
        self.left, self.right = left, right

    def _compute(self, n: LPartite) -> NSymElem:
        total = NSymElem.zero(self.level)
        for j in comb.lpartites_below(n):
            f_j = self.left.component(j)
            if not f_j:
                continue
            total = total + f_j * self.right.component(comb.vector_sub(n, j))
        return total


class Bar(GradedFunctional):
    name = "bar"

    def __init__(self, base: GradedFunctional):
        super().__init__(base.level)
        self.base = base

    def _compute(self, n: LPartite) -> NSymElem:
        return self.base.component(n).scale((-1) ** sum(n))


class AntipodeTwist(GradedFunctional):
    """f composed with the antipode of QSym"""

    name = "antipode-twist"

    def __init__(self, base: GradedFunctional):
        super().__init__(base.level)
        self.base = base

    def _compute(self, n: LPartite) -> NSymElem:
        return self.base.component(n).antipode()


class Inverse(GradedFunctional):
    """Convolution inverse by the triangular recursion on degrees"""

    name = "inverse"

    def __init__(self, base: GradedFunctional):
        super().__init__(base.level)
        self.base = base
        self._head = base.unit_value()
        if not self._head:
            raise PreconditionError("a functional is invertible only when its value at 1 is nonzero")

    def _compute(self, n: LPartite) -> NSymElem:
        if comb.is_zero(n):
            return _unit(self.level).scale(1 / self._head)
        total = NSymElem.zero(self.level)
        for j in comb.lpartites_below(n):
            if comb.is_zero(j):
                continue
            f_j = self.base.component(j)
            if f_j:
                total = total + f_j * self.component(comb.vector_sub(n, j))
        return total.scale(-1 / self._head)


class NuK(Convolution):
    """nu^k = (zeta^k composed with the antipode) * zeta"""

    name = "nu-k"

    def __init__(self, level: int, k: Sequence):
        self.k: ExtLPartite = comb.validate_ext_lpartite(k, level)
        super().__init__(AntipodeTwist(ZetaK(level, self.k)), Zeta(level))

    def __repr__(self) -> str:
        return f"NuK(level={self.level}, k={self.k})"


def convolve(f: GradedFunctional, g: GradedFunctional) -> GradedFunctional:
    return Convolution(f, g)


def invert(f: GradedFunctional) -> GradedFunctional:
    return Inverse(f)


def bar(f: GradedFunctional) -> GradedFunctional:
    return Bar(f)


def component(f: GradedFunctional, n: Sequence[int]) -> NSymElem:
    return f.component(n)


FUNCTIONAL_NAMES = ("zeta", "zeta-bar", "zeta-inv", "zeta-k", "nu-k", "chi", "epsilon")


def by_name(name: str, level: int, k: Optional[Sequence] = None) -> GradedFunctional:
    """Build one of the named characters"""
    simple = {"zeta": Zeta, "zeta-bar": ZetaBar, "zeta-inv": ZetaInverse, "chi": Chi, "epsilon": Epsilon}
    if name in simple:
        return simple[name](level)
    if name in ("zeta-k", "nu-k"):
        if k is None:
            raise PreconditionError(f"functional {name} needs a threshold k")
        return ZetaK(level, k) if name == "zeta-k" else NuK(level, k)
    raise PreconditionError(f"unknown functional {name!r}; expected one of {', '.join(FUNCTIONAL_NAMES)}")


def evaluate(f: GradedFunctional, a: QSymElem) -> Fraction:
    if a.level != f.level:
        raise LevelMismatchError(f"functional of level {f.level} applied to level {a.level}")
    return sum((pair(f.component(n), a.homogeneous_component(n)) for n in a.degrees()), Fraction(0))


# ---------------------------------------------------------------------------
# k-odd and k-even tests
# ---------------------------------------------------------------------------

def _degrees_to_check(level: int, k: Sequence, bound: Sequence[int]):
    k = comb.validate_ext_lpartite(k, level)
    bound = comb.validate_lpartite(bound, level)
    cap = tuple(int(min(a, b)) for a, b in zip(k, bound))
    return comb.lpartites_below(cap)


def is_k_odd(f: GradedFunctional, k: Sequence, bound: Sequence[int]) -> bool:
    """bar(f) and f^-1 agree in every degree n <= min(k, bound)"""
    barred, inverse = Bar(f), Inverse(f)
    for n in _degrees_to_check(f.level, k, bound):
        if barred.component(n) != inverse.component(n):
            logger.debug("%r is not k-odd: degree %s differs", f, n)
            return False
    return True


def is_k_even(f: GradedFunctional, k: Sequence, bound: Sequence[int]) -> bool:
    """bar(f) and f agree in every degree n <= min(k, bound)"""
    if not f.unit_value():
        raise PreconditionError("k-even tests need an invertible functional")
    barred = Bar(f)
    return all(barred.component(n) == f.component(n) for n in _degrees_to_check(f.level, k, bound))


# ---------------------------------------------------------------------------
# Closed forms for nu^k
# ---------------------------------------------------------------------------

def nu_k_on_m(I: Composition, k: Sequence, level: int) -> Fraction:
    """Value of nu^k on M_I without convolution"""
    I = comb.validate_composition(I, level)
    k = comb.validate_ext_lpartite(k, level)
    if not I:
        return Fraction(1)
    last = I[-1]
    total = comb.column_sum(I, level)
    weight, last_weight = comb.composition_weight(I), sum(last)
    if last_weight % 2 == 1 and comb.leq(total, k):
        return Fraction(2 * (-1) ** (len(I) + weight))
    if (weight - last_weight) % 2 == 1 and comb.leq(comb.vector_sub(total, last), k) \
            and not comb.leq(total, k):
        return Fraction(2 * (-1) ** len(I))
    return Fraction(0)


def nu_k_on_f(I: Composition, k: Sequence, level: int) -> Fraction:
    """Value of nu^k on F_I without convolution; zero unless I = (E, i) with E coordinate columns"""
    I = comb.validate_composition(I, level)
    k = comb.validate_ext_lpartite(k, level)
    if not I:
        return Fraction(1)
    head, last = I[:-1], I[-1]
    if not comb.is_coordinate(head):
        return Fraction(0)
    head_sum = comb.column_sum(head, level)
    if comb.leq(comb.column_sum(I, level), k):
        return Fraction(2)
    if len(head) % 2 == 1 and comb.leq(head_sum, k):
        return Fraction(2)
    if len(head) % 2 == 0 and sum(last) > 1:
        e = comb.unit_vector(min(comb.support(last)), level)
        if comb.leq(comb.vector_add(head_sum, e), k):
            return Fraction(2)
    return Fraction(0)


def nu_k_closed_form(a: QSymElem, k: Sequence, input_basis: Basis = Basis.M) -> Fraction:
    """nu^k on an element whose keys are read as coordinates in the M or F basis"""
    input_basis = Basis(input_basis)
    if input_basis not in (Basis.M, Basis.F):
        raise PreconditionError("closed forms for nu^k exist on the M and F bases")
    value = nu_k_on_m if input_basis == Basis.M else nu_k_on_f
    return sum((coef * value(I, k, a.level) for I, coef in a.terms.items()), Fraction(0))


def evaluate_in_basis(f: GradedFunctional, basis: Basis, I: Sequence) -> Fraction:
    """f applied to the single basis element X_I"""
    return evaluate(f, basis_element(basis, I, f.level))
