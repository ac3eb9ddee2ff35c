"""
Sparse rational linear combinations and their tensor powers

Every algebra element in the kernel is a LinearCombination keyed by a
canonical index (a vector composition or a colored permutation). Subclasses
supply the structure maps on basis keys; linear extension lives here.
"""

import logging
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Dict, Hashable, Iterator, List, Mapping, Optional, Tuple, Type, TypeVar

from src.algebra.comb import LPartite, check_level
from src.algebra.errors import InputFormatError, LevelMismatchError

logger = logging.getLogger(__name__)

Key = Hashable
E = TypeVar("E", bound="LinearCombination")


def to_fraction(value: Any) -> Fraction:
    """Exact coercion; floats are refused"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputFormatError(f"not a rational coefficient: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"not a rational coefficient: {value!r}") from exc
    raise InputFormatError(f"not a rational coefficient: {value!r}")


class LinearCombination:
    """A finitely supported map from basis keys to rationals"""

    algebra = "generic"
    basis = "?"

    __slots__ = ("level", "_terms")

    def __init__(self, level: int, terms: Optional[Mapping[Key, Any]] = None):
        self.level = check_level(level)
        collected: Dict[Key, Fraction] = {}
        for key, coef in (terms or {}).items():
            key = self._validate_key(key)
            collected[key] = collected.get(key, Fraction(0)) + to_fraction(coef)
        self._terms = {key: coef for key, coef in collected.items() if coef}

    # -- hooks for subclasses ----------------------------------------------

    def _validate_key(self, key: Key) -> Key:
        return key

    @classmethod
    def _unit_key(cls, level: int) -> Key:
        return ()

    @classmethod
    def _sort_key(cls, key: Key) -> Tuple:
        return (len(key), key)

    def _degree_of(self, key: Key) -> LPartite:
        raise NotImplementedError

    def _multiply_keys(self, a: Key, b: Key) -> Mapping[Key, Any]:
        raise NotImplementedError(f"{self.algebra} has no product")

    def _coproduct_key(self, key: Key) -> Mapping[Tuple[Key, Key], Any]:
        raise NotImplementedError(f"{self.algebra} has no coproduct")

    def _antipode_key(self, key: Key) -> Mapping[Key, Any]:
        raise NotImplementedError(f"{self.algebra} has no antipode")

    @classmethod
    def _format_key(cls, key: Key) -> str:
        return repr(key)

    # -- construction --------------------------------------------------------

    @classmethod
    def zero(cls: Type[E], level: int) -> E:
        return cls(level)

    @classmethod
    def one(cls: Type[E], level: int) -> E:
        return cls(level, {cls._unit_key(level): 1})

    @classmethod
    def monomial(cls: Type[E], level: int, key: Key, coef: Any = 1) -> E:
        return cls(level, {key: coef})

    def _new(self: E, terms: Mapping[Key, Any]) -> E:
        return type(self)(self.level, terms)

    # -- inspection ------------------------------------------------------------

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Key, Fraction]]:
        """Terms in canonical order"""
        return sorted(self._terms.items(), key=lambda item: self._sort_key(item[0]))

    def keys(self) -> List[Key]:
        return [key for key, _ in self.items()]

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Key]:
        return iter(self.keys())

    def degree(self, key: Key) -> LPartite:
        return self._degree_of(key)

    def degrees(self) -> List[LPartite]:
        return sorted({self._degree_of(key) for key in self._terms})

    def homogeneous_component(self: E, n: LPartite) -> E:
        return self._new({key: c for key, c in self._terms.items() if self._degree_of(key) == tuple(n)})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def max_weight(self) -> int:
        return max((sum(d) for d in self.degrees()), default=0)

    def unit_coefficient(self) -> Fraction:
        return self.coefficient(self._unit_key(self.level))

    # -- vector space ---------------------------------------------------------

    def _check_compatible(self, other: "LinearCombination") -> None:
        if type(other) is not type(self):
            raise LevelMismatchError(f"cannot combine {self.algebra} with {other.algebra}")
        if other.level != self.level:
            raise LevelMismatchError(f"level {self.level} element combined with level {other.level}")

    def __add__(self: E, other: E) -> E:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, coef in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coef
        return self._new(terms)

    def __neg__(self: E) -> E:
        return self._new({key: -coef for key, coef in self._terms.items()})

    def __sub__(self: E, other: E) -> E:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self: E, factor: Any) -> E:
        factor = to_fraction(factor)
        return self._new({key: factor * coef for key, coef in self._terms.items()})

    def __rmul__(self: E, factor: Any) -> E:
        return self.scale(factor)

    def __truediv__(self: E, divisor: Any) -> E:
        return self.scale(1 / to_fraction(divisor))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearCombination):
            return type(other) is type(self) and other.level == self.level and other._terms == self._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == type(self).one(self.level).scale(other)
        return NotImplemented

    __hash__ = None

    # -- algebra ----------------------------------------------------------------

    def __mul__(self: E, other: Any) -> E:
        if not isinstance(other, LinearCombination):
            return self.scale(other)
        self._check_compatible(other)
        terms: Dict[Key, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                for key, coef in self._multiply_keys(a, b).items():
                    terms[key] = terms.get(key, Fraction(0)) + ca * cb * to_fraction(coef)
        return self._new(terms)

    def __pow__(self: E, exponent: int) -> E:
        result = type(self).one(self.level)
        for _ in range(exponent):
            result = result * self
        return result

    def map_linear(self: E, func: Callable[[Key], "LinearCombination"], target: Optional[Type] = None) -> "LinearCombination":
        """Extend a map on basis keys linearly"""
        cls = target or type(self)
        result = cls.zero(self.level)
        for key, coef in self._terms.items():
            image = func(key)
            if image:
                result = result + image.scale(coef)
        return result

    def coproduct(self) -> "Tensor":
        terms: Dict[Tuple[Key, ...], Fraction] = {}
        for key, coef in self._terms.items():
            for pair, c in self._coproduct_key(key).items():
                terms[pair] = terms.get(pair, Fraction(0)) + coef * to_fraction(c)
        return Tensor(type(self), self.level, terms, arity=2)

    def antipode(self: E) -> E:
        return self.map_linear(lambda key: self._new(self._antipode_key(key)))

    def counit(self) -> Fraction:
        return self.unit_coefficient()

    # -- printing -------------------------------------------------------------

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, coef in self.items():
            label = f"{self.basis}{self._format_key(key)}"
            if coef == 1:
                text = label
            elif coef == -1:
                text = f"-{label}"
            else:
                text = f"{coef}*{label}"
            parts.append(text)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(level={self.level}, {self.pretty()})"


class Tensor:
    """An element of a tensor power of one algebra, keyed by tuples of basis keys"""

    __slots__ = ("element_type", "level", "arity", "_terms")

    def __init__(self, element_type: Type[LinearCombination], level: int,
                 terms: Optional[Mapping[Tuple[Key, ...], Any]] = None, arity: int = 2):
        self.element_type = element_type
        self.level = level
        self.arity = arity
        self._terms = {}
        for key, coef in (terms or {}).items():
            if len(key) != arity:
                raise LevelMismatchError(f"tensor key {key} does not have {arity} factors")
            value = to_fraction(coef)
            if value:
                self._terms[key] = self._terms.get(key, Fraction(0)) + value
        self._terms = {key: coef for key, coef in self._terms.items() if coef}

    @classmethod
    def pure(cls, *factors: LinearCombination) -> "Tensor":
        """The tensor product of the given elements"""
        first = factors[0]
        terms: Dict[Tuple[Key, ...], Fraction] = {(): Fraction(1)}
        for factor in factors:
            terms = {key + (k,): c * ck for key, c in terms.items() for k, ck in factor._terms.items()}
        return cls(type(first), first.level, terms, arity=len(factors))

    def items(self) -> List[Tuple[Tuple[Key, ...], Fraction]]:
        sort_key = self.element_type._sort_key
        return sorted(self._terms.items(), key=lambda item: tuple(sort_key(k) for k in item[0]))

    @property
    def terms(self) -> Dict[Tuple[Key, ...], Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _same_shape(self, other: "Tensor") -> None:
        if (other.element_type, other.level, other.arity) != (self.element_type, self.level, self.arity):
            raise LevelMismatchError("tensors of different shapes")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._same_shape(other)
        terms = dict(self._terms)
        for key, coef in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coef
        return Tensor(self.element_type, self.level, terms, self.arity)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, factor: Any) -> "Tensor":
        factor = to_fraction(factor)
        return Tensor(self.element_type, self.level,
                      {key: factor * c for key, c in self._terms.items()}, self.arity)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (other.element_type, other.level, other.arity, other._terms) == \
            (self.element_type, self.level, self.arity, self._terms)

    __hash__ = None

    def __mul__(self, other: "Tensor") -> "Tensor":
        """Factorwise product in the tensor power algebra"""
        self._same_shape(other)
        unit = self.element_type.one(self.level)
        terms: Dict[Tuple[Key, ...], Fraction] = {}
        for left, cl in self._terms.items():
            for right, cr in other._terms.items():
                partial: Dict[Tuple[Key, ...], Fraction] = {(): cl * cr}
                for a, b in zip(left, right):
                    products = unit._multiply_keys(a, b)
                    partial = {key + (k,): c * to_fraction(ck)
                               for key, c in partial.items() for k, ck in products.items()}
                for key, coef in partial.items():
                    terms[key] = terms.get(key, Fraction(0)) + coef
        return Tensor(self.element_type, self.level, terms, self.arity)

    def factor(self, key: Key) -> LinearCombination:
        return self.element_type.monomial(self.level, key)

    def map_factor(self, position: int, func: Callable[[Key], LinearCombination]) -> "Tensor":
        """Apply a linear map to one tensor factor"""
        terms: Dict[Tuple[Key, ...], Fraction] = {}
        for key, coef in self._terms.items():
            for k, c in func(key[position]).terms.items():
                new = key[:position] + (k,) + key[position + 1:]
                terms[new] = terms.get(new, Fraction(0)) + coef * c
        return Tensor(self.element_type, self.level, terms, self.arity)

    def split_factor(self, position: int) -> "Tensor":
        """Apply the coproduct to one tensor factor"""
        terms: Dict[Tuple[Key, ...], Fraction] = {}
        for key, coef in self._terms.items():
            for pair, c in self.factor(key[position]).coproduct().terms.items():
                new = key[:position] + pair + key[position + 1:]
                terms[new] = terms.get(new, Fraction(0)) + coef * c
        return Tensor(self.element_type, self.level, terms, self.arity + 1)

    def contract(self) -> LinearCombination:
        """Multiply the factors together"""
        result = self.element_type.zero(self.level)
        for key, coef in self._terms.items():
            product = self.element_type.one(self.level)
            for k in key:
                product = product * self.factor(k)
            result = result + product.scale(coef)
        return result

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        fmt = self.element_type._format_key
        basis = self.element_type.basis
        parts = [f"{coef}*" + " ⊗ ".join(f"{basis}{fmt(k)}" for k in key) for key, coef in self.items()]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Tensor({self.pretty()})"
