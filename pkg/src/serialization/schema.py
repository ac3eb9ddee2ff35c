"""
JSON wire formats

Formats:
1. element - QSym / NSym element: level, algebra, basis tag and terms {coef, index}
2. fqsym - FQSym element: level and terms {coef, sigma, u}
3. poset - multigraded poset: level, elements, covers, rank
4. colored poset - level, elements [value, color], relations [[x], [y]]
5. k vectors - lists of naturals where "inf" stands for infinity

Coefficients travel as exact rational strings "p/q" (or "n").
"""

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.algebra import comb, nsym, qsym
from src.algebra.comb import INF, Composition
from src.algebra.element import LinearCombination, Tensor, to_fraction
from src.algebra.errors import InputFormatError
from src.algebra.fqsym import FQSymElem
from src.algebra.nsym import NSymElem
from src.algebra.posets import ColoredPoset, MultigradedPoset
from src.algebra.qsym import QSymElem
from src.algebra.series import TruncatedSeries

logger = logging.getLogger(__name__)

INF_TOKENS = ("inf", "∞", "infinity")


def _coef_text(value: Any) -> str:
    if isinstance(value, (bool, float)):
        raise ValueError(f"coefficients must be exact integers or 'p/q' strings, got {value!r}")
    return str(to_fraction(value))


class TermPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coef: str = "1"
    index: List[List[int]] = Field(default_factory=list)

    @field_validator("coef", mode="before")
    @classmethod
    def _exact(cls, value):
        return _coef_text(value)


class ElementPayload(BaseModel):
    """QSym or NSym element; keys are coordinates in the named basis"""
    model_config = ConfigDict(extra="forbid")

    level: int = Field(ge=1)
    algebra: Literal["QSym", "NSym"] = "QSym"
    basis: Optional[str] = None
    terms: List[TermPayload] = Field(default_factory=list)


class FQSymTermPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coef: str = "1"
    sigma: List[int]
    u: List[int]

    @field_validator("coef", mode="before")
    @classmethod
    def _exact(cls, value):
        return _coef_text(value)


class FQSymPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    level: int = Field(ge=1)
    algebra: Literal["FQSym"] = "FQSym"
    basis: Literal["F"] = "F"
    terms: List[FQSymTermPayload] = Field(default_factory=list)


class PosetPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    level: int = Field(ge=1)
    elements: List[str]
    covers: List[Tuple[str, str]] = Field(default_factory=list)
    rank: Dict[str, List[int]]

    @field_validator("elements", mode="before")
    @classmethod
    def _labels(cls, value):
        return [str(x) for x in value] if isinstance(value, list) else value

    @field_validator("covers", mode="before")
    @classmethod
    def _cover_labels(cls, value):
        if not isinstance(value, list):
            return value
        return [[str(x) for x in pair] if isinstance(pair, list) else pair for pair in value]


class ColoredPosetPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    level: int = Field(ge=1)
    elements: List[Tuple[int, int]]
    relations: List[Tuple[Tuple[int, int], Tuple[int, int]]] = Field(default_factory=list)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def load_json(text: str) -> Any:
    """Parse JSON text, or the contents of the file it names ("-" reads stdin)"""
    if text == "-":
        return json.load(sys.stdin)
    path = Path(text)
    if not text.lstrip().startswith(("[", "{", "\"")) and path.is_file():
        text = path.read_text(encoding="utf-8")
    return json.loads(text)


def parse_k(raw: Any, level: Optional[int] = None) -> Tuple[Union[int, float], ...]:
    """A threshold vector from JSON; "inf" spells infinity"""
    if isinstance(raw, str):
        raw = load_json(raw)
    if not isinstance(raw, list):
        raise InputFormatError(f"k must be a JSON array, got {raw!r}")
    k = []
    for x in raw:
        if isinstance(x, str) and x.strip().lower() in INF_TOKENS:
            k.append(INF)
        elif isinstance(x, int) and not isinstance(x, bool) and x >= 0:
            k.append(x)
        else:
            raise InputFormatError(f"k entries are naturals or \"inf\", got {x!r}")
    k = tuple(k)
    return comb.validate_ext_lpartite(k, level) if level is not None else k


def parse_lpartite(raw: Any, level: int) -> Tuple[int, ...]:
    if isinstance(raw, str):
        raw = load_json(raw)
    if not isinstance(raw, list):
        raise InputFormatError(f"expected a JSON array of naturals, got {raw!r}")
    return comb.validate_lpartite(raw, level)


def parse_composition(raw: Any, level: int) -> Composition:
    if isinstance(raw, str):
        raw = load_json(raw)
    if not isinstance(raw, list) or not all(isinstance(c, list) for c in raw):
        raise InputFormatError(f"a composition is a JSON array of columns, got {raw!r}")
    return comb.validate_composition(tuple(tuple(c) for c in raw), level)


def element_from_payload(payload: ElementPayload) -> Tuple[LinearCombination, str]:
    """Materialize the payload in the internal basis (M or S) and return it with its basis tag"""
    coords: Dict[Composition, Fraction] = {}
    for term in payload.terms:
        key = tuple(tuple(c) for c in term.index)
        coords[key] = coords.get(key, Fraction(0)) + Fraction(term.coef)
    if payload.algebra == "QSym":
        basis = qsym.parse_basis(payload.basis or "M")
        return qsym.from_coordinates(payload.level, basis, coords), basis.value
    basis = nsym.parse_nsym_basis(payload.basis or "S")
    return nsym.from_coordinates(payload.level, basis, coords), basis.value


def parse_element(raw: Any) -> Tuple[LinearCombination, str]:
    if isinstance(raw, str):
        raw = load_json(raw)
    return element_from_payload(ElementPayload.model_validate(raw))


def parse_fqsym(raw: Any) -> FQSymElem:
    if isinstance(raw, str):
        raw = load_json(raw)
    payload = FQSymPayload.model_validate(raw)
    terms: Dict[Tuple, Fraction] = {}
    for term in payload.terms:
        key = (tuple(term.sigma), tuple(term.u))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(term.coef)
    return FQSymElem(payload.level, terms)


def parse_poset(raw: Any) -> MultigradedPoset:
    if isinstance(raw, str):
        raw = load_json(raw)
    payload = PosetPayload.model_validate(raw)
    return MultigradedPoset(payload.level, payload.elements, payload.covers, payload.rank)


def parse_colored_poset(raw: Any) -> ColoredPoset:
    if isinstance(raw, str):
        raw = load_json(raw)
    payload = ColoredPosetPayload.model_validate(raw)
    return ColoredPoset(payload.level, payload.elements, payload.relations)


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

def _index(I: Composition) -> List[List[int]]:
    return [list(column) for column in I]


def _internal_basis(a: LinearCombination) -> str:
    return "M" if isinstance(a, QSymElem) else "S"


def to_basis(a: LinearCombination, basis: str) -> LinearCombination:
    """Coordinates of an internal-basis element in the named basis, as an element keyed by those coordinates"""
    if isinstance(a, QSymElem):
        return QSymElem(a.level, qsym.coordinates(a, qsym.parse_basis(basis)))
    if isinstance(a, NSymElem):
        return nsym.coordinates(a, nsym.parse_nsym_basis(basis))
    return a


def create_element_record(a: LinearCombination, basis: Optional[str] = None) -> Dict[str, Any]:
    """JSON record of a QSym, NSym or FQSym element; QSym/NSym are re-expressed in basis"""
    if isinstance(a, FQSymElem):
        return {
            "level": a.level,
            "algebra": "FQSym",
            "terms": [{"coef": str(c), "sigma": list(key.sigma), "u": list(key.colors)}
                      for key, c in a.items()],
        }
    basis = basis or _internal_basis(a)
    coords = to_basis(a, basis)
    return {
        "level": a.level,
        "algebra": a.algebra,
        "basis": basis,
        "terms": [{"coef": str(c), "index": _index(I)} for I, c in coords.items()],
    }


def pretty_element(a: LinearCombination, basis: Optional[str] = None) -> str:
    if isinstance(a, FQSymElem):
        return a.pretty()
    basis = basis or _internal_basis(a)
    coords = to_basis(a, basis)
    return coords.pretty().replace(f"{coords.basis}[", f"{basis}[")


def create_tensor_record(t: Tensor, basis: Optional[str] = None) -> Dict[str, Any]:
    """JSON record of a tensor square; QSym/NSym factors are re-expressed in basis"""
    if t.element_type is FQSymElem:
        def key_record(key):
            return {"sigma": list(key.sigma), "u": list(key.colors)}
        converted = t
        basis = "F"
    else:
        basis = basis or ("M" if t.element_type is QSymElem else "S")
        converted = t
        for position in range(t.arity):
            converted = converted.map_factor(
                position, lambda key: to_basis(t.element_type.monomial(t.level, key), basis))

        def key_record(key):
            return _index(key)
    return {
        "level": t.level,
        "algebra": t.element_type.algebra,
        "basis": basis,
        "terms": [{"coef": str(c), "factors": [key_record(k) for k in key]} for key, c in converted.items()],
    }


def pretty_tensor(t: Tensor, basis: Optional[str] = None) -> str:
    record = create_tensor_record(t, basis)
    if not record["terms"]:
        return "0"
    label = record["basis"]
    parts = []
    for term in record["terms"]:
        factors = " ⊗ ".join(f"{label}{json.dumps(f, separators=(',', ':'))}" for f in term["factors"])
        parts.append(f"{term['coef']}*{factors}")
    return " + ".join(parts)


def create_series_record(series: TruncatedSeries) -> Dict[str, Any]:
    """Hilbert series table: coefficients per multidegree and per total weight"""
    return {
        "level": series.level,
        "max_weight": series.max_weight,
        "by_degree": [{"degree": list(n), "value": _number(c)} for n, c in series.by_degree().items()],
        "weight_graded": [_number(c) for c in series.weight_graded()],
    }


def create_flag_record(flags: Dict[Composition, Any]) -> Dict[str, Any]:
    """Flag f-vector keyed by the JSON text of each composition"""
    return {qsym.format_composition(I): _number(v) for I, v in flags.items()}


def create_composition_list(indices: Sequence[Composition]) -> List[List[List[int]]]:
    return [_index(I) for I in indices]


def format_k(k: Sequence) -> List[Union[int, str]]:
    return ["inf" if x == INF else int(x) for x in k]


def _number(value: Any) -> Union[int, str]:
    """Integers stay JSON numbers; other rationals become 'p/q' strings"""
    value = to_fraction(value)
    return int(value) if value.denominator == 1 else str(value)


def number_record(value: Any) -> Union[int, str]:
    return _number(value)


def dumps(record: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(record, ensure_ascii=False, indent=2)
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


class CommandResult(BaseModel):
    """What a service hands back: the JSON record and its human rendering"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    record: Any
    text: str

    def render(self, pretty: bool = False) -> str:
        return self.text if pretty else dumps(self.record)
