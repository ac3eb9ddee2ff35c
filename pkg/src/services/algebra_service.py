"""
Algebra Service - products, coproducts, antipodes, basis changes and the duality pairing on QSym / NSym
"""

import logging
from typing import Optional, Sequence

from src.algebra import functionals, nsym, qsym
from src.algebra.element import LinearCombination
from src.algebra.errors import LevelMismatchError, PreconditionError
from src.algebra.nsym import NSymElem
from src.algebra.qsym import QSymElem
from src.serialization.schema import (
    CommandResult,
    create_element_record,
    create_tensor_record,
    number_record,
    pretty_element,
    pretty_tensor,
)
from src.services.base import logged

logger = logging.getLogger(__name__)

QSYM_FAMILIES = ("m", "h", "p", "colored")
NSYM_FAMILIES = ("complete", "Phi", "Upsilon", "chi")


class AlgebraService:
    """Service for the Hopf structure of QSym^(l) and NSym^(l)"""

    @staticmethod
    def element_result(a: LinearCombination, basis: Optional[str] = None) -> CommandResult:
        return CommandResult(record=create_element_record(a, basis), text=pretty_element(a, basis))

    @logged("multiply")
    def multiply(self, a: LinearCombination, b: LinearCombination, basis: str) -> CommandResult:
        if type(a) is not type(b):
            raise LevelMismatchError(f"cannot multiply {a.algebra} by {b.algebra}")
        product = a * b
        logger.info(f"Product of {len(a)} and {len(b)} terms has {len(product)} terms")
        return self.element_result(product, basis)

    @logged("comultiply")
    def comultiply(self, a: LinearCombination, basis: str) -> CommandResult:
        delta = a.coproduct()
        return CommandResult(record=create_tensor_record(delta, basis), text=pretty_tensor(delta, basis))

    @logged("antipode")
    def antipode(self, a: LinearCombination, basis: str) -> CommandResult:
        return self.element_result(a.antipode(), basis)

    @logged("convert")
    def convert(self, a: LinearCombination, target: str) -> CommandResult:
        return self.element_result(a, target)

    @logged("pair")
    def pair(self, t: LinearCombination, a: LinearCombination) -> CommandResult:
        if isinstance(t, QSymElem) and isinstance(a, NSymElem):
            t, a = a, t
        value = functionals.pair(t, a)
        return CommandResult(record={"value": number_record(value)}, text=str(value))

    @logged("special element")
    def special(self, family: str, index: Sequence, level: int, basis: Optional[str] = None) -> CommandResult:
        """Named elements: symmetric functions inside QSym, Phi/Upsilon/chi/complete inside NSym"""
        if family in QSYM_FAMILIES:
            if family == "colored":
                a = qsym.colored_monomial([tuple(pair) for pair in index], level)
            else:
                a = qsym.sym_embed(family, index, level)
            return self.element_result(a, basis or "M")
        if family == "complete":
            a = nsym.complete(tuple(index), level)
        elif family == "Phi":
            a = nsym.phi_power(tuple(index), level)
        elif family == "Upsilon":
            a = nsym.upsilon_power(tuple(index), level)
        elif family == "chi":
            a = nsym.euler_chi(tuple(index), level)
        else:
            raise PreconditionError(f"unknown family {family!r}")
        return self.element_result(a, basis or "S")
