"""
FQSym Service - the colored Malvenuto-Reutenauer algebra and its map onto QSym^(l)
"""

import logging
from typing import Optional, Sequence

from src.algebra import fqsym
from src.algebra.fqsym import FQSymElem
from src.serialization.schema import CommandResult, create_element_record, create_tensor_record, pretty_element, pretty_tensor
from src.services.base import logged

logger = logging.getLogger(__name__)


class FQSymService:
    """Service for FQSym^(l)"""

    @staticmethod
    def _result(a, basis: Optional[str] = None) -> CommandResult:
        return CommandResult(record=create_element_record(a, basis), text=pretty_element(a, basis))

    @logged("FQSym product")
    def multiply(self, a: FQSymElem, b: FQSymElem) -> CommandResult:
        product = fqsym.product(a, b)
        logger.info(f"Shifted shuffle produced {len(product)} terms")
        return self._result(product)

    @logged("FQSym coproduct")
    def comultiply(self, a: FQSymElem) -> CommandResult:
        delta = fqsym.coproduct(a)
        return CommandResult(record=create_tensor_record(delta), text=pretty_tensor(delta))

    @logged("FQSym antipode")
    def antipode(self, a: FQSymElem) -> CommandResult:
        return self._result(fqsym.antipode(a))

    @logged("S_n embedding")
    def s_embed(self, n: Sequence[int], level: int) -> CommandResult:
        return self._result(fqsym.s_embed(n, level))

    @logged("abelianization")
    def d_map(self, a: FQSymElem, basis: Optional[str] = None) -> CommandResult:
        return self._result(fqsym.d_map(a), basis)
