"""
Functional Service - evaluate characters of QSym^(l) and inspect their components
"""

import logging
from typing import Optional, Sequence

from src.algebra import functionals
from src.algebra.errors import PreconditionError
from src.algebra.qsym import Basis, QSymElem
from src.serialization.schema import CommandResult, create_element_record, format_k, number_record, pretty_element
from src.services.base import logged

logger = logging.getLogger(__name__)


class FunctionalService:
    """Service for zeta, its relatives and nu^k"""

    @logged("evaluate functional")
    def evaluate(self, name: str, a: QSymElem, k: Optional[Sequence] = None,
                 method: str = "convolution") -> CommandResult:
        """
        Evaluate a named functional

        method "closed-form" is available for nu-k and skips the convolution.
        """
        if method == "closed-form":
            if name != "nu-k":
                raise PreconditionError("only nu-k has a closed form")
            if k is None:
                raise PreconditionError("nu-k needs a threshold k")
            value = functionals.nu_k_closed_form(a, k, Basis.M)
        else:
            value = functionals.by_name(name, a.level, k)(a)
        logger.info(f"{name} evaluated on {len(a)} terms")
        return CommandResult(record={"functional": name, "value": number_record(value)}, text=str(value))

    @logged("functional component")
    def component(self, name: str, level: int, n: Sequence[int], k: Optional[Sequence] = None,
                  basis: str = "S") -> CommandResult:
        """The degree-n component as an NSym element"""
        f = functionals.by_name(name, level, k)
        c = f.component(n)
        return CommandResult(record=create_element_record(c, basis), text=pretty_element(c, basis))

    @logged("parity check")
    def parity(self, name: str, level: int, k: Sequence, bound: Sequence[int]) -> CommandResult:
        """Whether the functional is k-odd and k-even up to a degree bound; zeta-k and nu-k use the same k"""
        f = functionals.by_name(name, level, k)
        record = {
            "functional": name,
            "k": format_k(k),
            "bound": list(bound),
            "k_odd": functionals.is_k_odd(f, k, bound),
        }
        if f.unit_value():
            record["k_even"] = functionals.is_k_even(f, k, bound)
        text = ", ".join(f"{key}={value}" for key, value in record.items() if key.startswith("k_"))
        return CommandResult(record=record, text=text)
