"""
Poset Service - flag vectors, Eulerian tests and the images of posets in QSym^(l) and FQSym^(l)
"""

import logging
from typing import Optional, Sequence

from src.algebra import comb
from src.algebra.posets import ColoredPoset, MultigradedPoset
from src.algebra.qsym import format_composition
from src.serialization.schema import (
    CommandResult,
    create_element_record,
    create_flag_record,
    format_k,
    pretty_element,
)
from src.services.base import logged

logger = logging.getLogger(__name__)


class PosetService:
    """Service for multigraded and colored posets"""

    @logged("flag f-vector")
    def flag(self, poset: MultigradedPoset) -> CommandResult:
        flags = {I: poset.flag_f(I) for I in comb.compositions_of(poset.multirank)}
        logger.info(f"Counted chains for {len(flags)} compositions of {poset.multirank}")
        text = "\n".join(f"f{format_composition(I)} = {v}" for I, v in flags.items())
        return CommandResult(record=create_flag_record(flags), text=text)

    @logged("F image")
    def f_image(self, poset: MultigradedPoset, basis: Optional[str] = None) -> CommandResult:
        image = poset.f_homomorphism()
        return CommandResult(record=create_element_record(image, basis), text=pretty_element(image, basis))

    @logged("Moebius function")
    def mobius(self, poset: MultigradedPoset) -> CommandResult:
        mu = poset.mobius()
        return CommandResult(record={"mobius": mu, "multirank": list(poset.multirank)}, text=str(mu))

    @logged("Eulerian test")
    def eulerian(self, poset: MultigradedPoset, k: Sequence) -> CommandResult:
        verdict = poset.is_k_eulerian(k)
        return CommandResult(record={"k": format_k(k), "eulerian": verdict}, text=str(verdict).lower())

    @logged("Dehn-Sommerville check")
    def dehn_sommerville(self, poset: MultigradedPoset, k: Sequence) -> CommandResult:
        report = poset.dehn_sommerville_check(k)
        record = {"k": format_k(k), "holds": report.holds, **report.model_dump()}
        return CommandResult(record=record, text=f"checked {report.checked}, violated {len(report.violations)}")

    @logged("Gamma")
    def gamma(self, poset: ColoredPoset, basis: Optional[str] = None) -> CommandResult:
        image = poset.gamma()
        return CommandResult(record=create_element_record(image, basis), text=pretty_element(image, basis))

    @logged("Gamma lift")
    def gamma_hat(self, poset: ColoredPoset) -> CommandResult:
        image = poset.gamma_hat()
        return CommandResult(record=create_element_record(image), text=pretty_element(image))

    @logged("linear extensions")
    def extensions(self, poset: ColoredPoset) -> CommandResult:
        found = poset.linear_extensions()
        record = {"count": len(found), "extensions": [{"sigma": list(p.sigma), "u": list(p.colors)} for p in found]}
        text = "\n".join(f"{list(p.sigma)} {''.join(map(str, p.colors))}" for p in found)
        return CommandResult(record=record, text=text)

    @logged("order ideal lattice")
    def j_map(self, poset: ColoredPoset, basis: Optional[str] = None) -> CommandResult:
        """F image of the lattice of order ideals; it equals Gamma of the poset"""
        image = poset.j_map().f_homomorphism()
        return CommandResult(record=create_element_record(image, basis), text=pretty_element(image, basis))
