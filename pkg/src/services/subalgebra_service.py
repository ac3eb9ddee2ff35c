"""
Subalgebra Service - bases, generators, ideals, membership and Hilbert series of O^k and E^k
"""

import logging
from typing import Optional, Sequence

from src.algebra import qsym, subalg
from src.algebra.qsym import QSymElem
from src.algebra.subalg import OddEvenSpec, Parity
from src.serialization.schema import (
    CommandResult,
    create_composition_list,
    create_element_record,
    create_series_record,
    format_k,
)
from src.services.base import logged

logger = logging.getLogger(__name__)


def _describe(spec: OddEvenSpec) -> dict:
    return {"level": spec.level, "k": format_k(spec.k), "parity": spec.parity.value}


class SubalgebraService:
    """Service for the canonical k-odd and k-even subalgebras"""

    @logged("subalgebra basis")
    def basis(self, spec: OddEvenSpec, n: Sequence[int], basis: Optional[str] = None) -> CommandResult:
        if spec.parity == Parity.ODD:
            basis = qsym.parse_basis(basis or "P").value
            indices = subalg.odd_basis(spec, n, basis)
        else:
            basis = "M"
            indices = subalg.even_basis(spec, n)
        record = {**_describe(spec), "degree": list(n), "basis": basis,
                  "dimension": len(indices), "indices": create_composition_list(indices)}
        logger.info(f"Degree {tuple(n)} piece has dimension {len(indices)}")
        text = "\n".join(f"{basis}{qsym.format_composition(I)}" for I in indices) or "(empty)"
        return CommandResult(record=record, text=text)

    @logged("ideal generators")
    def generators(self, spec: OddEvenSpec, kind: Optional[str], max_weight: int) -> CommandResult:
        kind = kind or ("Phi" if spec.parity == Parity.ODD else "S")
        pairs = subalg.ideal_generators(spec, kind, max_weight)
        record = {**_describe(spec), "kind": kind,
                  "generators": [{"degree": list(n), "element": create_element_record(g)} for n, g in pairs]}
        text = "\n".join(f"{kind}_{qsym.format_composition((n,))[1:-1]} = {g.pretty()}" for n, g in pairs) or "(none)"
        return CommandResult(record=record, text=text)

    @logged("ideal dimension")
    def ideal(self, spec: OddEvenSpec, n: Sequence[int], kind: Optional[str] = None) -> CommandResult:
        dimension = subalg.ideal_dimension(spec, n, kind)
        complement = subalg.basis_dimension(spec, n)
        record = {**_describe(spec), "degree": list(n), "ideal_dimension": dimension,
                  "subalgebra_dimension": complement}
        return CommandResult(record=record, text=f"ideal {dimension}, subalgebra {complement}")

    @logged("algebra generators")
    def lyndon(self, spec: OddEvenSpec, max_weight: int, order: str) -> CommandResult:
        indices = subalg.lyndon_generators(spec, max_weight, order)
        degrees = subalg.sym_generator_degrees(spec, max_weight)
        record = {**_describe(spec), "order": order, "lyndon": create_composition_list(indices),
                  "sym_degrees": [list(n) for n in degrees]}
        text = "\n".join(f"P{qsym.format_composition(I)}" for I in indices) or "(none)"
        return CommandResult(record=record, text=text)

    @logged("membership test")
    def member(self, a: QSymElem, spec: OddEvenSpec, cross_check: bool = False) -> CommandResult:
        inside = subalg.membership(a, spec, cross_check=cross_check)
        return CommandResult(record={**_describe(spec), "member": inside}, text=str(inside).lower())

    @logged("Hilbert series")
    def hilbert(self, spec: OddEvenSpec, max_weight: int, mode: str) -> CommandResult:
        series = subalg.hilbert_series(spec, max_weight, mode)
        record = {**_describe(spec), "mode": mode, **create_series_record(series)}
        text = ", ".join(str(c) for c in record["weight_graded"])
        return CommandResult(record=record, text=text)
