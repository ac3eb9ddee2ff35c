"""
Theta Service - induced morphisms, descents-to-peaks maps and the eta/theta dictionary
"""

import logging
from typing import Optional, Sequence

from src.algebra import comb, functionals, theta
from src.algebra.comb import INF
from src.algebra.errors import PreconditionError
from src.algebra.qsym import Basis, QSymElem, format_composition
from src.algebra.theta import PeakPair
from src.serialization.schema import CommandResult, create_element_record, pretty_element, to_basis
from src.services.base import logged

logger = logging.getLogger(__name__)


def _pair_record(p: PeakPair) -> dict:
    return {"S": sorted(p.S), "u": "".join(map(str, p.u))}


def _pair_text(p: PeakPair) -> str:
    return f"theta[{{{','.join(map(str, sorted(p.S)))}}},{''.join(map(str, p.u))}]"


class ThetaService:
    """Service for Theta, Theta^(k) and peak functions"""

    @staticmethod
    def _result(a: QSymElem, basis: Optional[str]) -> CommandResult:
        return CommandResult(record=create_element_record(a, basis), text=pretty_element(a, basis))

    @logged("induced morphism")
    def apply(self, name: str, a: QSymElem, k: Optional[Sequence] = None, basis: Optional[str] = None) -> CommandResult:
        """The coalgebra morphism induced by a named functional"""
        f = functionals.by_name(name, a.level, k)
        image = theta.induced_map(f, a)
        logger.info(f"Induced map of {name} sends {len(a)} terms to {len(image)} terms")
        return self._result(image, basis)

    @logged("closed-form Theta")
    def closed(self, a: QSymElem, k: Sequence, basis: Optional[str] = None) -> CommandResult:
        """Theta (k all infinite) or Theta^(k) at level 1 through the closed forms"""
        if all(x == INF for x in k):
            image = theta.theta_inf(a, Basis.M)
        elif a.level == 1:
            image = theta.theta_k_level1(to_basis(a, "F"), k[0], Basis.F)
        else:
            raise PreconditionError("closed forms cover k = inf or level 1; use theta apply --functional nu-k")
        return self._result(image, basis)

    @logged("peak function")
    def peak(self, S: Sequence[int], u, level: int, basis: Optional[str] = None) -> CommandResult:
        p = PeakPair.of(S, u)
        return self._result(theta.peak_function(p, level), basis)

    @logged("admissible pairs")
    def admissible(self, n: int, level: int) -> CommandResult:
        pairs = theta.admissible_pairs(n, level)
        record = {"level": level, "n": n, "count": len(pairs), "pairs": [_pair_record(p) for p in pairs]}
        return CommandResult(record=record, text="\n".join(_pair_text(p) for p in pairs) or "(none)")

    @logged("eta/theta dictionary")
    def dictionary(self, direction: str, level: int, index=None, S: Optional[Sequence[int]] = None,
                   u=None, basis: Optional[str] = None) -> CommandResult:
        """Expand eta_I in peak functions or theta_{S,u} in the eta basis"""
        if direction == "eta-to-theta":
            I = comb.validate_composition(index, level)
            coords = theta.eta_in_theta(I, level)
            ordered = sorted(coords.items(), key=lambda t: (len(t[0].S), sorted(t[0].S)))
            terms = [{"coef": str(c), **_pair_record(p)} for p, c in ordered]
            text = " + ".join(f"{c}*{_pair_text(p)}" for p, c in ordered)
            expansion = theta.eta_theta_convert(direction, I, level)
        elif direction == "theta-to-eta":
            p = PeakPair.of(S or (), u)
            coords = theta.theta_in_eta(p, level)
            ordered = sorted(coords.items(), key=lambda t: comb.canonical_key(t[0]))
            terms = [{"coef": str(c), "index": [list(col) for col in I]} for I, c in ordered]
            text = " + ".join(f"{c}*eta{format_composition(I)}" for I, c in ordered)
            expansion = theta.eta_theta_convert(direction, p, level)
        else:
            raise PreconditionError(f"direction must be eta-to-theta or theta-to-eta, got {direction!r}")
        record = {"level": level, "direction": direction, "terms": terms,
                  "expansion": create_element_record(expansion, basis)}
        return CommandResult(record=record, text=text or "0")
