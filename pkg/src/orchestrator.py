"""
Main Orchestrator - route parsed commands to the algebra services
"""

import logging
from argparse import Namespace
from typing import Callable, Dict, List, Optional, Sequence

from src.algebra.comb import INF
from src.algebra.errors import InputFormatError, LevelMismatchError, PreconditionError
from src.algebra.fqsym import FQSymElem
from src.algebra.qsym import QSymElem
from src.algebra.subalg import OddEvenSpec
from src.config.settings import config
from src.serialization import schema
from src.serialization.schema import CommandResult
from src.services.algebra_service import AlgebraService
from src.services.fqsym_service import FQSymService
from src.services.functional_service import FunctionalService
from src.services.poset_service import PosetService
from src.services.subalgebra_service import SubalgebraService
from src.services.theta_service import ThetaService

logger = logging.getLogger(__name__)


class MultiQSymOrchestrator:
    """Owns the services, enforces the enumeration cap and routes each verb"""

    def __init__(self, max_weight: Optional[int] = None):
        self.max_weight = max_weight or config.kernel.max_weight
        self.algebra_service = AlgebraService()
        self.functional_service = FunctionalService()
        self.subalgebra_service = SubalgebraService()
        self.theta_service = ThetaService()
        self.poset_service = PosetService()
        self.fqsym_service = FQSymService()
        self.handlers: Dict[str, Callable[[Namespace], CommandResult]] = {
            "mul": self.multiply,
            "comul": self.comultiply,
            "antipode": self.antipode,
            "convert": self.convert,
            "pair": self.pair,
            "eval-functional": self.eval_functional,
            "theta": self.theta,
            "subalg": self.subalg,
            "hilbert": self.hilbert,
            "poset": self.poset,
            "fqsym": self.fqsym,
        }

    def execute(self, args: Namespace) -> CommandResult:
        handler = self.handlers.get(args.verb)
        if handler is None:
            raise InputFormatError(f"unknown verb {args.verb!r}")
        logger.info(f"Running {args.verb}")
        return handler(args)

    # -- guards ------------------------------------------------------------

    def check_weight(self, weight: int, what: str = "input") -> None:
        """Refuse enumerations beyond MULTIQSYM_MAX_WEIGHT before they start"""
        if weight > self.max_weight:
            raise PreconditionError(
                f"{what} has total weight {weight}, above MULTIQSYM_MAX_WEIGHT={self.max_weight}")

    def _inputs(self, args: Namespace, count: int) -> List[str]:
        given = args.inputs or []
        if len(given) != count:
            raise InputFormatError(f"{args.verb} needs exactly {count} --in argument(s), got {len(given)}")
        return given

    def _element(self, text: str):
        a, basis = schema.parse_element(text)
        self.check_weight(a.max_weight(), "element")
        return a, basis

    def _qsym(self, text: str) -> QSymElem:
        a, _ = self._element(text)
        if not isinstance(a, QSymElem):
            raise PreconditionError("this operation takes a QSym element")
        return a

    def _fqsym(self, text: str) -> FQSymElem:
        a = schema.parse_fqsym(text)
        self.check_weight(a.max_weight(), "FQSym element")
        return a

    @staticmethod
    def _level(args: Namespace, fallback: Optional[int] = None) -> int:
        level = getattr(args, "level", None) or fallback
        if level is None:
            raise InputFormatError("--level is required here")
        return level

    def _k(self, args: Namespace, level: Optional[int], default_inf: bool = False):
        if getattr(args, "k", None) is None:
            if default_inf and level is not None:
                return (INF,) * level
            return None
        return schema.parse_k(args.k, level)

    def _spec(self, args: Namespace, level: Optional[int] = None) -> OddEvenSpec:
        level = level or getattr(args, "level", None)
        if args.k is None and level is None:
            raise InputFormatError("give --k (or --level for k = inf)")
        k = schema.parse_k(args.k) if args.k is not None else (INF,) * level
        level = level or len(k)
        if len(k) != level:
            raise LevelMismatchError(f"k has length {len(k)}, expected level {level}")
        return OddEvenSpec.build(level, k, args.parity)

    def _max_weight(self, args: Namespace, default: int) -> int:
        w = args.max_weight if args.max_weight is not None else default
        if w < 0:
            raise PreconditionError("--max-weight must be non-negative")
        self.check_weight(w, "requested series")
        return w

    # -- QSym / NSym -------------------------------------------------------

    def multiply(self, args: Namespace) -> CommandResult:
        first, second = self._inputs(args, 2)
        (a, basis), (b, _) = self._element(first), self._element(second)
        self.check_weight(a.max_weight() + b.max_weight(), "product")
        return self.algebra_service.multiply(a, b, args.basis or basis)

    def comultiply(self, args: Namespace) -> CommandResult:
        a, basis = self._element(self._inputs(args, 1)[0])
        return self.algebra_service.comultiply(a, args.basis or basis)

    def antipode(self, args: Namespace) -> CommandResult:
        a, basis = self._element(self._inputs(args, 1)[0])
        return self.algebra_service.antipode(a, args.basis or basis)

    def convert(self, args: Namespace) -> CommandResult:
        if args.family:
            if args.index is None:
                raise InputFormatError("--family needs --index")
            index = schema.load_json(args.index)
            level = self._level(args)
            return self.algebra_service.special(args.family, index, level, args.to)
        a, basis = self._element(self._inputs(args, 1)[0])
        return self.algebra_service.convert(a, args.to or basis)

    def pair(self, args: Namespace) -> CommandResult:
        first, second = self._inputs(args, 2)
        (t, _), (a, _) = self._element(first), self._element(second)
        return self.algebra_service.pair(t, a)

    # -- functionals ---------------------------------------------------------

    def eval_functional(self, args: Namespace) -> CommandResult:
        if args.check:
            level = self._level(args, len(schema.parse_k(args.k)) if args.k else None)
            k = self._k(args, level, default_inf=True)
            bound = schema.parse_lpartite(args.bound, level)
            self.check_weight(sum(bound), "degree bound")
            return self.functional_service.parity(args.name, level, k, bound)
        if args.degree is not None:
            level = self._level(args, len(schema.parse_k(args.k)) if args.k else None)
            n = schema.parse_lpartite(args.degree, level)
            self.check_weight(sum(n), "degree")
            return self.functional_service.component(args.name, level, n, self._k(args, level), args.basis or "S")
        a = self._qsym(self._inputs(args, 1)[0])
        return self.functional_service.evaluate(args.name, a, self._k(args, a.level), args.method)

    # -- theta ---------------------------------------------------------------

    def theta(self, args: Namespace) -> CommandResult:
        action = args.action
        if action == "apply":
            a = self._qsym(self._inputs(args, 1)[0])
            return self.theta_service.apply(args.functional, a, self._k(args, a.level), args.basis)
        if action == "closed":
            a = self._qsym(self._inputs(args, 1)[0])
            return self.theta_service.closed(a, self._k(args, a.level, default_inf=True), args.basis)
        if action == "peak":
            u = self._color_word(args)
            self.check_weight(len(u), "color word")
            S = schema.load_json(args.S) if args.S else []
            return self.theta_service.peak(S, u, self._level(args), args.basis)
        if action == "admissible":
            self.check_weight(args.n, "length")
            return self.theta_service.admissible(args.n, self._level(args))
        if action == "eta-to-theta":
            level = self._level(args)
            index = schema.parse_composition(args.index, level)
            self.check_weight(sum(map(sum, index)), "index")
            return self.theta_service.dictionary(action, level, index=index, basis=args.basis)
        if action == "theta-to-eta":
            u = self._color_word(args)
            self.check_weight(len(u), "color word")
            S = schema.load_json(args.S) if args.S else []
            return self.theta_service.dictionary(action, self._level(args), S=S, u=u, basis=args.basis)
        raise InputFormatError(f"unknown theta action {action!r}")

    @staticmethod
    def _color_word(args: Namespace) -> Sequence[int]:
        if args.u is None:
            raise InputFormatError("--u is required")
        text = args.u.strip()
        return schema.load_json(text) if text.startswith("[") else text

    # -- subalgebras -----------------------------------------------------------

    def subalg(self, args: Namespace) -> CommandResult:
        action = args.action
        if action == "member":
            a = self._qsym(self._inputs(args, 1)[0])
            spec = self._spec(args, a.level)
            return self.subalgebra_service.member(a, spec, args.cross_check)
        if action == "hilbert":
            return self.hilbert(args)
        spec = self._spec(args)
        if action in ("basis", "ideal"):
            if args.degree is None:
                raise InputFormatError(f"subalg {action} needs --degree")
            n = schema.parse_lpartite(args.degree, spec.level)
            self.check_weight(sum(n), "degree")
            if action == "basis":
                return self.subalgebra_service.basis(spec, n, args.basis)
            return self.subalgebra_service.ideal(spec, n, args.kind)
        if action == "generators":
            return self.subalgebra_service.generators(spec, args.kind, self._max_weight(args, 4))
        if action == "lyndon":
            order = args.order or config.kernel.default_lyndon_order
            return self.subalgebra_service.lyndon(spec, self._max_weight(args, 3), order)
        raise InputFormatError(f"unknown subalg action {action!r}")

    def hilbert(self, args: Namespace) -> CommandResult:
        spec = self._spec(args)
        mode = args.mode or ("both" if spec.parity.value == "odd" else "enumerate")
        return self.subalgebra_service.hilbert(spec, self._max_weight(args, 8), mode)

    # -- posets ----------------------------------------------------------------

    def poset(self, args: Namespace) -> CommandResult:
        action = args.action
        text = self._inputs(args, 1)[0]
        if action in ("gamma", "gamma-hat", "extensions", "j-map"):
            colored = schema.parse_colored_poset(text)
            self.check_weight(len(colored), "colored poset")
            if action == "gamma":
                return self.poset_service.gamma(colored, args.basis)
            if action == "gamma-hat":
                return self.poset_service.gamma_hat(colored)
            if action == "extensions":
                return self.poset_service.extensions(colored)
            return self.poset_service.j_map(colored, args.basis)
        poset = schema.parse_poset(text)
        self.check_weight(sum(poset.multirank), "poset multirank")
        if action == "flag":
            return self.poset_service.flag(poset)
        if action == "f":
            return self.poset_service.f_image(poset, args.basis)
        if action == "mobius":
            return self.poset_service.mobius(poset)
        k = self._k(args, poset.level, default_inf=True)
        if action == "eulerian":
            return self.poset_service.eulerian(poset, k)
        if action == "dehn-sommerville":
            return self.poset_service.dehn_sommerville(poset, k)
        raise InputFormatError(f"unknown poset action {action!r}")

    # -- FQSym -----------------------------------------------------------------

    def fqsym(self, args: Namespace) -> CommandResult:
        action = args.action
        if action == "s-embed":
            level = self._level(args)
            n = schema.parse_lpartite(args.n, level)
            self.check_weight(sum(n), "degree")
            return self.fqsym_service.s_embed(n, level)
        if action == "mul":
            first, second = self._inputs(args, 2)
            a, b = self._fqsym(first), self._fqsym(second)
            self.check_weight(a.max_weight() + b.max_weight(), "product")
            return self.fqsym_service.multiply(a, b)
        a = self._fqsym(self._inputs(args, 1)[0])
        if action == "comul":
            return self.fqsym_service.comultiply(a)
        if action == "antipode":
            return self.fqsym_service.antipode(a)
        if action == "d-map":
            return self.fqsym_service.d_map(a, args.basis)
        raise InputFormatError(f"unknown fqsym action {action!r}")

