"""
Multigraded posets, colored posets and their images in QSym^(l)

Posets are stored as networkx DiGraphs of cover (or generating) relations
with a cached transitive closure. Elements are labeled; no isomorphism
testing is attempted.
"""

import logging
from functools import cached_property
from itertools import product as cartesian
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import BaseModel

from src.algebra import comb
from src.algebra.comb import ColoredPermutation, Composition, LPartite
from src.algebra.errors import PosetError, PreconditionError
from src.algebra.fqsym import FQSymElem, descent_class
from src.algebra.qsym import QSymElem

logger = logging.getLogger(__name__)

Element = Hashable


class MultigradedPoset:
    """A finite poset with 0 and 1 and a multirank function raised by covers one coordinate at a time"""

    def __init__(self, level: int, elements: Iterable[Element],
                 covers: Iterable[Tuple[Element, Element]], rank: Mapping[Element, Sequence[int]]):
        self.level = comb.check_level(level)
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(elements)
        for x, y in covers:
            if x not in self.graph or y not in self.graph:
                raise PosetError(f"cover ({x!r}, {y!r}) mentions an unknown element")
            self.graph.add_edge(x, y)
        if not nx.is_directed_acyclic_graph(self.graph):
            raise PosetError("the cover relation has a cycle")
        missing = [x for x in self.graph if x not in rank]
        if missing:
            raise PosetError(f"no rank given for {missing!r}")
        self.rank: Dict[Element, LPartite] = {x: comb.validate_lpartite(rank[x], self.level) for x in self.graph}
        self._check_axioms()
        self.closure = nx.transitive_closure_dag(self.graph)

    def _check_axioms(self) -> None:
        if not len(self.graph):
            raise PosetError("a multigraded poset has at least one element")
        minima = [x for x in self.graph if self.graph.in_degree(x) == 0]
        maxima = [x for x in self.graph if self.graph.out_degree(x) == 0]
        if len(minima) != 1 or len(maxima) != 1:
            raise PosetError(f"expected a unique minimum and maximum, found {len(minima)} and {len(maxima)}")
        self.bottom, self.top = minima[0], maxima[0]
        if not comb.is_zero(self.rank[self.bottom]):
            raise PosetError("the minimum must have rank 0")
        for x, y in self.graph.edges:
            step = comb.vector_sub(self.rank[y], self.rank[x])
            if sorted(step) != [0] * (self.level - 1) + [1]:
                raise PosetError(f"cover {x!r} < {y!r} does not raise the rank by a coordinate vector")

    @property
    def elements(self) -> List[Element]:
        return list(self.graph.nodes)

    @property
    def multirank(self) -> LPartite:
        return self.rank[self.top]

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def leq(self, x: Element, y: Element) -> bool:
        return x == y or self.closure.has_edge(x, y)

    def up_set(self, x: Element) -> List[Element]:
        return [x] + list(self.closure.successors(x))

    @cached_property
    def _by_rank(self) -> Dict[LPartite, List[Element]]:
        table: Dict[LPartite, List[Element]] = {}
        for x, r in self.rank.items():
            table.setdefault(r, []).append(x)
        return table

    # -- constructions -------------------------------------------------------

    def interval(self, x: Element, y: Element) -> "MultigradedPoset":
        if not self.leq(x, y):
            raise PreconditionError(f"{x!r} is not below {y!r}")
        members = [z for z in self.up_set(x) if self.leq(z, y)]
        sub = self.graph.subgraph(members)
        base = self.rank[x]
        return MultigradedPoset(self.level, members, list(sub.edges),
                                {z: comb.vector_sub(self.rank[z], base) for z in members})

    def product(self, other: "MultigradedPoset") -> "MultigradedPoset":
        if other.level != self.level:
            raise PosetError(f"cannot multiply posets of levels {self.level} and {other.level}")
        elements = list(cartesian(self.graph.nodes, other.graph.nodes))
        covers = [((x, z), (y, z)) for x, y in self.graph.edges for z in other.graph.nodes]
        covers += [((z, x), (z, y)) for z in self.graph.nodes for x, y in other.graph.edges]
        rank = {(x, z): comb.vector_add(self.rank[x], other.rank[z]) for x, z in elements}
        return MultigradedPoset(self.level, elements, covers, rank)

    # -- Moebius function ------------------------------------------------------

    def mobius_from(self, x: Element) -> Dict[Element, int]:
        """mu(x, y) for every y above x"""
        values: Dict[Element, int] = {}
        above = self.up_set(x)
        for z in nx.topological_sort(self.graph.subgraph(above)):
            if z == x:
                values[z] = 1
            else:
                values[z] = -sum(values[w] for w in self.closure.predecessors(z) if w in values)
        return values

    def mobius(self, x: Optional[Element] = None, y: Optional[Element] = None) -> int:
        x = self.bottom if x is None else x
        y = self.top if y is None else y
        if not self.leq(x, y):
            raise PreconditionError(f"{x!r} is not below {y!r}")
        return self.mobius_from(x)[y]

    def is_k_eulerian(self, k: Sequence) -> bool:
        """Every interval of rank n <= k has mu = (-1)^|n|"""
        k = comb.validate_ext_lpartite(k, self.level)
        for x in self.graph:
            for y, mu in self.mobius_from(x).items():
                n = comb.vector_sub(self.rank[y], self.rank[x])
                if comb.leq(n, k) and mu != (-1) ** sum(n):
                    logger.debug("interval [%r, %r] of rank %s has mu = %d", x, y, n, mu)
                    return False
        return True

    # -- flag vectors ----------------------------------------------------------

    def flag_f(self, I: Sequence) -> int:
        """Number of chains 0 = t_0 < ... < t_m = 1 with rank jumps the columns of I"""
        I = comb.validate_composition(I, self.level)
        if comb.column_sum(I, self.level) != self.multirank:
            raise PreconditionError(f"columns of {I} do not sum to the multirank {self.multirank}")
        counts: Dict[Element, int] = {self.bottom: 1}
        for column in I:
            step: Dict[Element, int] = {}
            for x, c in counts.items():
                target = comb.vector_add(self.rank[x], column)
                for y in self._by_rank.get(target, []):
                    if self.leq(x, y):
                        step[y] = step.get(y, 0) + c
            counts = step
        return counts.get(self.top, 0)

    def f_homomorphism(self) -> QSymElem:
        terms = {}
        for I in comb.compositions_of(self.multirank):
            f = self.flag_f(I)
            if f:
                terms[I] = f
        return QSymElem(self.level, terms)

    def dehn_sommerville_check(self, k: Sequence) -> "DehnSommervilleReport":
        """Check the generalized Dehn-Sommerville relations at every column i_r <= k"""
        k = comb.validate_ext_lpartite(k, self.level)
        flags = {I: self.flag_f(I) for I in comb.compositions_of(self.multirank)}
        checked, violations = 0, []
        for I in flags:
            for r, column in enumerate(I):
                if not comb.leq(column, k):
                    continue
                checked += 1
                total = 0
                for j in comb.lpartites_below(column):
                    middle = tuple(part for part in (j, comb.vector_sub(column, j)) if any(part))
                    total += (-1) ** sum(j) * flags[I[:r] + middle + I[r + 1:]]
                if total:
                    violations.append(Violation(index=[list(c) for c in I], position=r, value=total))
        logger.debug("checked %d relations, %d violated", checked, len(violations))
        return DehnSommervilleReport(checked=checked, violations=violations)


class Violation(BaseModel):
    index: List[List[int]]
    position: int
    value: int


class DehnSommervilleReport(BaseModel):
    checked: int
    violations: List[Violation]

    @property
    def holds(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# Standard families
# ---------------------------------------------------------------------------

def chain(n: int, level: int = 1, colors: Optional[Sequence[int]] = None) -> MultigradedPoset:
    """0 < 1 < ... < n with step r raising the rank in color colors[r]"""
    colors = tuple(colors) if colors is not None else (0,) * n
    if len(colors) != n:
        raise PosetError(f"a chain of length {n} needs {n} step colors")
    rank = {0: comb.zero(level)}
    for r, color in enumerate(colors):
        rank[r + 1] = comb.vector_add(rank[r], comb.unit_vector(color, level))
    return MultigradedPoset(level, range(n + 1), [(r, r + 1) for r in range(n)], rank)


def diamond() -> MultigradedPoset:
    rank = {"0": (0,), "a": (1,), "b": (1,), "1": (2,)}
    return MultigradedPoset(1, rank, [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], rank)


def boolean(n: int, coloring: Sequence[int], level: int) -> MultigradedPoset:
    """Subsets of 1..n by inclusion; atom i carries color coloring[i-1]"""
    if len(coloring) != n:
        raise PosetError(f"B_{n} needs {n} atom colors")
    subsets = [tuple(i for i in range(1, n + 1) if mask >> (i - 1) & 1) for mask in range(2 ** n)]
    rank = {s: comb.mdeg([coloring[i - 1] for i in s], level) for s in subsets}
    covers = [(s, tuple(sorted(s + (i,)))) for s in subsets for i in range(1, n + 1) if i not in s]
    return MultigradedPoset(level, subsets, covers, rank)


# ---------------------------------------------------------------------------
# Colored posets
# ---------------------------------------------------------------------------

ColoredElement = Tuple[int, int]


class ColoredPoset:
    """A poset on pairs (absolute value, color) with absolute values exactly 1..|P|"""

    def __init__(self, level: int, elements: Iterable[Sequence[int]],
                 relations: Iterable[Tuple[Sequence[int], Sequence[int]]] = ()):
        self.level = comb.check_level(level)
        self.graph = nx.DiGraph()
        for value, color in elements:
            if not 0 <= color < self.level:
                raise PosetError(f"color {color} is outside 0..{self.level - 1}")
            self.graph.add_node((int(value), int(color)))
        values = sorted(x for x, _ in self.graph)
        if values != list(range(1, len(values) + 1)):
            raise PosetError(f"absolute values must be exactly 1..{len(values)}, got {values}")
        for x, y in relations:
            x, y = tuple(x), tuple(y)
            if x not in self.graph or y not in self.graph:
                raise PosetError(f"relation ({x}, {y}) mentions an unknown element")
            self.graph.add_edge(x, y)
        if not nx.is_directed_acyclic_graph(self.graph):
            raise PosetError("the order relation has a cycle")
        self.closure = nx.transitive_closure_dag(self.graph)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def elements(self) -> List[ColoredElement]:
        return sorted(self.graph.nodes)

    @property
    def relations(self) -> List[Tuple[ColoredElement, ColoredElement]]:
        return sorted(self.closure.edges)

    def color_degree(self) -> LPartite:
        return comb.mdeg([c for _, c in self.graph], self.level)

    def linear_extensions(self) -> List[ColoredPermutation]:
        found = [ColoredPermutation(tuple(x for x, _ in order), tuple(c for _, c in order))
                 for order in nx.all_topological_sorts(self.graph)]
        return sorted(found)

    def gamma(self) -> QSymElem:
        terms: Dict[Composition, int] = {}
        for p in self.linear_extensions():
            for I, c in descent_class(p.sigma, p.colors, self.level).items():
                terms[I] = terms.get(I, 0) + c
        return QSymElem(self.level, terms)

    def gamma_hat(self) -> FQSymElem:
        return FQSymElem(self.level, {p: 1 for p in self.linear_extensions()})

    def restrict(self, members: Iterable[ColoredElement]) -> "ColoredPoset":
        """The induced subposet, with absolute values standardized"""
        members = sorted(members)
        relabel = {x: (r + 1, x[1]) for r, x in enumerate(members)}
        sub = self.closure.subgraph(members)
        return ColoredPoset(self.level, relabel.values(), [(relabel[x], relabel[y]) for x, y in sub.edges])

    def disjoint_union(self, other: "ColoredPoset") -> "ColoredPoset":
        """Other's absolute values are shifted past ours"""
        if other.level != self.level:
            raise PosetError(f"cannot combine colored posets of levels {self.level} and {other.level}")
        shift = len(self)
        elements = list(self.graph.nodes) + [(x + shift, c) for x, c in other.graph.nodes]
        relations = list(self.graph.edges) + [((x + shift, c), (y + shift, d))
                                               for (x, c), (y, d) in other.graph.edges]
        return ColoredPoset(self.level, elements, relations)

    def order_ideals(self) -> List[FrozenSet[ColoredElement]]:
        ideals = set()
        for antichain in nx.antichains(self.closure):
            down = set(antichain)
            for a in antichain:
                down.update(self.closure.predecessors(a))
            ideals.add(frozenset(down))
        return sorted(ideals, key=lambda s: (len(s), sorted(s)))

    def coproduct(self) -> List[Tuple["ColoredPoset", "ColoredPoset"]]:
        """Pairs (ideal, complement), each standardized"""
        everything = set(self.graph.nodes)
        return [(self.restrict(J), self.restrict(everything - J)) for J in self.order_ideals()]

    def j_map(self) -> MultigradedPoset:
        """Order ideals by inclusion, ranked by their color multidegree"""
        ideals = self.order_ideals()
        label = {J: tuple(sorted(J)) for J in ideals}
        covers = [(label[J], label[K]) for J in ideals for K in ideals
                  if len(K) == len(J) + 1 and J < K]
        rank = {label[J]: comb.mdeg([c for _, c in J], self.level) for J in ideals}
        return MultigradedPoset(self.level, label.values(), covers, rank)


def colored_antichain(colors: Sequence[int], level: int) -> ColoredPoset:
    return ColoredPoset(level, [(i + 1, c) for i, c in enumerate(colors)])


def colored_chain(colors: Sequence[int], level: int) -> ColoredPoset:
    elements = [(i + 1, c) for i, c in enumerate(colors)]
    return ColoredPoset(level, elements, list(zip(elements, elements[1:])))


PosetLike = Union[MultigradedPoset, ColoredPoset]
