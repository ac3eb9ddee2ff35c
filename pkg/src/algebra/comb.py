"""
Combinatorics of l-partite numbers and vector compositions

Conventions:
- An l-partite number is a tuple of l naturals, color 0 first.
- A vector composition is a tuple of nonzero l-partite columns.
- Extended thresholds k may contain math.inf.
- refines(I, J) means J is obtained by splitting the columns of I.
"""

import logging
import math
from collections import Counter
from enum import Enum
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from src.algebra.errors import InputFormatError, LevelMismatchError, PreconditionError

logger = logging.getLogger(__name__)

INF = math.inf

LPartite = Tuple[int, ...]
ExtLPartite = Tuple[Union[int, float], ...]
Composition = Tuple[LPartite, ...]
ColorWord = Tuple[int, ...]


class RefinementOrder(str, Enum):
    """The three refinement orders on vector compositions"""
    BLOCK = "block"
    WEAK = "weak"
    STRICT = "strict"


class ColoredPermutation(NamedTuple):
    """A permutation word of 1..n together with a color word of length n"""
    sigma: Tuple[int, ...]
    colors: ColorWord


# ---------------------------------------------------------------------------
# l-partite numbers
# ---------------------------------------------------------------------------

def check_level(level: int) -> int:
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        raise PreconditionError(f"level must be a positive integer, got {level!r}")
    return level


def zero(level: int) -> LPartite:
    return (0,) * check_level(level)


def unit_vector(color: int, level: int) -> LPartite:
    if not 0 <= color < level:
        raise LevelMismatchError(f"color {color} is outside 0..{level - 1}")
    return tuple(1 if i == color else 0 for i in range(level))


def weight(n: Sequence[int]) -> int:
    return sum(n)


def support(n: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i, x in enumerate(n) if x)


def is_zero(n: Sequence[int]) -> bool:
    return not any(n)


def leq(n: Sequence, k: Sequence) -> bool:
    """Componentwise n <= k; infinite entries of k are maximal"""
    if len(n) != len(k):
        raise LevelMismatchError(f"cannot compare {tuple(n)} with {tuple(k)}")
    return all(a <= b for a, b in zip(n, k))


def vector_add(a: LPartite, b: LPartite) -> LPartite:
    if len(a) != len(b):
        raise LevelMismatchError(f"cannot add {a} and {b}")
    return tuple(x + y for x, y in zip(a, b))


def vector_sub(a: LPartite, b: LPartite) -> LPartite:
    if len(a) != len(b):
        raise LevelMismatchError(f"cannot subtract {b} from {a}")
    return tuple(x - y for x, y in zip(a, b))


def validate_lpartite(n: Iterable, level: int) -> LPartite:
    n = tuple(n)
    if len(n) != level:
        raise LevelMismatchError(f"{n} has length {len(n)}, expected level {level}")
    for x in n:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputFormatError(f"entries must be natural numbers, got {x!r} in {n}")
    return n


def validate_ext_lpartite(k: Iterable, level: int) -> ExtLPartite:
    k = tuple(k)
    if len(k) != level:
        raise LevelMismatchError(f"{k} has length {len(k)}, expected level {level}")
    for x in k:
        if x == INF:
            continue
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputFormatError(f"threshold entries must be naturals or inf, got {x!r}")
    return k


@lru_cache(maxsize=None)
def lpartites_below(n: LPartite) -> Tuple[LPartite, ...]:
    """All m with 0 <= m <= n, in lexicographic order"""
    return tuple(product(*(range(x + 1) for x in n)))


@lru_cache(maxsize=None)
def lpartites_of_weight(w: int, level: int) -> Tuple[LPartite, ...]:
    """All l-partite numbers of weight w, in reverse lexicographic order"""
    if level == 1:
        return ((w,),)
    return tuple((first,) + rest for first in range(w, -1, -1)
                 for rest in lpartites_of_weight(w - first, level - 1))


def lpartites_up_to_weight(w: int, level: int) -> List[LPartite]:
    return [n for total in range(w + 1) for n in lpartites_of_weight(total, level)]


# ---------------------------------------------------------------------------
# Vector compositions
# ---------------------------------------------------------------------------

def column_sum(I: Composition, level: int) -> LPartite:
    total = zero(level)
    for column in I:
        total = vector_add(total, column)
    return total


def composition_weight(I: Composition) -> int:
    return sum(sum(column) for column in I)


def reverse(I: Composition) -> Composition:
    return tuple(reversed(I))


def canonical_key(I: Composition) -> Tuple:
    """Length first, then columnwise lexicographic"""
    return (len(I), I)


def validate_composition(I: Iterable, level: int) -> Composition:
    columns = tuple(validate_lpartite(column, level) for column in I)
    for column in columns:
        if is_zero(column):
            raise InputFormatError(f"vector compositions have nonzero columns, got {column}")
    return columns


def from_rows(rows: Sequence[Sequence[int]]) -> Composition:
    """Build a composition from a matrix written with one row per color"""
    if not rows:
        return ()
    return tuple(tuple(row[c] for row in rows) for c in range(len(rows[0])))


@lru_cache(maxsize=None)
def compositions_of(n: LPartite) -> Tuple[Composition, ...]:
    """Every vector composition of n, in canonical order"""
    if is_zero(n):
        return ((),)
    found = []
    for first in lpartites_below(n):
        if is_zero(first):
            continue
        rest = vector_sub(n, first)
        for tail in compositions_of(rest):
            found.append((first,) + tail)
    found.sort(key=canonical_key)
    logger.debug("enumerated %d compositions of %s", len(found), n)
    return tuple(found)


def compositions_of_weight(w: int, level: int) -> List[Composition]:
    return [I for n in lpartites_of_weight(w, level) for I in compositions_of(n)]


def vector_partitions(n: LPartite) -> List[Composition]:
    """Vector partitions of n, each written as its weakly decreasing composition"""
    return [I for I in compositions_of(n)
            if all(I[r] >= I[r + 1] for r in range(len(I) - 1))]


def z_lambda(parts: Iterable[LPartite]) -> int:
    z = 1
    for part, mult in Counter(parts).items():
        z *= math.factorial(mult) * sum(part) ** mult
    return z


# ---------------------------------------------------------------------------
# Refinement orders
# ---------------------------------------------------------------------------

def refinement_blocks(I: Composition, J: Composition) -> Optional[Tuple[Composition, ...]]:
    """Group the columns of J into consecutive blocks summing to the columns of I.

    Returns None when J does not refine I. The grouping is unique when it exists.
    """
    blocks: List[Composition] = []
    position = 0
    for target in I:
        block: List[LPartite] = []
        acc = tuple(0 for _ in target)
        while acc != target:
            if position >= len(J):
                return None
            column = J[position]
            if len(column) != len(target):
                raise LevelMismatchError("compositions of different levels")
            acc = vector_add(acc, column)
            if not leq(acc, target):
                return None
            block.append(column)
            position += 1
        blocks.append(tuple(block))
    if position != len(J):
        return None
    return tuple(blocks)


def _block_ordered(block: Composition, order: RefinementOrder) -> bool:
    if order == RefinementOrder.BLOCK:
        return True
    for left, right in zip(block, block[1:]):
        top, bottom = max(support(left)), min(support(right))
        if top > bottom or (order == RefinementOrder.STRICT and top == bottom):
            return False
    return True


def refines(I: Composition, J: Composition, order: RefinementOrder = RefinementOrder.BLOCK) -> bool:
    """True when J refines I in the given order (I below J)"""
    blocks = refinement_blocks(I, J)
    if blocks is None:
        return False
    return all(_block_ordered(block, order) for block in blocks)


@lru_cache(maxsize=None)
def coarsenings(I: Composition, order: RefinementOrder = RefinementOrder.BLOCK) -> Tuple[Composition, ...]:
    """All J with J below I, that is, I refines J"""
    if not I:
        return ((),)
    found = []
    cuts = range(1, len(I))
    for size in range(len(I)):
        for removed in combinations(cuts, size):
            kept = [0] + [c for c in cuts if c not in removed] + [len(I)]
            blocks = [I[a:b] for a, b in zip(kept, kept[1:])]
            if not all(_block_ordered(block, order) for block in blocks):
                continue
            level = len(I[0])
            found.append(tuple(column_sum(block, level) for block in blocks))
    found.sort(key=canonical_key)
    return tuple(found)


@lru_cache(maxsize=None)
def refinements(I: Composition, order: RefinementOrder = RefinementOrder.BLOCK) -> Tuple[Composition, ...]:
    """All J with I below J"""
    choices = []
    for column in I:
        choices.append([block for block in compositions_of(column) if _block_ordered(block, order)])
    found = [tuple(col for block in pick for col in block) for pick in product(*choices)]
    found.sort(key=canonical_key)
    return tuple(found)


def interval(I: Composition, J: Composition, order: RefinementOrder = RefinementOrder.BLOCK) -> List[Composition]:
    """All K with I below K below J"""
    return [K for K in refinements(I, order) if refines(K, J, order)]


# ---------------------------------------------------------------------------
# Descents, colors and statistics
# ---------------------------------------------------------------------------

def descents(word: Sequence[int]) -> FrozenSet[int]:
    """Positions i (1-based) with word[i] > word[i+1]"""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def mdeg(u: Sequence[int], level: int) -> LPartite:
    counts = [0] * level
    for letter in u:
        if not 0 <= letter < level:
            raise LevelMismatchError(f"color {letter} is outside 0..{level - 1}")
        counts[letter] += 1
    return tuple(counts)


def parse_color_word(text: Union[str, Sequence[int]]) -> ColorWord:
    if isinstance(text, str):
        if not text.isdigit() and text != "":
            raise InputFormatError(f"color words are strings of digits, got {text!r}")
        return tuple(int(ch) for ch in text)
    return tuple(text)


def coordinate_composition(u: Sequence[int], level: int) -> Composition:
    """E_u: one coordinate column per letter of u"""
    return tuple(unit_vector(c, level) for c in u)


def is_coordinate(I: Composition) -> bool:
    return all(sum(column) == 1 for column in I)


def dof(I: Composition) -> FrozenSet[int]:
    partial, cuts = 0, set()
    for column in I[:-1]:
        partial += sum(column)
        cuts.add(partial)
    return frozenset(cuts)


def cof(I: Composition) -> ColorWord:
    word: List[int] = []
    for column in I:
        for color, mult in enumerate(column):
            word.extend([color] * mult)
    return tuple(word)


def cut_word(u: Sequence[int], cuts: Iterable[int], level: int) -> Composition:
    bounds = [0] + sorted(cuts) + [len(u)]
    return tuple(mdeg(u[a:b], level) for a, b in zip(bounds, bounds[1:]))


def from_dof_cof(n: int, S: Iterable[int], w: Sequence[int], level: int) -> Composition:
    """The unique composition with descent set S and coloring word w"""
    S = frozenset(S)
    w = tuple(w)
    if len(w) != n:
        raise PreconditionError(f"coloring word {w} must have length {n}")
    if not S <= frozenset(range(1, n)):
        raise PreconditionError(f"descent set {sorted(S)} must lie in [1, {n - 1}]")
    if not descents(w) <= S:
        raise PreconditionError(f"Des(w) = {sorted(descents(w))} is not contained in {sorted(S)}")
    if n == 0:
        return ()
    return cut_word(w, S, level)


def wdes(p: ColoredPermutation, level: int) -> Composition:
    """Column sums of the colors over the increasing runs of sigma"""
    return cut_word(p.colors, descents(p.sigma), level)


def standardize(word: Sequence[int]) -> Tuple[int, ...]:
    ranks = {letter: r + 1 for r, letter in enumerate(sorted(word))}
    if len(ranks) != len(word):
        raise PreconditionError(f"standardization needs distinct letters, got {tuple(word)}")
    return tuple(ranks[letter] for letter in word)


# ---------------------------------------------------------------------------
# Peak data
# ---------------------------------------------------------------------------

def peak_vector(I: Composition) -> Composition:
    """Lambda(I): sum the blocks (coordinate columns..., heavy column) and the trailing coordinate run"""
    if not I:
        return ()
    level = len(I[0])
    blocks: List[LPartite] = []
    acc = zero(level)
    pending = False
    for column in I:
        acc = vector_add(acc, column)
        pending = True
        if sum(column) != 1:
            blocks.append(acc)
            acc, pending = zero(level), False
    if pending:
        blocks.append(acc)
    return tuple(blocks)


def pof(I: Composition) -> FrozenSet[int]:
    return dof(peak_vector(I))


def odd_part(I: Composition) -> Composition:
    """odd(I): merge each maximal run of even columns into the odd column closing it"""
    if not I or sum(I[-1]) % 2 == 0:
        raise PreconditionError("odd part requires a last column of odd weight")
    level = len(I[0])
    blocks: List[LPartite] = []
    acc = zero(level)
    for column in I:
        acc = vector_add(acc, column)
        if sum(column) % 2 == 1:
            blocks.append(acc)
            acc = zero(level)
    return tuple(blocks)


def is_odd_composition(I: Composition) -> bool:
    return all(sum(column) % 2 == 1 for column in I)


def tilde(I: Composition) -> Composition:
    """Split every odd column into weight-2 columns followed by one weight-1 column, keeping cof"""
    if not is_odd_composition(I):
        raise PreconditionError("tilde requires every column to have odd weight")
    if not I:
        return ()
    level = len(I[0])
    columns: List[LPartite] = []
    for column in I:
        word = cof((column,))
        cuts = range(2, len(word), 2)
        columns.extend(cut_word(word, cuts, level))
    return tuple(columns)


def peak_data(I: Composition) -> Dict[str, object]:
    """Lambda, pof, odd part and tilde of I; entries whose precondition fails are None"""
    data: Dict[str, object] = {"peak_vector": peak_vector(I), "pof": pof(I),
                               "odd_part": None, "tilde": None}
    if I and sum(I[-1]) % 2 == 1:
        data["odd_part"] = odd_part(I)
    if is_odd_composition(I):
        data["tilde"] = tilde(I)
    return data


def is_peak_set(S: Iterable[int], n: int) -> bool:
    S = frozenset(S)
    if not S <= frozenset(range(2, n)):
        return False
    return all(s - 1 not in S for s in S)


def peak_sets(n: int) -> List[FrozenSet[int]]:
    candidates = range(2, n)
    found = []
    for size in range(len(candidates) + 1):
        for S in combinations(candidates, size):
            if is_peak_set(S, n):
                found.append(frozenset(S))
    return found


def peak_composition(S: Iterable[int], u: Sequence[int], level: int) -> Composition:
    """I_{S,u}: the composition with columns of weight 1 or 2, coloring word u and peak set S"""
    S = frozenset(S)
    n = len(u)
    if not is_peak_set(S, n):
        raise PreconditionError(f"{sorted(S)} is not a peak subset of [{n}]")
    cuts = frozenset(range(1, n)) - {s - 1 for s in S}
    return from_dof_cof(n, cuts, u, level)


def is_admissible(S: Iterable[int], u: Sequence[int], level: int) -> bool:
    try:
        I = peak_composition(S, u, level)
    except PreconditionError:
        return False
    return cof(odd_part(I)) == tuple(u)


def admissible_pairs(u: Sequence[int], level: int) -> List[FrozenSet[int]]:
    """Peak sets S with (S, u) admissible"""
    return [S for S in peak_sets(len(u)) if is_admissible(S, u, level)]


def color_words(n: LPartite) -> List[ColorWord]:
    """All color words of multidegree n"""
    letters = [c for c, mult in enumerate(n) for _ in range(mult)]
    words = set()

    def build(prefix: List[int], remaining: Counter) -> None:
        if not remaining:
            words.add(tuple(prefix))
            return
        for letter in list(remaining):
            remaining[letter] -= 1
            if remaining[letter] == 0:
                del remaining[letter]
            build(prefix + [letter], remaining)
            remaining[letter] += 1

    build([], Counter(letters))
    return sorted(words)


# ---------------------------------------------------------------------------
# Lyndon words
# ---------------------------------------------------------------------------

LYNDON_ORDERS: Dict[str, Callable[[LPartite], Tuple]] = {
    "lex": lambda column: tuple(column),
    "revlex": lambda column: tuple(reversed(column)),
}


def is_lyndon(I: Composition, order: Optional[Callable[[LPartite], Tuple]] = None) -> bool:
    """True when I is strictly smaller than each of its nontrivial rotations"""
    if not I:
        return False
    key = order or LYNDON_ORDERS["lex"]
    word = [key(column) for column in I]
    return all(word < word[r:] + word[:r] for r in range(1, len(word)))


def lyndon_compositions(w: int, level: int, order: Optional[Callable[[LPartite], Tuple]] = None) -> List[Composition]:
    return [I for I in compositions_of_weight(w, level) if is_lyndon(I, order)]


# ---------------------------------------------------------------------------
# Shuffles and splittings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _quasi_shuffles(I: Composition, J: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if not I:
        return ((J, 1),)
    if not J:
        return ((I, 1),)
    result: Counter = Counter()
    for K, mult in _quasi_shuffles(I[1:], J):
        result[(I[0],) + K] += mult
    for K, mult in _quasi_shuffles(I, J[1:]):
        result[(J[0],) + K] += mult
    merged = vector_add(I[0], J[0])
    for K, mult in _quasi_shuffles(I[1:], J[1:]):
        result[(merged,) + K] += mult
    return tuple(result.items())


def quasi_shuffles(I: Composition, J: Composition) -> Counter:
    """Interleavings of I and J allowing adjacent columns of I and J to merge"""
    return Counter(dict(_quasi_shuffles(tuple(I), tuple(J))))


@lru_cache(maxsize=None)
def _shuffles(I: Composition, J: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if not I:
        return ((J, 1),)
    if not J:
        return ((I, 1),)
    result: Counter = Counter()
    for K, mult in _shuffles(I[1:], J):
        result[(I[0],) + K] += mult
    for K, mult in _shuffles(I, J[1:]):
        result[(J[0],) + K] += mult
    return tuple(result.items())


def shuffles(I: Composition, J: Composition) -> Counter:
    return Counter(dict(_shuffles(tuple(I), tuple(J))))


def concat_splits(I: Composition, parts: int) -> List[Tuple[Composition, ...]]:
    """Every way to write I as a concatenation of `parts` possibly empty blocks"""
    if parts < 1:
        raise PreconditionError("concat_splits needs at least one part")
    splits = []
    for cuts in combinations_with_replacement(range(len(I) + 1), parts - 1):
        bounds = (0,) + cuts + (len(I),)
        splits.append(tuple(I[a:b] for a, b in zip(bounds, bounds[1:])))
    return splits


def nonempty_factorizations(I: Composition) -> List[Tuple[Composition, ...]]:
    """Every way to write I as a concatenation of nonempty blocks"""
    if not I:
        return [()]
    found = []
    cuts = range(1, len(I))
    for size in range(len(I)):
        for kept in combinations(cuts, size):
            bounds = (0,) + kept + (len(I),)
            found.append(tuple(I[a:b] for a, b in zip(bounds, bounds[1:])))
    return found


# ---------------------------------------------------------------------------
# Numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _entringer_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    previous = _entringer_row(n - 1)
    row = [0]
    for k in range(1, n + 1):
        row.append(row[-1] + previous[n - k])
    return tuple(row)


def euler_number(n: int) -> int:
    """Coefficients of tan + sec: 1, 1, 1, 2, 5, 16, 61, ..."""
    if n < 0:
        raise PreconditionError("Euler numbers are indexed by naturals")
    return _entringer_row(n)[n]


def pi(I: Composition) -> int:
    return math.prod(sum(column) for column in I)


def sp(I: Composition) -> int:
    return math.factorial(len(I)) * pi(I)


def _blocks_or_raise(I: Composition, J: Composition) -> Tuple[Composition, ...]:
    blocks = refinement_blocks(I, J)
    if blocks is None:
        raise PreconditionError(f"{J} does not refine {I}")
    return blocks


def block_len(I: Composition, J: Composition) -> int:
    """len(J, I) for I below J: product of the block lengths of J over the columns of I"""
    return math.prod(len(block) for block in _blocks_or_raise(I, J))


def block_sp(I: Composition, J: Composition) -> int:
    """sp(J, I) for I below J"""
    return math.prod(sp(block) for block in _blocks_or_raise(I, J))
