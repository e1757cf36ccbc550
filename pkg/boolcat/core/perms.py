"""
Words, permutations, the stack-sorting map and pattern avoidance

A word is a tuple of distinct positive integers; a permutation is a word
whose value set is exactly {1..n}. Positions are 1-based wherever they are
reported back to callers.
"""
import logging
from dataclasses import dataclass
from functools import partial
from itertools import combinations, permutations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from boolcat.core.errors import ClassSpecError, PermutationError, RelabelError, WordParseError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Permutation = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Construction and text form
# ---------------------------------------------------------------------------

def as_word(values: Iterable[int]) -> Word:
    """Validate and freeze a sequence of distinct positive integers"""
    word = tuple(values)
    for value in word:
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise WordParseError(f"word values must be positive integers, got {value!r}")
    if len(set(word)) != len(word):
        raise WordParseError(f"word values must be distinct: {format_word(word)}")
    return word


def is_permutation(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, len(w) + 1))


def as_permutation(values: Iterable[int]) -> Permutation:
    """Validate a word whose values are exactly {1..n}"""
    word = as_word(values)
    if not is_permutation(word):
        raise PermutationError(f"not a permutation of 1..{len(word)}: {format_word(word)}")
    return word


def parse_word(text: str) -> Word:
    """Parse the space-separated text form; the empty string is the empty word"""
    tokens = text.split()
    try:
        values = [int(token) for token in tokens]
    except ValueError as e:
        raise WordParseError(f"cannot parse word {text!r}: {e}") from e
    return as_word(values)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(value) for value in w)


def permutations_of(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order"""
    return permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# Standardization
# ---------------------------------------------------------------------------

def standardize(w: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to w"""
    rank = {value: i for i, value in enumerate(sorted(w), start=1)}
    return tuple(rank[value] for value in w)


def relabel(p: Sequence[int], values: Iterable[int]) -> Word:
    """
    The word on the given value set that is order-isomorphic to p

    p must be a permutation; values are taken as a set and sorted.
    """
    if not is_permutation(p):
        raise RelabelError(f"cannot relabel {format_word(p)}: not a permutation of 1..{len(p)}")
    ordered = sorted(set(values))
    if len(ordered) != len(p):
        raise RelabelError(
            f"cannot relabel a permutation of length {len(p)} onto {len(ordered)} values"
        )
    return tuple(ordered[x - 1] for x in p)


# ---------------------------------------------------------------------------
# Stack sorting
# ---------------------------------------------------------------------------

def stack_sort(w: Sequence[int]) -> Word:
    """s(eps) = eps, s(LmR) = s(L) s(R) m with m the maximum of the word"""
    return _stack_sort(tuple(w))


def _stack_sort(w: Word) -> Word:
    if not w:
        return ()
    top = max(w)
    k = w.index(top)
    return _stack_sort(w[:k]) + _stack_sort(w[k + 1:]) + (top,)


def stack_sort_machine(w: Sequence[int]) -> Word:
    """
    Single pass through one stack

    Before each push, pop while the top of the stack is smaller than the
    incoming entry; flush the stack at the end.
    """
    out: List[int] = []
    stack: List[int] = []
    for value in w:
        while stack and stack[-1] < value:
            out.append(stack.pop())
        stack.append(value)
    while stack:
        out.append(stack.pop())
    return tuple(out)


# ---------------------------------------------------------------------------
# Pattern containment
# ---------------------------------------------------------------------------

def contains(w: Sequence[int], q: Sequence[int]) -> bool:
    """True iff some subsequence of w is order-isomorphic to q"""
    k = len(q)
    if k == 0:
        return True
    if k > len(w):
        return False
    q = tuple(q)
    if k <= 3:
        return any(standardize(sub) == q for sub in combinations(w, k))
    return _embeds(tuple(w), q, 0, [])


def _embeds(w: Word, q: Permutation, start: int, chosen: List[int]) -> bool:
    j = len(chosen)
    if j == len(q):
        return True
    # leave room for the entries of q still to place
    for i in range(start, len(w) - (len(q) - j) + 1):
        value = w[i]
        if all((value < chosen[r]) == (q[j] < q[r]) for r in range(j)):
            chosen.append(value)
            if _embeds(w, q, i + 1, chosen):
                return True
            chosen.pop()
    return False


@dataclass(frozen=True)
class ClassSpec:
    """A finite set of forbidden patterns defining Av_n(B)"""

    patterns: FrozenSet[Permutation]

    def __post_init__(self):
        if not self.patterns:
            raise ClassSpecError("a pattern class needs at least one pattern")
        for pattern in self.patterns:
            if len(pattern) < 1 or not is_permutation(pattern):
                raise ClassSpecError(f"pattern {pattern!r} is not a nonempty permutation")

    @classmethod
    def of(cls, *patterns: Sequence[int]) -> "ClassSpec":
        return cls(frozenset(tuple(p) for p in patterns))

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """
        Parse "132,312" style strings

        Each comma-separated token is either a run of single digits ("2413")
        or space-separated values ("1 10 2 ...") for patterns longer than nine.
        """
        patterns = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ClassSpecError(f"empty pattern in class {text!r}")
            try:
                if " " in token:
                    values = parse_word(token)
                else:
                    values = tuple(int(ch) for ch in token)
            except (ValueError, WordParseError) as e:
                raise ClassSpecError(f"cannot parse pattern {token!r}: {e}") from e
            patterns.append(values)
        return cls.of(*patterns)

    def __str__(self) -> str:
        return ",".join(sorted(_pattern_text(p) for p in self.patterns))

    @property
    def key(self) -> str:
        return str(self)


def _pattern_text(p: Permutation) -> str:
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return format_word(p)


AV_21 = ClassSpec.of((2, 1))
AV_132_312 = ClassSpec.of((1, 3, 2), (3, 1, 2))
AV_231_312 = ClassSpec.of((2, 3, 1), (3, 1, 2))
AV_132_231 = ClassSpec.of((1, 3, 2), (2, 3, 1))


def avoids_all(w: Sequence[int], spec: ClassSpec) -> bool:
    """True iff w contains none of the patterns of spec (pattern definition)"""
    return not any(contains(w, q) for q in spec.patterns)


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------

def lr_extrema(w: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """1-based positions of the left-to-right minima and maxima of w"""
    minima: List[int] = []
    maxima: List[int] = []
    low = high = None
    for position, value in enumerate(w, start=1):
        if low is None or value < low:
            low = value
            minima.append(position)
        if high is None or value > high:
            high = value
            maxima.append(position)
    return tuple(minima), tuple(maxima)


def is_minmax_permutation(p: Sequence[int]) -> bool:
    """Every entry is a left-to-right minimum or maximum (the class Av(132,312))"""
    if not p:
        return True
    low = high = p[0]
    for value in p[1:]:
        if value < low:
            low = value
        elif value > high:
            high = value
        else:
            return False
    return True


@dataclass(frozen=True)
class LayerProfile:
    """Lengths of the layers of a layered permutation, left to right"""

    layer_lengths: Tuple[int, ...]

    def __post_init__(self):
        if any(length < 1 for length in self.layer_lengths):
            raise PermutationError(f"layer lengths must be positive: {self.layer_lengths}")

    @property
    def size(self) -> int:
        return sum(self.layer_lengths)

    @property
    def first(self) -> int:
        return self.layer_lengths[0]

    @property
    def last(self) -> int:
        return self.layer_lengths[-1]

    def to_permutation(self) -> Permutation:
        return layers_to_permutation(self)


def layers_to_permutation(profile: LayerProfile) -> Permutation:
    """Descending runs over ascending value blocks"""
    values: List[int] = []
    start = 0
    for length in profile.layer_lengths:
        values.extend(range(start + length, start, -1))
        start += length
    return tuple(values)


def _descending_runs(w: Sequence[int]) -> List[Tuple[int, ...]]:
    runs: List[List[int]] = []
    for value in w:
        if runs and value < runs[-1][-1]:
            runs[-1].append(value)
        else:
            runs.append([value])
    return [tuple(run) for run in runs]


def layer_profile(p: Sequence[int]) -> Optional[LayerProfile]:
    """
    Layer lengths when p is layered (avoids 231 and 312), otherwise None

    None is an ordinary negative answer. The empty word has the empty profile.
    """
    runs = _descending_runs(p)
    for left, right in zip(runs, runs[1:]):
        if min(right) < max(left):
            return None
    return LayerProfile(tuple(len(run) for run in runs))


def is_layered(p: Sequence[int]) -> bool:
    return layer_profile(p) is not None


def is_unimodal_valley(p: Sequence[int]) -> bool:
    """Decreasing then increasing (the class Av(132,231))"""
    if not p:
        return True
    k = p.index(min(p))
    left_ok = all(a > b for a, b in zip(p[:k], p[1:k + 1]))
    right_ok = all(a < b for a, b in zip(p[k:], p[k + 1:]))
    return left_ok and right_ok


def is_increasing(p: Sequence[int]) -> bool:
    """The class Av(21)"""
    return all(a < b for a, b in zip(p, p[1:]))


_STRUCTURAL_CHECKERS: Dict[FrozenSet[Permutation], Callable[[Sequence[int]], bool]] = {
    AV_21.patterns: is_increasing,
    AV_132_312.patterns: is_minmax_permutation,
    AV_231_312.patterns: is_layered,
    AV_132_231.patterns: is_unimodal_valley,
}


def avoidance_checker(spec: ClassSpec) -> Callable[[Sequence[int]], bool]:
    """
    Fastest available membership test for Av(spec)

    Structural O(n) checkers for the four classes the engine verifies,
    the pattern definition for everything else.
    """
    checker = _STRUCTURAL_CHECKERS.get(spec.patterns)
    if checker is None:
        logger.debug(f"No structural checker for {spec}; using pattern containment")
        return partial(avoids_all, spec=spec)
    return checker
