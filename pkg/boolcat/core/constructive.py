"""
Constructive generation of s^{-1}(Av_n(132,312)) and s^{-1}(Av_n(231,312))

A preimage p = L n R of length n is built either by putting n in front of or
behind a shorter preimage, or by choosing value sets for L and R from a pair
(l, r) of shorter preimages. Each pair admits exactly two value-set choices,
mirroring a_n = 2 a_{n-1} + 2 sum_{i=2}^{n-1} a_{i-1} a_{n-i}.
"""
import logging
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from boolcat.core.config import get_settings
from boolcat.core.errors import ClassSpecError, DuplicatePreimageError, PreconditionError
from boolcat.core.perms import (
    AV_132_312,
    AV_231_312,
    ClassSpec,
    Permutation,
    avoidance_checker,
    format_word,
    is_permutation,
    layer_profile,
    relabel,
    stack_sort,
)
from boolcat.core.preimage import PreimageSet, check_size
from boolcat.models.dto import Method

logger = logging.getLogger(__name__)

settings = get_settings()


class CombineChoice(str, Enum):
    """Which of the two value-set choices a combination step takes"""
    # Av(132,312): leading entry of s(R) goes below or above all of L
    MIN = "min"
    MAX = "max"
    # Av(231,312): L entirely below R, or last layer of s(L) merged over the first layer of s(R)
    DISJOINT = "disjoint"
    MERGED = "merged"


class Side(str, Enum):
    FRONT = "front"
    BACK = "back"


def extend_with_max(p: Sequence[int], side: Side) -> Permutation:
    """n.p or p.n; both sort to s(p).n, so class membership carries over"""
    if not p:
        raise PreconditionError("extend_with_max needs a nonempty permutation")
    top = len(p) + 1
    if side == Side.FRONT:
        return (top,) + tuple(p)
    return tuple(p) + (top,)


def _require_preimage(name: str, x: Sequence[int], spec: ClassSpec, step: str) -> Permutation:
    if not x:
        raise PreconditionError(f"{step}: {name} must be nonempty")
    if not is_permutation(x):
        raise PreconditionError(f"{step}: {name} = {format_word(x)} is not a permutation")
    image = stack_sort(x)
    if not avoidance_checker(spec)(image):
        raise PreconditionError(
            f"{step}: s({name}) = {format_word(image)} does not avoid {spec} (input {name} = {format_word(x)})"
        )
    return image


def combine_132_312(l: Sequence[int], r: Sequence[int], choice: CombineChoice) -> Permutation:
    """
    Join l and r around a new maximum so the image stays in Av(132,312)

    With c the first entry of s(r), u entries of s(r) below c and h above it:
    MIN puts c under all of L, MAX puts c over all of L.
    """
    _require_preimage("l", l, AV_132_312, "combine_132_312")
    sr = _require_preimage("r", r, AV_132_312, "combine_132_312")
    a, b = len(l), len(r)
    n = a + b + 1
    c = sr[0]
    u = sum(1 for value in sr if value < c)
    h = b - 1 - u
    top_block = list(range(n - h, n))

    if choice == CombineChoice.MIN:
        values_r = list(range(1, u + 2)) + top_block
        values_l = list(range(u + 2, n - h))
    elif choice == CombineChoice.MAX:
        values_r = list(range(1, u + 1)) + [u + a + 1] + top_block
        values_l = list(range(u + 1, u + a + 1))
    else:
        raise PreconditionError(f"combine_132_312 takes MIN or MAX, got {choice!r}")

    return relabel(l, values_l) + (n,) + relabel(r, values_r)


def combine_231_312(l: Sequence[int], r: Sequence[int], choice: CombineChoice) -> Permutation:
    """
    Join l and r around a new maximum so the image stays layered

    DISJOINT keeps every entry of L below R. MERGED lifts the last layer of
    s(L) over the first layer of s(R), uniting them into one layer.
    """
    sl = _require_preimage("l", l, AV_231_312, "combine_231_312")
    sr = _require_preimage("r", r, AV_231_312, "combine_231_312")
    a, b = len(l), len(r)
    n = a + b + 1

    if choice == CombineChoice.DISJOINT:
        values_l = list(range(1, a + 1))
    elif choice == CombineChoice.MERGED:
        l1 = layer_profile(sl).last
        r1 = layer_profile(sr).first
        values_l = list(range(1, a - l1 + 1)) + list(range(a - l1 + r1 + 1, a + r1 + 1))
    else:
        raise PreconditionError(f"combine_231_312 takes DISJOINT or MERGED, got {choice!r}")

    taken = set(values_l)
    values_r = [value for value in range(1, n) if value not in taken]
    return relabel(l, values_l) + (n,) + relabel(r, values_r)


Combiner = Callable[[Sequence[int], Sequence[int], CombineChoice], Permutation]

_RULES: Dict[str, Tuple[Combiner, Tuple[CombineChoice, CombineChoice]]] = {
    AV_132_312.key: (combine_132_312, (CombineChoice.MIN, CombineChoice.MAX)),
    AV_231_312.key: (combine_231_312, (CombineChoice.DISJOINT, CombineChoice.MERGED)),
}


def supports(spec: ClassSpec) -> bool:
    return spec.key in _RULES


class ConstructiveGenerator:
    """
    Recursive generator with per-(class, n) memoization

    Sets up to memo_cap are kept; larger sizes are rebuilt on demand from
    the memoized smaller sets. Requests above limit are refused.
    """

    def __init__(self, memo_cap: Optional[int] = None, limit: Optional[int] = None):
        self.memo_cap = settings.constructive_memo_cap if memo_cap is None else memo_cap
        self.limit = settings.constructive_limit if limit is None else limit
        self._memo: Dict[Tuple[str, int], Tuple[Permutation, ...]] = {}

    def _rule(self, spec: ClassSpec) -> Tuple[Combiner, Tuple[CombineChoice, CombineChoice]]:
        rule = _RULES.get(spec.key)
        if rule is None:
            raise ClassSpecError(
                f"no constructive generator for class {spec}; "
                f"supported: {', '.join(sorted(_RULES))}"
            )
        return rule

    def members(self, n: int, spec: ClassSpec) -> Tuple[Permutation, ...]:
        if n < 1:
            raise ValueError(f"constructive generation needs n >= 1, got {n}")
        key = (spec.key, n)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        built = self._build(n, spec)
        if n <= self.memo_cap:
            self._memo[key] = built
        return built

    def _build(self, n: int, spec: ClassSpec) -> Tuple[Permutation, ...]:
        combine, choices = self._rule(spec)
        if n == 1:
            return ((1,),)

        produced: List[Permutation] = []
        seen: Set[Permutation] = set()

        def emit(p: Permutation, origin: str) -> None:
            if p in seen:
                raise DuplicatePreimageError(
                    f"class {spec}, n={n}: {format_word(p)} produced twice ({origin})"
                )
            seen.add(p)
            produced.append(p)

        shorter = self.members(n - 1, spec)
        for side in (Side.FRONT, Side.BACK):
            for p in shorter:
                emit(extend_with_max(p, side), f"extend {side.value}")

        for i in range(2, n):
            lefts = self.members(i - 1, spec)
            rights = self.members(n - i, spec)
            for l in lefts:
                for r in rights:
                    for choice in choices:
                        emit(combine(l, r, choice), f"max at position {i}, {choice.value}")

        logger.debug(f"Constructive class={spec} n={n}: {len(produced)} members")
        return tuple(produced)

    def preimages(self, n: int, spec: ClassSpec) -> PreimageSet:
        self._rule(spec)
        check_size(n, "constructive generation", self.limit, "a_n grows like 4.83^n; use the recurrence")
        return PreimageSet(n=n, spec=spec, members=self.members(n, spec), method=Method.CONSTRUCTIVE)

    def clear(self) -> None:
        self._memo.clear()


# Global generator instance
constructive_generator = ConstructiveGenerator()


def constructive_preimages(n: int, spec: ClassSpec) -> PreimageSet:
    """s^{-1}(Av_n(spec)) built by the recursive construction"""
    return constructive_generator.preimages(n, spec)
