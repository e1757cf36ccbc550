"""
Brute-force enumeration of stack-sorting preimages s^{-1}(Av_n(B))

S_n is walked in lexicographic order, split into blocks by a fixed-length
prefix. Blocks are independent and go to a process pool; partial counts are
merged by addition, so results do not depend on the worker count or the
prefix length.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import permutations
from multiprocessing import Pool
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from boolcat.core.config import get_settings
from boolcat.core.errors import LimitExceededError
from boolcat.core.perms import (
    ClassSpec,
    Permutation,
    avoidance_checker,
    avoids_all,
    permutations_of,
    stack_sort,
    stack_sort_machine,
)
from boolcat.models.dto import Method

logger = logging.getLogger(__name__)

settings = get_settings()


@dataclass(frozen=True)
class PreimageSet:
    """Permutations of length n whose stack-sorting image avoids spec"""

    n: int
    spec: ClassSpec
    members: Tuple[Permutation, ...]
    method: Method

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __contains__(self, p: object) -> bool:
        return p in self.as_set()

    def as_set(self) -> FrozenSet[Permutation]:
        return frozenset(self.members)

    def is_sound(self) -> bool:
        """Every member sorts into the class and no member repeats"""
        if len(self.as_set()) != len(self.members):
            return False
        return all(len(p) == self.n and avoids_all(stack_sort(p), self.spec) for p in self.members)


@dataclass(frozen=True)
class Census:
    """Counts gathered in one pass over S_n"""

    n: int
    preimage_counts: Dict[str, int] = field(default_factory=dict)
    class_counts: Dict[str, int] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Limits
# ---------------------------------------------------------------------------

def check_size(n: int, what: str, limit: int, hint: Optional[str] = None) -> None:
    if n < 1:
        raise ValueError(f"{what} needs n >= 1, got {n}")
    if n > limit:
        logger.warning(f"Refusing {what} for n={n} (limit {limit})")
        raise LimitExceededError(what, n, limit, hint)


def count_limit(allow_override: bool = False) -> int:
    return settings.brute_override_limit if allow_override else settings.brute_count_limit


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def brute_force(n: int, spec: ClassSpec, limit: Optional[int] = None) -> PreimageSet:
    """Collect s^{-1}(Av_n(spec)) in lexicographic order"""
    limit = settings.brute_set_limit if limit is None else limit
    check_size(n, "brute-force set collection", limit, "S_n is too large to store; use a count instead")
    check = avoidance_checker(spec)
    members = tuple(p for p in permutations_of(n) if check(stack_sort_machine(p)))
    logger.info(f"Brute force n={n} class={spec}: {len(members)} preimages")
    return PreimageSet(n=n, spec=spec, members=members, method=Method.BRUTE)


def brute_force_count(
    n: int,
    spec: ClassSpec,
    workers: Optional[int] = None,
    prefix_length: Optional[int] = None,
    allow_override: bool = False,
) -> int:
    """Count s^{-1}(Av_n(spec)) without storing members"""
    census = brute_force_census(
        n, [spec], workers=workers, prefix_length=prefix_length, allow_override=allow_override
    )
    return census.preimage_counts[spec.key]


def brute_force_census(
    n: int,
    image_specs: Sequence[ClassSpec],
    class_specs: Sequence[ClassSpec] = (),
    workers: Optional[int] = None,
    prefix_length: Optional[int] = None,
    allow_override: bool = False,
) -> Census:
    """
    One pass over S_n counting |s^{-1}(Av_n(B))| for every B in image_specs
    and |Av_n(B)| for every B in class_specs
    """
    limit = count_limit(allow_override)
    hint = None if allow_override else f"n={settings.brute_override_limit} needs an explicit override"
    check_size(n, "brute-force count", limit, hint)

    workers = workers or settings.default_workers
    prefix_length = prefix_length or settings.brute_prefix_length
    image_specs = tuple(image_specs)
    class_specs = tuple(class_specs)

    tasks = [
        (n, prefix, image_specs, class_specs)
        for prefix in permutations(range(1, n + 1), min(prefix_length, n))
    ]
    logger.info(
        f"Census over S_{n}: {math.factorial(n):,} permutations in {len(tasks)} blocks, "
        f"{workers} worker(s)"
    )

    if workers == 1 or len(tasks) == 1:
        partials = [_census_block(task) for task in tasks]
    else:
        with Pool(processes=min(workers, len(tasks))) as pool:
            partials = pool.map(_census_block, tasks)

    image_totals = [sum(part[0][k] for part in partials) for k in range(len(image_specs))]
    class_totals = [sum(part[1][k] for part in partials) for k in range(len(class_specs))]
    return Census(
        n=n,
        preimage_counts={spec.key: total for spec, total in zip(image_specs, image_totals)},
        class_counts={spec.key: total for spec, total in zip(class_specs, class_totals)},
    )


def _census_block(
    task: Tuple[int, Tuple[int, ...], Tuple[ClassSpec, ...], Tuple[ClassSpec, ...]]
) -> Tuple[List[int], List[int]]:
    """Worker: counts for every permutation starting with the given prefix"""
    n, prefix, image_specs, class_specs = task
    image_checks = [avoidance_checker(spec) for spec in image_specs]
    class_checks = [avoidance_checker(spec) for spec in class_specs]
    image_counts = [0] * len(image_checks)
    class_counts = [0] * len(class_checks)

    used = set(prefix)
    rest = [value for value in range(1, n + 1) if value not in used]
    for tail in permutations(rest):
        p = prefix + tail
        for k, check in enumerate(class_checks):
            if check(p):
                class_counts[k] += 1
        if image_checks:
            image = stack_sort_machine(p)
            for k, check in enumerate(image_checks):
                if check(image):
                    image_counts[k] += 1
    return image_counts, class_counts
