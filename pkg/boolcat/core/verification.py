"""
Cross-verification of tree counts, brute-force and constructive preimage counts

For each n the sweep checks
    a_n = #trees = |s^{-1}(Av_n(132,312))| = |s^{-1}(Av_n(231,312))|
        = |s^{-1}(Av_n(132,231))| = constructive counts for the first two classes,
    |s^{-1}(Av_n(21))| = C_n and |Av_n(132,312)| = 2^{n-1}.
Row failures are recorded on the row; the report status is their conjunction.
"""
import logging
from typing import Dict, List, Optional, Tuple

from boolcat.core.cache import CountCache, open_cache
from boolcat.core.config import get_settings
from boolcat.core.constructive import constructive_preimages
from boolcat.core.counting import (
    boolean_catalan,
    catalan,
    coefficients_from_functional_equation,
    power2,
)
from boolcat.core.errors import LimitExceededError
from boolcat.core.perms import AV_21, AV_132_231, AV_132_312, AV_231_312, ClassSpec
from boolcat.core.preimage import brute_force, brute_force_census, count_limit
from boolcat.core.trees import count_trees
from boolcat.models.dto import Method, VerificationReport, VerificationRow, VerifyOptions
from boolcat.monitoring import monitor, monitor_performance

logger = logging.getLogger(__name__)

settings = get_settings()

# Classes whose preimages are counted by brute force, with the sequence they must match
IMAGE_SPECS: Tuple[ClassSpec, ...] = (AV_132_312, AV_231_312, AV_132_231, AV_21)
CONSTRUCTIVE_SPECS: Tuple[ClassSpec, ...] = (AV_132_312, AV_231_312)
CLASS_SIZE_SPEC = AV_132_312

CLASS_METHOD = "class"


def count_key(method: str, spec: ClassSpec) -> str:
    return f"{method}:{spec}"


@monitor_performance
def verify(max_n: int, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """Run the verification sweep for n = 1..max_n"""
    options = options or VerifyOptions(workers=settings.default_workers)
    limit = count_limit(options.allow_n12)
    if max_n < 1:
        raise ValueError(f"verification needs max_n >= 1, got {max_n}")
    if max_n > limit:
        raise LimitExceededError("verification", max_n, limit)

    a = boolean_catalan(max_n)
    c = catalan(max_n)
    p2 = power2(max_n)
    fe = coefficients_from_functional_equation(max_n)
    cache = open_cache(options.cache_path, options.use_cache)

    rows: List[VerificationRow] = []
    for n in range(1, max_n + 1):
        rows.append(_verify_row(n, a[n], c[n], p2[n], fe[n], cache, options))

    overall = "pass" if all(row.passed for row in rows) else "fail"
    logger.info(f"Verification 1..{max_n}: {overall}")
    return VerificationReport(rows=rows, overall=overall)


def _verify_row(
    n: int,
    a_n: int,
    catalan_n: int,
    power2_n: int,
    fe_n: int,
    cache: CountCache,
    options: VerifyOptions,
) -> VerificationRow:
    counts: Dict[str, int] = {}
    expected: Dict[str, int] = {}
    failures: List[str] = []

    with monitor.timed(f"verify n={n}") as watch:
        try:
            counts["functional_equation"] = fe_n
            expected["functional_equation"] = a_n
            if n <= settings.tree_generation_limit:
                counts["trees"] = count_trees(n)
                expected["trees"] = a_n

            for key, value in _brute_counts(n, cache, options).items():
                counts[key] = value
            for spec in IMAGE_SPECS:
                key = count_key(Method.BRUTE.value, spec)
                expected[key] = catalan_n if spec == AV_21 else a_n
            key = count_key(CLASS_METHOD, CLASS_SIZE_SPEC)
            expected[key] = power2_n

            for spec in CONSTRUCTIVE_SPECS:
                key = count_key(Method.CONSTRUCTIVE.value, spec)
                counts[key] = _constructive_count(n, spec, cache, options, failures)
                expected[key] = a_n
        except Exception as e:
            logger.error(f"Verification row n={n} failed: {e}")
            failures.append(f"error: {e}")

        for key, want in expected.items():
            got = counts.get(key)
            if got is not None and got != want:
                failures.append(f"{key}: {got} != {want}")

    if failures:
        logger.warning(f"Row n={n} failed: {'; '.join(failures)}")
    return VerificationRow(
        n=n,
        a_n=a_n,
        catalan_n=catalan_n,
        power2_n=power2_n,
        counts=counts,
        failures=failures,
        passed=not failures,
        millis=round(watch.millis, 3),
    )


def _brute_counts(n: int, cache: CountCache, options: VerifyOptions) -> Dict[str, int]:
    """Brute-force counts for n, from the cache where possible, else one census pass"""
    counts: Dict[str, int] = {}
    missing_images: List[ClassSpec] = []
    missing_classes: List[ClassSpec] = []

    for spec in IMAGE_SPECS:
        cached = cache.get_count(spec.key, n, Method.BRUTE.value)
        if cached is None:
            missing_images.append(spec)
        else:
            counts[count_key(Method.BRUTE.value, spec)] = cached
    cached = cache.get_count(CLASS_SIZE_SPEC.key, n, CLASS_METHOD)
    if cached is None:
        missing_classes.append(CLASS_SIZE_SPEC)
    else:
        counts[count_key(CLASS_METHOD, CLASS_SIZE_SPEC)] = cached

    if missing_images or missing_classes:
        census = brute_force_census(
            n,
            missing_images,
            missing_classes,
            workers=options.workers,
            allow_override=options.allow_n12,
        )
        for spec in missing_images:
            value = census.preimage_counts[spec.key]
            cache.set_count(spec.key, n, Method.BRUTE.value, value)
            counts[count_key(Method.BRUTE.value, spec)] = value
        for spec in missing_classes:
            value = census.class_counts[spec.key]
            cache.set_count(spec.key, n, CLASS_METHOD, value)
            counts[count_key(CLASS_METHOD, spec)] = value

    # fixed key order regardless of cache hits
    ordered = [count_key(Method.BRUTE.value, spec) for spec in IMAGE_SPECS]
    ordered.append(count_key(CLASS_METHOD, CLASS_SIZE_SPEC))
    return {key: counts[key] for key in ordered}


def _constructive_count(
    n: int,
    spec: ClassSpec,
    cache: CountCache,
    options: VerifyOptions,
    failures: List[str],
) -> int:
    compare_sets = options.check_sets and n <= min(
        settings.constructive_memo_cap, settings.brute_set_limit
    )
    if not compare_sets:
        cached = cache.get_count(spec.key, n, Method.CONSTRUCTIVE.value)
        if cached is not None:
            return cached

    built = constructive_preimages(n, spec)
    if compare_sets:
        brute = brute_force(n, spec)
        if built.as_set() != brute.as_set():
            only_built = len(built.as_set() - brute.as_set())
            only_brute = len(brute.as_set() - built.as_set())
            failures.append(
                f"sets differ for {spec}: {only_built} only constructive, {only_brute} only brute force"
            )
    cache.set_count(spec.key, n, Method.CONSTRUCTIVE.value, len(built))
    return len(built)
