"""
Exact counting sequences and the generating-function checks

Coefficients always come from exact integer recurrences; floating point is
confined to the analytic cross-checks against the closed form
A(z) = (1 - 2z - sqrt(1 - 4z - 4z^2)) / (4z).
"""
import logging
import math
from fractions import Fraction
from typing import List

from boolcat.core.errors import DomainError
from boolcat.models.dto import CountSequence, SequenceKind, SeriesPoint

logger = logging.getLogger(__name__)


def boolean_catalan(N: int) -> CountSequence:
    """
    a_0..a_N with a_0 = 0, a_1 = 1 and
    a_n = 2 a_{n-1} + 2 sum_{i=2}^{n-1} a_{i-1} a_{n-i}
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    a = [0] * (N + 1)
    if N >= 1:
        a[1] = 1
    for n in range(2, N + 1):
        a[n] = 2 * a[n - 1] + 2 * sum(a[i - 1] * a[n - i] for i in range(2, n))
    return CountSequence(kind=SequenceKind.BOOLEAN_CATALAN, values=a)


def catalan(N: int) -> CountSequence:
    """C_0..C_N with C_n = binom(2n, n) / (n + 1)"""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    values = [math.comb(2 * n, n) // (n + 1) for n in range(N + 1)]
    return CountSequence(kind=SequenceKind.CATALAN, values=values)


def power2(N: int) -> CountSequence:
    """|Av_n(132,312)|: 1 for the empty permutation, 2^{n-1} for n >= 1"""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    values = [1] + [2 ** (n - 1) for n in range(1, N + 1)]
    return CountSequence(kind=SequenceKind.POWER2, values=values)


def measured(values: List[int]) -> CountSequence:
    return CountSequence(kind=SequenceKind.MEASURED, values=list(values))


def oeis_a071356(N: int) -> List[int]:
    """a_1..a_N, i.e. the OEIS entry A071356 read with its index shifted by one"""
    return boolean_catalan(N).values[1:]


def coefficients_from_functional_equation(N: int) -> CountSequence:
    """
    Iterate A <- z + 2zA + 2zA^2 on integer power series truncated at z^N

    Each step fixes at least one more coefficient, so N steps reach a_N.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    A = [0] * (N + 1)
    for _ in range(N):
        square = _truncated_product(A, A, N)
        nxt = [0] * (N + 1)
        if N >= 1:
            nxt[1] = 1
        for k in range(1, N + 1):
            nxt[k] += 2 * A[k - 1] + 2 * square[k - 1]
        A = nxt
    return CountSequence(kind=SequenceKind.MEASURED, values=A)


def _truncated_product(f: List[int], g: List[int], N: int) -> List[int]:
    out = [0] * (N + 1)
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for j in range(N + 1 - i):
            out[i + j] += fi * g[j]
    return out


# ---------------------------------------------------------------------------
# Analytic checks
# ---------------------------------------------------------------------------

def radius_of_convergence() -> float:
    """Positive root of 1 - 4z - 4z^2, i.e. (sqrt(2) - 1) / 2"""
    return (math.sqrt(2.0) - 1.0) / 2.0


def _check_domain(z: float) -> None:
    radius = radius_of_convergence()
    if not 0.0 < z < radius:
        raise DomainError(f"z={z} is outside the open interval (0, {radius:.10f})")


def closed_form(z: float) -> float:
    _check_domain(z)
    return (1.0 - 2.0 * z - math.sqrt(1.0 - 4.0 * z - 4.0 * z * z)) / (4.0 * z)


def series_partial_sum(z: float, N: int) -> SeriesPoint:
    """sum_{n <= N} a_n z^n next to closed_form(z)"""
    _check_domain(z)
    a = boolean_catalan(N)
    # a_n overflows a float past n = 457; sum exactly and round once
    x = Fraction(z)
    partial = float(sum(value * x ** n for n, value in enumerate(a.values)))
    return SeriesPoint(z=z, N=N, partial_sum=partial, closed_form=closed_form(z))


def functional_equation_residual(z: float, N: int = 0) -> float:
    """|A - z - 2zA - 2zA^2| at A = closed_form(z); N is carried for reporting only"""
    A = closed_form(z)
    residual = abs(A - z - 2.0 * z * A - 2.0 * z * A * A)
    logger.debug(f"Functional equation residual at z={z} (N={N}): {residual:.3e}")
    return residual
