"""
Exact counting sequences and the analytic cross-checks
"""
import json
import math

import pytest

from boolcat.core.counting import (
    boolean_catalan,
    catalan,
    closed_form,
    coefficients_from_functional_equation,
    functional_equation_residual,
    measured,
    oeis_a071356,
    power2,
    radius_of_convergence,
    series_partial_sum,
)
from boolcat.core.errors import DomainError
from boolcat.models.dto import SequenceKind

pytestmark = pytest.mark.unit

A071356 = [1, 2, 6, 20, 72, 272, 1064, 4272, 17504, 72896, 307648, 1312896]


class TestBooleanCatalan:

    def test_first_values(self):
        assert boolean_catalan(7).values == [0, 1, 2, 6, 20, 72, 272, 1064]

    def test_kind_and_length(self):
        a = boolean_catalan(12)
        assert a.kind == SequenceKind.BOOLEAN_CATALAN
        assert a.N == 12
        assert len(a) == 13
        assert a[12] == 1312896

    def test_shifted_oeis_entry(self):
        assert oeis_a071356(12) == A071356

    def test_n_zero(self):
        assert boolean_catalan(0).values == [0]

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            boolean_catalan(-1)

    def test_large_values_are_exact(self):
        a = boolean_catalan(60)
        assert isinstance(a[60], int)
        assert a[60] > 2 ** 63
        # the recurrence holds exactly far past float precision
        n = 60
        expected = 2 * a[n - 1] + 2 * sum(a[i - 1] * a[n - i] for i in range(2, n))
        assert a[n] == expected

    @pytest.mark.parametrize("N", [1, 5, 12, 25])
    def test_functional_equation_coefficients_match(self, N):
        assert coefficients_from_functional_equation(N).values == boolean_catalan(N).values

    def test_functional_equation_n_zero(self):
        assert coefficients_from_functional_equation(0).values == [0]


class TestComparisonSequences:

    def test_catalan(self):
        assert catalan(10).values == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

    def test_power2(self):
        assert power2(6).values == [1, 1, 2, 4, 8, 16, 32]

    def test_measured_copies_input(self):
        values = [0, 1, 2]
        seq = measured(values)
        values.append(6)
        assert seq.values == [0, 1, 2]
        assert seq.kind == SequenceKind.MEASURED

    def test_boolean_catalan_exceeds_catalan(self):
        a = boolean_catalan(12)
        c = catalan(12)
        for n in range(3, 13):
            assert a[n] > c[n]


class TestExport:

    def test_csv(self):
        assert boolean_catalan(3).to_csv() == "n,value\n0,0\n1,1\n2,2\n3,6\n"

    def test_json_uses_decimal_strings(self):
        decoded = json.loads(boolean_catalan(4).to_json())
        assert decoded == ["0", "1", "2", "6", "20"]

    def test_json_keeps_big_values_exact(self):
        a = boolean_catalan(80)
        assert int(json.loads(a.to_json())[80]) == a[80]


class TestAnalytic:

    def test_radius(self):
        assert radius_of_convergence() == pytest.approx(0.20710678118654752)
        r = radius_of_convergence()
        assert 1 - 4 * r - 4 * r * r == pytest.approx(0.0, abs=1e-12)

    def test_closed_form_value(self):
        assert closed_form(0.1) == pytest.approx(0.12917130661, rel=1e-9)

    @pytest.mark.parametrize("z", [0.0, -0.1, 0.21, 0.3])
    def test_domain_error_outside_interval(self, z):
        with pytest.raises(DomainError) as excinfo:
            closed_form(z)
        assert "0.2071" in str(excinfo.value)

    def test_partial_sum_domain_error(self):
        with pytest.raises(DomainError):
            series_partial_sum(0.25, 5)

    def test_partial_sum_value(self):
        point = series_partial_sum(0.1, 7)
        assert point.partial_sum == pytest.approx(0.1290984, rel=1e-12)
        assert point.N == 7
        assert point.gap == pytest.approx(abs(point.partial_sum - point.closed_form))

    def test_partial_sums_increase_toward_closed_form(self):
        gaps = [series_partial_sum(0.1, N).gap for N in range(0, 21)]
        for earlier, later in zip(gaps, gaps[1:]):
            assert later <= earlier
        sums = [series_partial_sum(0.1, N).partial_sum for N in range(0, 21)]
        assert all(s <= closed_form(0.1) + 1e-15 for s in sums)

    def test_empty_partial_sum(self):
        assert series_partial_sum(0.1, 0).partial_sum == 0.0

    def test_closed_form_near_the_radius(self):
        value = closed_form(0.2)
        assert 0.0 < value < 1.0

    def test_twelve_terms_are_close(self):
        assert series_partial_sum(0.1, 12).gap < 1e-3

    def test_partial_sum_converges(self):
        assert series_partial_sum(0.05, 40).gap < 1e-12

    @pytest.mark.parametrize("N", [457, 458, 500])
    def test_partial_sum_past_float_range(self, N):
        assert series_partial_sum(0.1, N).gap < 1e-12

    def test_terms_too_large_for_a_float(self):
        with pytest.raises(OverflowError):
            float(boolean_catalan(500)[500])
        assert series_partial_sum(0.1, 500).partial_sum == pytest.approx(closed_form(0.1), rel=1e-12)

    @pytest.mark.parametrize("z", [0.05, 0.1, 0.15])
    def test_functional_equation_residual(self, z):
        assert functional_equation_residual(z) < 1e-12

    def test_closed_form_is_the_series_near_zero(self):
        z = 1e-3
        expected = z + 2 * z ** 2 + 6 * z ** 3 + 20 * z ** 4 + 72 * z ** 5
        assert math.isclose(closed_form(z), expected, rel_tol=1e-9)
