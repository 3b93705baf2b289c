# pylint: skip-file
import mpmath
import pytest
from hypothesis import given
import hypothesis.strategies as st

from fairval.dcf import project_cashflows, discount_rows, terminal_value
from fairval.error import DomainError, DivergentValuationError
from tests.unit.conftest import discount_and_growth


class TestProjectCashflows:
    def test_uniswap_net_income(self):
        rows = project_cashflows(108.68, 0.05, 0.20, 6)
        assert [r.t for r in rows] == list(range(6))
        assert [r.net_income for r in rows] == pytest.approx(
            [86.95, 91.30, 95.86, 100.65, 105.69, 110.97], abs=0.01
        )
        assert all(r.pv is None for r in rows)

    def test_ice_first_year(self):
        row = project_cashflows(5882.0, 0.05, 0.30, 6)[0]
        assert row.revenue == 5882.0
        assert row.workforce_expenses == pytest.approx(1764.6)
        assert row.net_income == pytest.approx(4117.4)

    def test_flat_projection(self):
        rows = project_cashflows(100.0, 0.0, 0.0, 3)
        assert [r.net_income for r in rows] == [100.0, 100.0, 100.0]

    @pytest.mark.parametrize('args', [
        (-1.0, 0.05, 0.2, 6),
        (100.0, 0.05, 0.2, 0),
        (100.0, 0.05, 1.0, 6),
    ])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            project_cashflows(*args)

    @given(
        st.floats(min_value=0.0, max_value=1e6),
        st.floats(min_value=-0.5, max_value=0.5),
        st.floats(min_value=0.0, max_value=0.99),
        st.integers(min_value=1, max_value=30),
    )
    def test_row_identities(self, base, growth, share, n):
        for row in project_cashflows(base, growth, share, n):
            assert row.revenue >= 0.0
            assert row.workforce_expenses == pytest.approx(share * row.revenue)
            assert row.net_income == pytest.approx(row.revenue - row.workforce_expenses)


class TestDiscountRows:
    def test_uniswap_pv(self):
        rows = discount_rows(project_cashflows(108.68, 0.05, 0.20, 6), 0.25)
        assert [r.pv for r in rows] == pytest.approx(
            [86.95, 73.04, 61.35, 51.54, 43.29, 36.36], abs=0.01
        )
        # printed rows are rounded to cents, their sum drifts from the exact total
        assert sum(r.pv for r in rows) == pytest.approx(352.5046, abs=1e-4)
        assert sum(r.pv for r in rows) == pytest.approx(352.53, abs=0.06)

    def test_compound_second_pv(self):
        rows = discount_rows(project_cashflows(13.25, 0.05, 0.20, 6), 0.25)
        assert rows[1].net_income == pytest.approx(11.13, abs=0.01)
        assert rows[1].pv == pytest.approx(8.90, abs=0.01)

    def test_first_year_is_not_discounted(self):
        rows = discount_rows(project_cashflows(100.0, 0.05, 0.3, 3), 0.4)
        assert rows[0].pv == rows[0].net_income

    @given(st.floats(min_value=0.0, max_value=1e6), st.integers(min_value=1, max_value=20))
    def test_zero_rate_is_identity(self, base, n):
        rows = discount_rows(project_cashflows(base, 0.05, 0.2, n), 0.0)
        assert [r.pv for r in rows] == [r.net_income for r in rows]

    def test_rate_domain(self):
        with pytest.raises(DomainError):
            discount_rows(project_cashflows(100.0, 0.05, 0.3, 3), -1.0)


class TestTerminalValue:
    def test_uniswap_terminal_value(self):
        assert terminal_value(110.97, 0.0239, 0.25) == pytest.approx(502.53, abs=0.01)

    def test_zero_growth_perpetuity(self):
        assert terminal_value(50.0, 0.0, 0.1) == pytest.approx(500.0)

    def test_zero_cash(self):
        assert terminal_value(0.0, 0.02, 0.1) == 0.0

    @pytest.mark.parametrize('g,r', [(0.1, 0.1), (0.2, 0.1)])
    def test_divergent(self, g, r):
        with pytest.raises(DivergentValuationError):
            terminal_value(100.0, g, r)

    def test_negative_cash(self):
        with pytest.raises(DomainError):
            terminal_value(-1.0, 0.02, 0.1)

    @given(st.floats(min_value=1e-6, max_value=1e9), discount_and_growth())
    def test_gordon_identity(self, cash, rates):
        r, g = rates
        tv = terminal_value(cash, g, r)
        lhs = mpmath.mpf(tv) * (mpmath.mpf(r) - mpmath.mpf(g))
        rhs = mpmath.mpf(cash) * (1 + mpmath.mpf(g))
        assert float(abs(lhs - rhs) / rhs) < 1e-12
