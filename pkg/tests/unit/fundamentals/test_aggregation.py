# pylint: skip-file
import datetime
import math

import pytest
from hypothesis import given

from fairval.core import Quarter
from fairval.core.money import MILLION
from fairval.fundamentals import aggregate_token_quarters
from fairval.fundamentals.aggregation import QUARTER_AVERAGE
from fairval.ingest import DailyTokenMetrics, parse_token_daily
from tests.unit.conftest import PUBLISHED_FIXTURES, daily_metrics


def _day(date, revenue, market_cap=1e9, treasury=1e6):
    return DailyTokenMetrics(
        date=date, price=1.0, market_cap=market_cap, tvl=1e9,
        protocol_revenue=revenue, treasury=treasury,
    )


def _days(start, count, **kwargs):
    return [
        _day(start + datetime.timedelta(days=i), **kwargs)
        for i in range(count)
    ]


@pytest.fixture(scope='module')
def crv_daily():
    with open(PUBLISHED_FIXTURES / 'tokens' / 'CRV.csv') as f:
        daily, _ = parse_token_daily(f, 'CRV')
    return daily


class TestAggregateTokenQuarters:
    def test_crv_quarterly_earnings(self, crv_daily):
        quarters = aggregate_token_quarters(crv_daily)
        assert [q.quarter for q in quarters] == [
            Quarter(2021, 3), Quarter(2021, 4), Quarter(2022, 1), Quarter(2022, 2),
        ]
        assert [q.earnings for q in quarters] == pytest.approx(
            [6.34, 19.8, 18.5, 12.2], abs=1e-4
        )
        assert all(q.revenue == q.earnings for q in quarters)
        assert not any(q.partial for q in quarters)

    def test_crv_quarter_end_values(self, crv_daily):
        last = aggregate_token_quarters(crv_daily)[-1]
        assert last.market_cap == pytest.approx(400.0)
        assert last.net_assets == pytest.approx(30.0)
        assert last.total_assets is None

    def test_market_cap_quarter_average(self):
        daily = (
            _days(datetime.date(2021, 1, 1), 45, revenue=1.0, market_cap=100e6) +
            _days(datetime.date(2021, 2, 15), 45, revenue=1.0, market_cap=300e6)
        )
        quarter_end, = aggregate_token_quarters(daily, 'quarter_end')
        quarter_average, = aggregate_token_quarters(daily, 'quarter_average')
        assert quarter_end.market_cap == pytest.approx(300.0)
        assert quarter_average.market_cap == pytest.approx(200.0)

    def test_revenue_is_summed_in_millions(self):
        daily = _days(datetime.date(2021, 7, 1), 92, revenue=68913.043478)
        quarter, = aggregate_token_quarters(daily)
        assert quarter.revenue == pytest.approx(6.34, abs=1e-5)

    def test_partial_quarter(self):
        daily = _days(datetime.date(2021, 1, 1), 30, revenue=1e6)
        quarter, = aggregate_token_quarters(daily)
        assert quarter.partial
        assert quarter.revenue == pytest.approx(30.0)

    def test_quarters_without_observations_are_absent(self):
        daily = (
            _days(datetime.date(2021, 1, 1), 90, revenue=1e6) +
            _days(datetime.date(2021, 7, 1), 92, revenue=1e6)
        )
        quarters = aggregate_token_quarters(daily)
        assert [q.quarter for q in quarters] == [Quarter(2021, 1), Quarter(2021, 3)]

    def test_empty_input(self):
        assert aggregate_token_quarters([]) == []

    def test_invalid_sampling(self):
        with pytest.raises(ValueError):
            aggregate_token_quarters([], 'quarter_median')


class TestAggregateTokenQuartersProperties:
    @given(daily_metrics())
    def test_revenue_is_conserved(self, daily):
        quarters = aggregate_token_quarters(daily)
        total = math.fsum(q.revenue for q in quarters) * MILLION
        expected = math.fsum(d.protocol_revenue for d in daily)
        assert total == pytest.approx(expected, rel=1e-9, abs=1e-6)

    @given(daily_metrics())
    def test_one_row_per_observed_quarter(self, daily):
        quarters = aggregate_token_quarters(daily)
        observed = sorted({Quarter.from_date(d.date) for d in daily})
        assert [q.quarter for q in quarters] == observed
        for q in quarters:
            count = sum(1 for d in daily if Quarter.from_date(d.date) == q.quarter)
            assert q.partial == (count < q.quarter.days)
            assert q.earnings == q.revenue

    @given(daily_metrics())
    def test_quarter_end_takes_last_observation(self, daily):
        last = {}
        for d in sorted(daily, key=lambda d: d.date):
            last[Quarter.from_date(d.date)] = d
        for q in aggregate_token_quarters(daily):
            assert q.market_cap == pytest.approx(last[q.quarter].market_cap / MILLION)
            assert q.net_assets == pytest.approx(last[q.quarter].treasury / MILLION)

    @given(daily_metrics())
    def test_quarter_average_is_bounded(self, daily):
        for q in aggregate_token_quarters(daily, QUARTER_AVERAGE):
            caps = [d.market_cap / MILLION for d in daily if Quarter.from_date(d.date) == q.quarter]
            assert min(caps) * (1 - 1e-12) <= q.market_cap <= max(caps) * (1 + 1e-12)
