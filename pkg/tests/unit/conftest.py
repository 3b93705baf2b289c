import datetime
import math
from pathlib import Path

import pytest
import hypothesis.strategies as st

from fairval.core import AssetRecord, FixedDiscount, Quarter, Sector, WaccDiscount
from fairval.ingest import DailyTokenMetrics, QuarterlyFundamentals


PUBLISHED_FIXTURES = Path(__file__).parent.parent / 'fixtures' / 'published'


@st.composite
def amounts(draw, min_value=0.0, max_value=1e6):
    return draw(st.floats(
        min_value=min_value, max_value=max_value,
        allow_nan=False, allow_infinity=False,
    ))


@st.composite
def cents(draw, min_value=0.0, max_value=1e6):
    """Draw amounts rounded to cents, as they appear in source CSV files."""
    count = draw(st.integers(min_value=math.ceil(min_value * 100), max_value=math.floor(max_value * 100)))
    return count / 100


@st.composite
def growth_endpoints(draw, max_decades=6):
    """Draw positive (start, end) with end / start within 10^±max_decades."""
    start = draw(amounts(min_value=1e-3, max_value=1e6))
    decades = draw(st.floats(min_value=-max_decades, max_value=max_decades))
    return start, start * 10.0 ** decades


@st.composite
def quarters(draw, min_year=1990, max_year=2100):
    year = draw(st.integers(min_value=min_year, max_value=max_year))
    index = draw(st.integers(min_value=1, max_value=4))
    return Quarter(year, index)


@st.composite
def quarterly_fundamentals(draw, max_size=12):
    """Draw fundamentals of distinct quarters, some with invalid denominators."""
    drawn = draw(st.lists(quarters(min_year=2015, max_year=2030), unique=True, max_size=max_size))
    nonzero = st.one_of(
        amounts(min_value=1e-3, max_value=1e6),
        amounts(min_value=1e-3, max_value=1e6).map(lambda x: -x),
    )
    result = []
    for quarter in drawn:
        revenue = draw(st.one_of(st.just(0.0), amounts(min_value=1e-3, max_value=1e6)))
        result.append(QuarterlyFundamentals(
            quarter,
            revenue,
            revenue,
            net_assets=draw(st.one_of(st.just(0.0), nonzero)),
            market_cap=draw(st.one_of(st.none(), amounts(min_value=1e-3, max_value=1e9))),
        ))
    return result


@st.composite
def daily_metrics(draw, max_size=60, amount=amounts):
    """Draw daily token metrics on distinct dates, amounts in USD."""
    dates = draw(st.lists(
        st.dates(min_value=datetime.date(2020, 1, 1), max_value=datetime.date(2022, 12, 31)),
        unique=True, min_size=1, max_size=max_size,
    ))
    return [
        DailyTokenMetrics(
            date=date,
            price=draw(amount(min_value=1e-2, max_value=1e4)),
            market_cap=draw(amount(min_value=1.0, max_value=1e10)),
            tvl=draw(amount(max_value=1e10)),
            protocol_revenue=draw(amount(max_value=1e7)),
            treasury=draw(amount(max_value=1e9)),
        )
        for date in dates
    ]


@st.composite
def firm_quarters(draw, max_size=12):
    """Draw firm fundamentals of distinct quarters, amounts in USD millions."""
    drawn = draw(st.lists(
        quarters(min_year=2000, max_year=2030), unique=True, min_size=1, max_size=max_size,
    ))
    return [
        QuarterlyFundamentals(
            quarter=quarter,
            revenue=draw(cents(max_value=1e6)),
            earnings=draw(cents(min_value=-1e5, max_value=1e5)),
            total_assets=draw(cents(max_value=1e7)),
            total_liabilities=draw(cents(max_value=1e7)),
            market_cap=draw(cents(max_value=1e7)),
        )
        for quarter in drawn
    ]


def _steps(low, high, step):
    """Draw multiples of `step` in [low, high] that print without exponent."""
    return st.integers(
        min_value=round(low / step), max_value=round(high / step),
    ).map(lambda n: round(n * step, 6))


@st.composite
def asset_records(draw, max_size=8):
    """Draw registry records with distinct ids and valid discounting."""
    ids = draw(st.lists(
        st.text(alphabet='ABCDEFGHIJKLMNOPQRSTUVWXYZ', min_size=1, max_size=5),
        unique=True, min_size=1, max_size=max_size,
    ))
    records = []
    for asset_id in ids:
        sector = draw(st.sampled_from(list(Sector)))
        if sector.kind.is_token():
            discounting = FixedDiscount(draw(_steps(0.03, 0.5, 0.0001)))
        else:
            discounting = WaccDiscount(
                beta=draw(_steps(0.5, 2.0, 0.01)),
                market_return=0.1,
                cost_of_debt=draw(_steps(0.05, 0.1, 0.0001)),
                tax_rate=draw(_steps(0.0, 0.4, 0.01)),
                equity=draw(cents(min_value=1.0, max_value=1e9)),
                debt=draw(cents(max_value=1e9)),
            )
        records.append(AssetRecord(
            id=asset_id,
            name=draw(st.one_of(st.none(), st.just('{} Protocol'.format(asset_id)))),
            kind=sector.kind,
            sector=sector,
            supply=draw(cents(min_value=1.0, max_value=1e12)),
            spot_price=draw(cents(max_value=1e5)),
            spot_date=draw(st.dates(
                min_value=datetime.date(2015, 1, 1), max_value=datetime.date(2030, 12, 31),
            )),
            discounting=discounting,
            workforce_share=draw(st.one_of(st.none(), _steps(0.0, 0.5, 0.01))),
            base_revenue=draw(st.one_of(st.none(), cents(max_value=1e6))),
            data=draw(st.one_of(st.none(), st.just('custom/{}.csv'.format(asset_id)))),
        ))
    return records


@st.composite
def discount_and_growth(draw):
    """Draw (r, g) with r > g."""
    g = draw(st.floats(min_value=0.0, max_value=0.2))
    spread = draw(st.floats(min_value=0.01, max_value=0.5))
    return g + spread, g


def create_token(asset_id='UNI', sector='DEX', supply=460050000.0,
                 spot_price=5.0, rate=0.25, **kwargs):
    return AssetRecord(
        id=asset_id,
        name=kwargs.pop('name', asset_id),
        kind='Token',
        sector=sector,
        supply=supply,
        spot_price=spot_price,
        spot_date=kwargs.pop('spot_date', datetime.date(2022, 6, 30)),
        discounting=FixedDiscount(rate),
        **kwargs
    )


def create_firm(asset_id='ICE', sector='Exchange', supply=559e6,
                spot_price=94.04, rate=0.1042, **kwargs):
    return AssetRecord(
        id=asset_id,
        name=kwargs.pop('name', asset_id),
        kind='Equity',
        sector=sector,
        supply=supply,
        spot_price=spot_price,
        spot_date=kwargs.pop('spot_date', datetime.date(2022, 6, 30)),
        discounting=FixedDiscount(rate),
        **kwargs
    )


@pytest.fixture
def published_fixtures():
    return PUBLISHED_FIXTURES
