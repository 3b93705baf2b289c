# Copyright 2022 The fairval Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Discounted cash flow valuation of an asset."""
from enum import Enum
from collections import namedtuple

from fairval.core.money import from_millions
from fairval.error import DomainError, DivergentValuationError
from fairval.dcf.projection import (
    project_cashflows,
    discount_rows,
    terminal_value,
)


DEFAULT_BAND = 0.10


class Verdict(Enum):
    OVERVALUED = 'Overvalued'
    FAIR = 'Fair'
    UNDERVALUED = 'Undervalued'


def verdict(fair_price, market_price, band=DEFAULT_BAND):
    """Compare market price to fair price.

    The ratio market/fair above 1 + band is Overvalued, below 1 - band is
    Undervalued, Fair otherwise. A non positive fair price is Overvalued
    whenever the market price is positive.
    """
    if not 0.0 <= band < 1.0:
        raise DomainError('band must be in [0, 1), got {}'.format(band))
    if fair_price <= 0:
        if market_price > 0:
            return Verdict.OVERVALUED
        return Verdict.FAIR
    ratio = market_price / fair_price
    if ratio > 1.0 + band:
        return Verdict.OVERVALUED
    if ratio < 1.0 - band:
        return Verdict.UNDERVALUED
    return Verdict.FAIR


class DcfResult(namedtuple('DcfResult', [
        'asset_id', 'rows', 'terminal_value_undiscounted', 'pv_terminal',
        'pv_cashflows', 'total_pv', 'supply', 'fair_price', 'market_price',
        'verdict', 'discount_rate', 'perpetual_growth'])):
    """Full projection of an asset. Amounts in USD millions, prices in USD."""
    __slots__ = ()

    @property
    def flagged(self):
        """Verdict reached by convention on a non positive fair price."""
        return self.fair_price <= 0

    @property
    def price_ratio(self):
        if self.fair_price <= 0:
            return None
        return self.market_price / self.fair_price


def value_asset(asset, base_revenue, assumptions, band=DEFAULT_BAND,
                discount_rate=None):
    """Value `asset` by discounting projected net income.

    Parameters
    ----------
    asset : AssetRecord
        the asset to value
    base_revenue : float
        first projected year revenue, USD millions
    assumptions : Assumptions
        growth, perpetual growth and horizon
    band : float
        verdict band
    discount_rate : float, optional
        overrides the rate resolved from the asset discounting

    Returns
    -------
    DcfResult
    """
    if discount_rate is None:
        discount_rate = asset.discount_rate
    g = assumptions.perpetual_growth
    if discount_rate <= g:
        raise DivergentValuationError(
            '{}: discount rate {} must exceed perpetual growth {}'.format(
                asset.id, discount_rate, g
            )
        )
    if asset.supply <= 0:
        raise DomainError('{}: supply must be positive'.format(asset.id))

    n = assumptions.horizon_years
    rows = project_cashflows(
        base_revenue,
        assumptions.revenue_growth,
        asset.workforce_share,
        n,
    )
    rows = discount_rows(rows, discount_rate)
    tv = terminal_value(rows[-1].net_income, g, discount_rate)
    # final row is at t = n - 1, the perpetuity starts one period later
    pv_terminal = tv / (1.0 + discount_rate) ** n
    pv_cashflows = sum(row.pv for row in rows)
    total_pv = pv_cashflows + pv_terminal
    fair_price = from_millions(total_pv) / asset.supply

    return DcfResult(
        asset_id=asset.id,
        rows=rows,
        terminal_value_undiscounted=tv,
        pv_terminal=pv_terminal,
        pv_cashflows=pv_cashflows,
        total_pv=total_pv,
        supply=asset.supply,
        fair_price=fair_price,
        market_price=asset.spot_price,
        verdict=verdict(fair_price, asset.spot_price, band),
        discount_rate=discount_rate,
        perpetual_growth=g,
    )
