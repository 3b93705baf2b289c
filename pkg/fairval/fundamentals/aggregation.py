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

"""Quarterly aggregation of daily token metrics."""
import pandas as pd

from fairval.core.money import MILLION
from fairval.core.quarter import Quarter
from fairval.ingest.firm import QuarterlyFundamentals


QUARTER_END = 'quarter_end'
QUARTER_AVERAGE = 'quarter_average'


def aggregate_token_quarters(daily, market_cap_sampling=QUARTER_END):
    """Aggregate daily token metrics into calendar quarters.

    Parameters
    ----------
    daily : list of DailyTokenMetrics
        daily observations, amounts in USD
    market_cap_sampling : str
        `quarter_end` uses the last observation of the quarter,
        `quarter_average` the mean of the quarter observations

    Returns
    -------
    list of QuarterlyFundamentals
        one row per quarter with at least one observation, in USD millions
    """
    if market_cap_sampling not in (QUARTER_END, QUARTER_AVERAGE):
        raise ValueError('Invalid market cap sampling "{}"'.format(market_cap_sampling))
    if not daily:
        return []

    frame = pd.DataFrame(list(daily), columns=daily[0]._fields)
    frame['date'] = pd.to_datetime(frame['date'])
    frame = frame.sort_values('date')
    period = frame['date'].dt.to_period('Q')

    grouped = frame.groupby(period)
    market_cap = grouped['market_cap'].last()
    if market_cap_sampling == QUARTER_AVERAGE:
        market_cap = grouped['market_cap'].mean()
    summary = pd.DataFrame({
        'revenue': grouped['protocol_revenue'].sum(),
        'treasury': grouped['treasury'].last(),
        'market_cap': market_cap,
        'observations': grouped['date'].count(),
    })

    quarters = []
    for p, row in summary.iterrows():
        quarter = Quarter(int(p.year), int(p.quarter))
        revenue = float(row['revenue']) / MILLION
        quarters.append(QuarterlyFundamentals(
            quarter=quarter,
            revenue=revenue,
            earnings=revenue,
            net_assets=float(row['treasury']) / MILLION,
            market_cap=float(row['market_cap']) / MILLION,
            partial=int(row['observations']) < quarter.days,
        ))
    return quarters
