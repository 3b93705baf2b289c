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

"""Historical earnings tables."""
from collections import namedtuple

from fairval.core.quarter import Quarter, quarter_range
from fairval.error import DomainError
from fairval.fundamentals.growth import qoq_growth, cqgr


class HistoryRow(namedtuple('HistoryRow', ['quarter', 'earnings', 'growth', 'partial'])):
    """Earnings of a quarter, None when the quarter is absent."""
    __slots__ = ()


class EarningsHistory(namedtuple('EarningsHistory', ['asset', 'rows', 'cqgr', 'cqgr_quarters'])):
    """Earnings history of an asset.

    `cqgr_quarters` is the (start, end) pair the CQGR was computed on, None
    with `cqgr`.
    """
    __slots__ = ()

    def row(self, quarter):
        for row in self.rows:
            if row.quarter == quarter:
                return row
        return None


def build_history(asset, quarters, start=None, end=None):
    """Build the earnings history of `asset`.

    Parameters
    ----------
    asset : AssetRecord or str
        asset or ticker
    quarters : list of QuarterlyFundamentals
        fundamentals sorted by quarter
    start : Quarter, optional
        first rendered quarter, defaults to the first observed one
    end : Quarter, optional
        last rendered quarter, defaults to the last observed one

    Returns
    -------
    EarningsHistory
    """
    asset_id = getattr(asset, 'id', asset)
    by_quarter = {f.quarter: f for f in quarters}
    if not by_quarter:
        return EarningsHistory(asset_id, [], None, None)

    if start is None:
        start = min(by_quarter)
    if end is None:
        end = max(by_quarter)

    rows = []
    prev = None
    for quarter in quarter_range(start, end):
        fundamentals = by_quarter.get(quarter)
        if fundamentals is None:
            rows.append(HistoryRow(quarter, None, None, False))
            prev = None
            continue
        growth = None
        if prev is not None and prev.earnings != 0:
            growth = qoq_growth(prev.earnings, fundamentals.earnings)
        rows.append(HistoryRow(quarter, fundamentals.earnings, growth, fundamentals.partial))
        prev = fundamentals

    observed = [
        f for f in sorted(by_quarter.values(), key=lambda f: f.quarter)
        if start <= f.quarter <= end and f.earnings != 0
    ]
    rate = None
    endpoints = None
    if len(observed) >= 2:
        first, last = observed[0], observed[-1]
        try:
            rate = cqgr(first.earnings, last.earnings, last.quarter - first.quarter)
            endpoints = (first.quarter, last.quarter)
        except DomainError:
            rate = None
    return EarningsHistory(asset_id, rows, rate, endpoints)


def annualize_first_half(quarters, year):
    """Annualized revenue as twice the first half earnings of `year`."""
    by_quarter = {f.quarter: f for f in quarters}
    try:
        first = by_quarter[Quarter(year, 1)]
        second = by_quarter[Quarter(year, 2)]
    except KeyError:
        raise DomainError('first half of {} is not fully observed'.format(year))
    return 2.0 * (first.earnings + second.earnings)
