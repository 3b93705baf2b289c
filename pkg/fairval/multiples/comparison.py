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

"""Cross sector comparison of multiples."""
from collections import namedtuple

import numpy as np

from fairval.core.asset import Sector
from fairval.error import DomainError, EmptyIntersectionError


class SectorPair(namedtuple('SectorPair', ['defi', 'tradfi'])):
    __slots__ = ()

    @property
    def name(self):
        return '{}-{}'.format(self.defi.value, self.tradfi.value)


SECTOR_PAIRS = [
    SectorPair(Sector.DEX, Sector.EXCHANGE),
    SectorPair(Sector.PLF, Sector.BANK),
    SectorPair(Sector.YIELD_AGGREGATOR, Sector.ASSET_MANAGER),
]


class ComparisonRow(namedtuple('ComparisonRow', [
        'quarter', 'ratios', 'defi_median', 'tradfi_median', 'spread_ratio',
        'log10_spread'])):
    """Ratios of a quarter keyed by asset, with the sector medians spread."""
    __slots__ = ()


class SectorComparison(namedtuple('SectorComparison', [
        'pair', 'metric', 'defi_assets', 'tradfi_assets', 'rows'])):
    __slots__ = ()

    @property
    def assets(self):
        return self.defi_assets + self.tradfi_assets


def compare_sector(series, pair):
    """Compare DeFi and TradFi multiples of `pair` quarter by quarter.

    Only quarters where every series has a point are compared.

    Parameters
    ----------
    series : list of MultipleSeries
        series of the pair sectors, all with the same metric
    pair : SectorPair
        DeFi and TradFi sectors

    Returns
    -------
    SectorComparison
    """
    series = [s for s in series if s.sector in (pair.defi, pair.tradfi)]
    metrics = {s.metric for s in series}
    if len(metrics) > 1:
        raise DomainError('cannot compare series of different metrics')
    defi = sorted((s for s in series if s.sector == pair.defi), key=lambda s: s.asset)
    tradfi = sorted((s for s in series if s.sector == pair.tradfi), key=lambda s: s.asset)
    if not defi or not tradfi:
        raise DomainError('{} comparison needs series on both sides'.format(pair.name))

    shared = set(defi[0].quarters)
    for s in defi[1:] + tradfi:
        shared &= set(s.quarters)
    if not shared:
        raise EmptyIntersectionError('{} series share no quarter'.format(pair.name))

    rows = []
    for quarter in sorted(shared):
        ratios = {}
        for s in defi + tradfi:
            ratios[s.asset] = s.point(quarter).ratio
        defi_median = float(np.median([ratios[s.asset] for s in defi]))
        tradfi_median = float(np.median([ratios[s.asset] for s in tradfi]))
        spread_ratio = None
        log10_spread = None
        if tradfi_median != 0:
            spread_ratio = defi_median / tradfi_median
            if spread_ratio > 0:
                log10_spread = float(np.log10(spread_ratio))
        rows.append(ComparisonRow(
            quarter, ratios, defi_median, tradfi_median, spread_ratio, log10_spread,
        ))

    return SectorComparison(
        pair=pair,
        metric=series[0].metric,
        defi_assets=[s.asset for s in defi],
        tradfi_assets=[s.asset for s in tradfi],
        rows=rows,
    )
