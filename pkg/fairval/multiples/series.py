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

"""Time series of multiples."""
from collections import namedtuple

import numpy as np

from fairval.error import InvalidDenominatorError
from fairval.multiples.ratios import (
    Metric,
    revenue_multiple,
    net_asset_multiple,
)


class MultiplePoint(namedtuple('MultiplePoint', ['quarter', 'ratio', 'log10_ratio', 'flagged'])):
    """Multiple at a quarter. `log10_ratio` is None for non positive ratios."""
    __slots__ = ()


class OmittedPoint(namedtuple('OmittedPoint', ['quarter', 'reason'])):
    __slots__ = ()


class MultipleSeries(namedtuple('MultipleSeries', ['asset', 'sector', 'metric', 'points', 'omitted'])):
    """Ratio series of one asset, points sorted by quarter."""
    __slots__ = ()

    @property
    def quarters(self):
        return [p.quarter for p in self.points]

    def point(self, quarter):
        for point in self.points:
            if point.quarter == quarter:
                return point
        return None


def build_series(asset, quarters, metric):
    """Build the `metric` series of `asset` from its quarterly fundamentals.

    Quarters with a denominator outside the metric domain are omitted and
    recorded in the series `omitted` list.
    """
    metric = Metric(metric) if not isinstance(metric, Metric) else metric
    points = []
    omitted = []
    for fundamentals in sorted(quarters, key=lambda f: f.quarter):
        try:
            if fundamentals.market_cap is None:
                raise InvalidDenominatorError('market cap is absent')
            if metric == Metric.REVENUE_MULTIPLE:
                ratio = revenue_multiple(fundamentals.market_cap, fundamentals.revenue)
            else:
                if fundamentals.net_assets is None:
                    raise InvalidDenominatorError('net assets are absent')
                ratio = net_asset_multiple(fundamentals.market_cap, fundamentals.net_assets)
        except InvalidDenominatorError as ex:
            omitted.append(OmittedPoint(fundamentals.quarter, str(ex)))
            continue
        if ratio > 0:
            points.append(MultiplePoint(fundamentals.quarter, ratio, float(np.log10(ratio)), False))
        else:
            points.append(MultiplePoint(fundamentals.quarter, ratio, None, ratio < 0))
    return MultipleSeries(
        asset=asset.id,
        sector=asset.sector,
        metric=metric,
        points=points,
        omitted=omitted,
    )
