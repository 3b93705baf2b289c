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

"""Valuation multiples."""
from enum import Enum

from fairval.error import InvalidDenominatorError


class Metric(Enum):
    REVENUE_MULTIPLE = 'RevenueMultiple'
    NET_ASSET_MULTIPLE = 'NetAssetMultiple'

    @property
    def label(self):
        if self == Metric.REVENUE_MULTIPLE:
            return 'Market Cap / Revenue'
        return 'Market Cap / Net Assets'


def revenue_multiple(market_cap, revenue):
    """Market cap over revenue, revenue must be positive."""
    if revenue <= 0:
        raise InvalidDenominatorError('revenue must be positive, got {}'.format(revenue))
    return market_cap / revenue


def net_asset_multiple(market_cap, net_assets):
    """Market cap over net assets, net assets must be non zero."""
    if net_assets == 0:
        raise InvalidDenominatorError('net assets must be non zero')
    return market_cap / net_assets
