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

"""Valuation multiples engine."""

__all__ = [
    'Metric', 'revenue_multiple', 'net_asset_multiple', 'MultiplePoint',
    'MultipleSeries', 'build_series', 'SectorPair', 'SECTOR_PAIRS',
    'ComparisonRow', 'SectorComparison', 'compare_sector',
]

from .ratios import Metric, revenue_multiple, net_asset_multiple
from .series import MultiplePoint, MultipleSeries, build_series
from .comparison import (
    SectorPair,
    SECTOR_PAIRS,
    ComparisonRow,
    SectorComparison,
    compare_sector,
)
