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

"""Historical fundamentals: aggregation, growth and CQGR."""

__all__ = [
    'aggregate_token_quarters', 'qoq_growth', 'cqgr', 'HistoryRow',
    'EarningsHistory', 'build_history', 'annualize_first_half',
]

from .aggregation import aggregate_token_quarters
from .growth import qoq_growth, cqgr
from .history import (
    HistoryRow,
    EarningsHistory,
    build_history,
    annualize_first_half,
)
