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

"""Token, firm and registry files ingest."""

__all__ = [
    'ParseReport', 'Diagnostic', 'DailyTokenMetrics', 'QuarterlyFundamentals',
    'parse_token_daily', 'serialize_token_daily', 'parse_firm_quarterly',
    'serialize_firm_quarterly', 'read_registry', 'load_registry',
    'dump_registry',
]

from .report import ParseReport, Diagnostic
from .token import DailyTokenMetrics, parse_token_daily, serialize_token_daily
from .firm import (
    QuarterlyFundamentals,
    parse_firm_quarterly,
    serialize_firm_quarterly,
)
from .registry_file import read_registry, load_registry, dump_registry
