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

"""Daily token metrics parser."""
import io
from collections import namedtuple

import pandas as pd

from fairval.ingest.report import ParseReport
from fairval.ingest.table import read_table, parse_number, format_number


TOKEN_COLUMNS = [
    'date', 'price', 'market_cap', 'tvl', 'protocol_revenue', 'treasury',
]

_AMOUNT_COLUMNS = TOKEN_COLUMNS[1:]


class DailyTokenMetrics(namedtuple('DailyTokenMetrics', TOKEN_COLUMNS)):
    """One day of protocol measures. Amounts in plain USD, revenue per day."""
    __slots__ = ()


def parse_token_daily(stream, asset):
    """Parse a daily token metrics CSV.

    Parameters
    ----------
    stream : file-like
        CSV text with header `date,price,market_cap,tvl,protocol_revenue,treasury`
    asset : str
        asset ticker, used in diagnostics

    Returns
    -------
    (list of DailyTokenMetrics, ParseReport)
        accepted rows sorted by date and the parse report
    """
    report = ParseReport(asset)
    frame = read_table(stream, TOKEN_COLUMNS, source=asset, report=report)
    dates = pd.to_datetime(frame['date'], format='%Y-%m-%d', errors='coerce')

    accepted = {}
    lines = {}
    for (_, row), date in zip(frame.iterrows(), dates):
        line = int(row['line'])
        if pd.isna(date):
            report.reject(line, 'invalid date "{}"'.format(row['date']))
            continue
        date = date.date()

        values = {}
        reason = None
        for column in _AMOUNT_COLUMNS:
            value = parse_number(row[column])
            if value is None:
                reason = 'invalid {} "{}"'.format(column, row[column])
                break
            if value < 0:
                if column == 'protocol_revenue':
                    reason = 'negative revenue'
                else:
                    reason = 'negative {}'.format(column)
                break
            values[column] = value

        if reason is None and date in accepted:
            reason = 'duplicate date {}'.format(date.isoformat())

        if reason is not None:
            report.reject(line, reason)
            continue

        accepted[date] = DailyTokenMetrics(date=date, **values)
        lines[date] = line
        report.accept()

    series = [accepted[date] for date in sorted(accepted)]
    for prev, curr in zip(series, series[1:]):
        gap = (curr.date - prev.date).days
        if gap > 1:
            report.note(
                lines[curr.date],
                'gap of {} days after {}'.format(gap - 1, prev.date.isoformat()),
            )
    return series, report


def serialize_token_daily(series):
    """Serialize daily token metrics to CSV text."""
    frame = pd.DataFrame(
        [
            [m.date.isoformat()] + [format_number(getattr(m, c)) for c in _AMOUNT_COLUMNS]
            for m in series
        ],
        columns=TOKEN_COLUMNS,
    )
    out = io.StringIO()
    frame.to_csv(out, index=False, lineterminator='\n')
    return out.getvalue()
