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

"""Quarterly firm fundamentals parser."""
import io
from collections import namedtuple

import pandas as pd

from fairval.core.quarter import Quarter
from fairval.ingest.report import ParseReport
from fairval.ingest.table import read_table, parse_number, format_number


FIRM_COLUMNS = [
    'quarter', 'revenue', 'pretax_income', 'total_assets',
    'total_liabilities', 'market_cap',
]


class QuarterlyFundamentals(namedtuple('QuarterlyFundamentals', [
        'quarter', 'revenue', 'earnings', 'total_assets', 'total_liabilities',
        'net_assets', 'market_cap', 'partial'])):
    """One quarter of firm or token aggregates, in USD millions.

    `total_assets` and `total_liabilities` are None for tokens, `partial`
    marks token quarters with fewer observations than calendar days.
    """
    __slots__ = ()

    def __new__(cls, quarter, revenue, earnings, total_assets=None,
                total_liabilities=None, net_assets=None, market_cap=None,
                partial=False):
        if net_assets is None and total_assets is not None and total_liabilities is not None:
            net_assets = total_assets - total_liabilities
        return super().__new__(
            cls, quarter, revenue, earnings, total_assets, total_liabilities,
            net_assets, market_cap, partial,
        )


def parse_firm_quarterly(stream, asset):
    """Parse a quarterly firm fundamentals CSV.

    Parameters
    ----------
    stream : file-like
        CSV text with header
        `quarter,revenue,pretax_income,total_assets,total_liabilities,market_cap`
    asset : str
        asset ticker, used in diagnostics

    Returns
    -------
    (list of QuarterlyFundamentals, ParseReport)
        accepted rows sorted by quarter and the parse report
    """
    report = ParseReport(asset)
    frame = read_table(stream, FIRM_COLUMNS, source=asset, report=report)

    accepted = {}
    for _, row in frame.iterrows():
        line = int(row['line'])
        try:
            quarter = Quarter.parse(row['quarter'])
        except ValueError:
            report.reject(line, 'invalid quarter "{}"'.format(row['quarter']))
            continue

        values = {}
        reason = None
        for column in FIRM_COLUMNS[1:]:
            value = parse_number(row[column])
            if value is None:
                reason = 'invalid {} "{}"'.format(column, row[column])
                break
            if value < 0 and column != 'pretax_income':
                reason = 'negative {}'.format(column)
                break
            values[column] = value

        if reason is None and quarter in accepted:
            reason = 'duplicate quarter {}'.format(quarter)

        if reason is not None:
            report.reject(line, reason)
            continue

        fundamentals = QuarterlyFundamentals(
            quarter=quarter,
            revenue=values['revenue'],
            earnings=values['pretax_income'],
            total_assets=values['total_assets'],
            total_liabilities=values['total_liabilities'],
            market_cap=values['market_cap'],
        )
        if fundamentals.net_assets < 0:
            report.note(line, 'negative net assets {}'.format(fundamentals.net_assets))
        accepted[quarter] = fundamentals
        report.accept()

    return [accepted[q] for q in sorted(accepted)], report


def serialize_firm_quarterly(series):
    """Serialize quarterly firm fundamentals to CSV text."""
    frame = pd.DataFrame(
        [
            [
                str(f.quarter),
                format_number(f.revenue),
                format_number(f.earnings),
                format_number(f.total_assets),
                format_number(f.total_liabilities),
                format_number(f.market_cap),
            ]
            for f in series
        ],
        columns=FIRM_COLUMNS,
    )
    out = io.StringIO()
    frame.to_csv(out, index=False, lineterminator='\n')
    return out.getvalue()
