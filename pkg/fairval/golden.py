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

"""Comparison of engine output with the printed golden tables."""
from collections import namedtuple

import toml

from fairval.core.quarter import Quarter
from fairval.math import mc, is_close


DCF_ROW_FIELDS = ['revenue', 'workforce_expenses', 'net_income', 'pv']


class Erratum(namedtuple('Erratum', ['asset', 'table', 'field', 'index', 'printed', 'corrected', 'note'])):
    __slots__ = ()

    @property
    def location(self):
        if self.index is None:
            return '{}.{}'.format(self.table, self.field)
        return '{}.{}[{}]'.format(self.table, self.field, self.index)


class KnownDeviation(namedtuple('KnownDeviation', ['asset', 'table', 'field', 'note'])):
    """A documented, expected deviation from the printed tables.

    A missing `asset` matches every asset. `field` matches a check field
    or, for row fields, its name without index.
    """
    __slots__ = ()

    def matches(self, check):
        if self.asset is not None and self.asset != check.asset:
            return False
        return self.table == check.table and self.field == check.field.split('[')[0]


class Check(namedtuple('Check', ['asset', 'table', 'field', 'expected', 'actual', 'tolerance', 'relative'])):
    """Comparison of a golden value with the engine value.

    Numeric checks pass when the absolute difference is within `tolerance`,
    or within `tolerance` times the expected value if `relative`. Other
    values must be equal.
    """
    __slots__ = ()

    @property
    def difference(self):
        if _is_number(self.expected) and _is_number(self.actual):
            return self.actual - self.expected
        return None

    @property
    def relative_difference(self):
        difference = self.difference
        if difference is None or self.expected == 0:
            return None
        return difference / abs(self.expected)

    @property
    def flagged(self):
        if self.actual is None:
            return True
        if not _is_number(self.expected):
            return self.expected != self.actual
        if self.relative:
            return not is_close(self.actual, self.expected, rtol=self.tolerance)
        return not is_close(self.actual, self.expected, atol=self.tolerance)


class IdentityCheck(namedtuple('IdentityCheck', ['asset', 'source', 'parts_sum', 'total', 'tolerance'])):
    """Sum of discounted cash flows plus discounted terminal value against total PV."""
    __slots__ = ()

    @property
    def holds(self):
        return abs(self.parts_sum - self.total) <= self.tolerance + mc.epsilon


class GoldenTables(object):
    def __init__(self, dcf=None, history=None, errata=None, known_deviations=None):
        self.dcf = dcf or {}
        self.history = history or {}
        self.errata = errata or []
        self.known_deviations = known_deviations or []

    def errata_of(self, asset_id):
        return [e for e in self.errata if e.asset == asset_id]

    def known_deviation(self, check):
        """Return the known deviation explaining `check`, or None."""
        for known in self.known_deviations:
            if known.matches(check):
                return known
        return None


def load_golden(stream):
    """Load golden tables from TOML `stream`."""
    document = toml.loads(stream.read())
    errata = [
        Erratum(
            asset=entry['asset'],
            table=entry['table'],
            field=entry['field'],
            index=entry.get('index'),
            printed=entry['printed'],
            corrected=entry['corrected'],
            note=entry.get('note', ''),
        )
        for entry in document.get('erratum', [])
    ]
    known_deviations = [
        KnownDeviation(
            asset=entry.get('asset'),
            table=entry['table'],
            field=entry['field'],
            note=entry['note'],
        )
        for entry in document.get('known_deviation', [])
    ]
    history = {}
    for asset_id, entry in document.get('history', {}).items():
        history[asset_id] = dict(entry)
        history[asset_id]['start'] = Quarter.parse(entry['start'])
    return GoldenTables(
        dcf={k: dict(v) for k, v in document.get('dcf', {}).items()},
        history=history,
        errata=errata,
        known_deviations=known_deviations,
    )


def printed_identity(golden, tolerance=None):
    """Check sum of PV cashflows plus PV terminal equals total PV on the
    golden tables themselves."""
    if tolerance is None:
        tolerance = mc.identity_tolerance
    return [
        IdentityCheck(
            asset_id,
            'printed',
            sum(entry['pv']) + entry['pv_terminal'],
            entry['total_pv'],
            tolerance,
        )
        for asset_id, entry in golden.dcf.items()
    ]


def engine_identity(result, tolerance=None):
    if tolerance is None:
        tolerance = mc.identity_tolerance
    return IdentityCheck(
        result.asset_id,
        'engine',
        sum(row.pv for row in result.rows) + result.pv_terminal,
        result.total_pv,
        tolerance,
    )


def compare_dcf(golden, result, is_token):
    """Compare a `DcfResult` with its golden table.

    Token amounts use the token tolerance. Equity rows use the equity
    tolerance, their PV rows and totals are compared relatively since the
    printed discount rates are rounded.
    """
    entry = golden.dcf.get(result.asset_id)
    if entry is None:
        return []
    asset_id = result.asset_id
    if is_token:
        amount_tol, pv_tol, pv_relative = mc.token_tolerance, mc.token_tolerance, False
    else:
        amount_tol, pv_tol, pv_relative = mc.equity_tolerance, mc.pv_relative_tolerance, True

    checks = []
    for field in DCF_ROW_FIELDS:
        expected = entry.get(field, [])
        for index, value in enumerate(expected):
            actual = None
            if index < len(result.rows):
                actual = getattr(result.rows[index], field)
            if field == 'pv':
                tolerance, relative = pv_tol, pv_relative
            else:
                tolerance, relative = amount_tol, False
            checks.append(Check(
                asset_id, 'dcf', '{}[{}]'.format(field, index),
                value, actual, tolerance, relative,
            ))

    for field in ['pv_terminal', 'total_pv']:
        if field in entry:
            checks.append(Check(
                asset_id, 'dcf', field, entry[field], getattr(result, field),
                pv_tol, pv_relative,
            ))
    if 'fair_price' in entry:
        checks.append(Check(
            asset_id, 'dcf', 'fair_price', entry['fair_price'], result.fair_price,
            mc.token_tolerance, False,
        ))
    if 'market_price' in entry:
        checks.append(Check(
            asset_id, 'dcf', 'market_price', entry['market_price'], result.market_price,
            mc.token_tolerance, False,
        ))
    if 'verdict' in entry:
        checks.append(Check(
            asset_id, 'dcf', 'verdict', entry['verdict'], result.verdict.value,
            None, False,
        ))
    return checks


def compare_history(golden, history, is_token):
    """Compare an `EarningsHistory` with its golden row."""
    entry = golden.history.get(history.asset)
    if entry is None:
        return []
    amount_tol = mc.token_tolerance if is_token else mc.equity_tolerance
    checks = []
    quarter = entry['start']
    for value in entry.get('earnings', []):
        row = history.row(quarter)
        actual = row.earnings if row is not None else None
        checks.append(Check(
            history.asset, 'history', 'earnings[{}]'.format(quarter),
            value, actual, amount_tol, False,
        ))
        quarter = quarter.next()
    if 'cqgr' in entry:
        tolerance = mc.token_tolerance if is_token else mc.cqgr_tolerance
        checks.append(Check(
            history.asset, 'history', 'cqgr', entry['cqgr'], history.cqgr,
            tolerance, False,
        ))
    return checks


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)
