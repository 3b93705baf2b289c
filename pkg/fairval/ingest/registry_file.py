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

"""Asset registry file.

The registry is a TOML document with an optional `[assumptions]` table and
one `[[asset]]` table per asset::

    [assumptions]
    revenue_growth = 0.05
    perpetual_growth = 0.0239

    [[asset]]
    id = "UNI"
    name = "Uniswap"
    kind = "Token"
    sector = "DEX"
    supply = 460050000.0
    spot_price = 5.0
    spot_date = 2022-06-30

    [asset.discounting]
    rate = 0.25

Equities may use `beta`, `cost_of_debt`, `tax_rate`, `equity`, `debt` and
optionally `market_return` in `[asset.discounting]` instead of `rate`.
"""
import toml

from fairval.core.assumptions import Assumptions
from fairval.core.asset import AssetRecord, FixedDiscount, WaccDiscount
from fairval.error import FairvalError, RegistryError


ASSET_KEYS = {
    'id', 'name', 'kind', 'sector', 'supply', 'spot_price', 'spot_date',
    'discounting', 'workforce_share', 'base_revenue', 'data',
}

_REQUIRED_KEYS = ['id', 'kind', 'sector', 'supply', 'spot_price', 'spot_date', 'discounting']

_WACC_KEYS = ['beta', 'cost_of_debt', 'tax_rate', 'equity', 'debt']


def read_registry(stream, defaults=None):
    """Read registry from `stream`, collecting problems instead of raising.

    Parameters
    ----------
    stream : file-like
        TOML text
    defaults : Assumptions, optional
        values for keys missing from the `[assumptions]` table

    Returns
    -------
    (list of AssetRecord, Assumptions, list of (str or None, str))
        valid records in file order, assumptions and problems
    """
    if defaults is None:
        defaults = Assumptions()
    problems = []
    try:
        document = toml.loads(stream.read())
    except toml.TomlDecodeError as ex:
        return [], defaults, [(None, 'invalid registry: {}'.format(ex))]

    for key in document:
        if key not in ('assumptions', 'asset'):
            problems.append((None, 'unknown registry table "{}"'.format(key)))

    try:
        assumptions = defaults.with_overrides(**document.get('assumptions', {}))
    except (ValueError, TypeError) as ex:
        return [], defaults, problems + [(None, 'invalid assumptions: {}'.format(ex))]

    records = []
    seen = set()
    for index, entry in enumerate(document.get('asset', [])):
        asset_id = entry.get('id', '#{}'.format(index + 1))
        try:
            record = _build_record(entry, assumptions)
            rate = record.discount_rate
        except (FairvalError, ValueError, TypeError) as ex:
            problems.append((asset_id, str(ex)))
            continue
        if record.id in seen:
            problems.append((record.id, 'duplicate asset id'))
            continue
        if rate <= assumptions.perpetual_growth:
            problems.append((record.id, 'discount rate must exceed perpetual growth'))
            continue
        seen.add(record.id)
        records.append(record)
    return records, assumptions, problems


def load_registry(stream, defaults=None):
    """Load registry from `stream`.

    Raises
    ------
    RegistryError
        listing every problem found in the registry
    """
    records, assumptions, problems = read_registry(stream, defaults)
    if problems:
        raise RegistryError(problems)
    return records, assumptions


def _build_record(entry, assumptions):
    unknown = sorted(set(entry.keys()) - ASSET_KEYS)
    if unknown:
        raise ValueError('unknown key(s) {}'.format(', '.join(unknown)))
    missing = [key for key in _REQUIRED_KEYS if key not in entry]
    if missing:
        raise ValueError('missing key(s) {}'.format(', '.join(missing)))
    return AssetRecord(
        id=entry['id'],
        name=entry.get('name'),
        kind=entry['kind'],
        sector=entry['sector'],
        supply=entry['supply'],
        spot_price=entry['spot_price'],
        spot_date=entry['spot_date'],
        discounting=_build_discounting(entry['discounting'], assumptions),
        workforce_share=entry.get('workforce_share'),
        base_revenue=entry.get('base_revenue'),
        data=entry.get('data'),
    )


def _build_discounting(table, assumptions):
    if not isinstance(table, dict):
        raise ValueError('discounting must be a table')
    if 'rate' in table:
        if len(table) != 1:
            raise ValueError('fixed discounting accepts only "rate"')
        return FixedDiscount(table['rate'])
    unknown = sorted(set(table.keys()) - set(_WACC_KEYS) - {'market_return'})
    if unknown:
        raise ValueError('unknown discounting key(s) {}'.format(', '.join(unknown)))
    missing = [key for key in _WACC_KEYS if key not in table]
    if missing:
        raise ValueError('missing discounting key(s) {}'.format(', '.join(missing)))
    return WaccDiscount(
        beta=table['beta'],
        market_return=table.get('market_return', assumptions.market_return),
        cost_of_debt=table['cost_of_debt'],
        tax_rate=table['tax_rate'],
        equity=table['equity'],
        debt=table['debt'],
    )


def dump_registry(records, assumptions):
    """Serialize `records` and `assumptions` to registry TOML text."""
    document = {
        'assumptions': assumptions._asdict(),
        'asset': [_record_to_dict(record) for record in records],
    }
    return toml.dumps(document)


def _record_to_dict(record):
    entry = {
        'id': record.id,
        'name': record.name,
        'kind': record.kind.value,
        'sector': record.sector.value,
        'supply': record.supply,
        'spot_price': record.spot_price,
        'spot_date': record.spot_date,
        'workforce_share': record.workforce_share,
    }
    if record.base_revenue is not None:
        entry['base_revenue'] = record.base_revenue
    if record.data is not None:
        entry['data'] = record.data
    entry['discounting'] = dict(record.discounting._asdict())
    return entry
