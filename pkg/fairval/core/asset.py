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

"""Asset registry records and discounting configuration."""
import datetime
from enum import Enum
from collections import namedtuple

from fairval.error import DomainError
from fairval.core.money import ensure_finite


class AssetKind(Enum):
    TOKEN = 'Token'
    EQUITY = 'Equity'

    def is_token(self):
        return self == self.TOKEN

    def is_equity(self):
        return self == self.EQUITY

    @property
    def default_workforce_share(self):
        if self.is_token():
            return 0.20
        return 0.30


class Sector(Enum):
    DEX = 'DEX'
    PLF = 'PLF'
    YIELD_AGGREGATOR = 'YieldAggregator'
    EXCHANGE = 'Exchange'
    BANK = 'Bank'
    ASSET_MANAGER = 'AssetManager'

    @property
    def kind(self):
        if self in (Sector.DEX, Sector.PLF, Sector.YIELD_AGGREGATOR):
            return AssetKind.TOKEN
        return AssetKind.EQUITY

    def is_defi(self):
        return self.kind.is_token()


def parse_enum(enum_cls, value):
    """Look up `enum_cls` member by value, raise `DomainError` if unknown."""
    if isinstance(value, enum_cls):
        return value
    for member in enum_cls:
        if member.value == value:
            return member
    raise DomainError('Unknown {} "{}"'.format(enum_cls.__name__, value))


def _check_fraction(value, name):
    value = ensure_finite(value, name)
    if not 0.0 <= value < 1.0:
        raise DomainError('{} must be in [0, 1), got {}'.format(name, value))
    return value


class FixedDiscount(namedtuple('FixedDiscount', ['rate'])):
    """Fixed annual discount rate, in (0, 1)."""
    __slots__ = ()

    def __new__(cls, rate):
        rate = ensure_finite(rate, 'rate')
        if not 0.0 < rate < 1.0:
            raise DomainError('rate must be in (0, 1), got {}'.format(rate))
        return super().__new__(cls, rate)

    def resolve(self):
        return self.rate


class WaccDiscount(namedtuple('WaccDiscount', [
        'beta', 'market_return', 'cost_of_debt', 'tax_rate', 'equity', 'debt'])):
    """Weighted average cost of capital inputs.

    Parameters
    ----------
    beta : float
        industry beta, non negative
    market_return : float
        average yearly market return
    cost_of_debt : float
        pre-tax cost of debt
    tax_rate : float
        marginal tax rate
    equity : float
        equity value E, USD
    debt : float
        debt value D, USD
    """
    __slots__ = ()

    def __new__(cls, beta, market_return, cost_of_debt, tax_rate, equity, debt):
        beta = ensure_finite(beta, 'beta')
        if beta < 0:
            raise DomainError('beta must be non negative, got {}'.format(beta))
        market_return = _check_fraction(market_return, 'market_return')
        cost_of_debt = _check_fraction(cost_of_debt, 'cost_of_debt')
        tax_rate = _check_fraction(tax_rate, 'tax_rate')
        equity = ensure_finite(equity, 'equity')
        debt = ensure_finite(debt, 'debt')
        if equity < 0 or debt < 0:
            raise DomainError('equity and debt must be non negative')
        if equity + debt <= 0:
            raise DomainError('equity + debt must be positive')
        return super().__new__(
            cls, beta, market_return, cost_of_debt, tax_rate, equity, debt
        )

    @property
    def cost_of_equity(self):
        from fairval.dcf.wacc import cost_of_equity
        return cost_of_equity(self.beta, self.market_return)

    def resolve(self):
        from fairval.dcf.wacc import wacc
        return wacc(
            self.equity,
            self.debt,
            self.cost_of_equity,
            self.cost_of_debt,
            self.tax_rate,
        )


def resolve_discount_rate(cfg):
    """Resolve the annual discount rate of `cfg`.

    Parameters
    ----------
    cfg : FixedDiscount or WaccDiscount
        discounting configuration

    Returns
    -------
    float
        discount rate in (0, 1)
    """
    if not isinstance(cfg, (FixedDiscount, WaccDiscount)):
        raise DomainError('Invalid discounting configuration {!r}'.format(cfg))
    rate = cfg.resolve()
    if not 0.0 < rate < 1.0:
        raise DomainError('discount rate must be in (0, 1), got {}'.format(rate))
    return rate


class AssetRecord(namedtuple('AssetRecord', [
        'id', 'name', 'kind', 'sector', 'supply', 'spot_price', 'spot_date',
        'discounting', 'workforce_share', 'base_revenue', 'data'])):
    """An entry of the asset registry.

    `base_revenue` (USD millions) and `data` (path relative to the data
    directory) are optional.
    """
    __slots__ = ()

    def __new__(cls, id, name, kind, sector, supply, spot_price, spot_date,
                discounting, workforce_share=None, base_revenue=None, data=None):
        if not id or not isinstance(id, str):
            raise DomainError('asset id must be a non empty string')
        kind = parse_enum(AssetKind, kind)
        sector = parse_enum(Sector, sector)
        if sector.kind != kind:
            raise DomainError(
                'sector {} is not valid for kind {}'.format(sector.value, kind.value)
            )
        supply = ensure_finite(supply, 'supply')
        if supply <= 0:
            raise DomainError('supply must be positive, got {}'.format(supply))
        spot_price = ensure_finite(spot_price, 'spot_price')
        if spot_price < 0:
            raise DomainError('spot_price must be non negative, got {}'.format(spot_price))
        if isinstance(spot_date, str):
            try:
                spot_date = datetime.date.fromisoformat(spot_date)
            except ValueError:
                raise DomainError('Invalid spot_date "{}"'.format(spot_date))
        if isinstance(spot_date, datetime.datetime):
            spot_date = spot_date.date()
        if not isinstance(spot_date, datetime.date):
            raise DomainError('Invalid spot_date {!r}'.format(spot_date))
        if not isinstance(discounting, (FixedDiscount, WaccDiscount)):
            raise DomainError('Invalid discounting {!r}'.format(discounting))
        if workforce_share is None:
            workforce_share = kind.default_workforce_share
        workforce_share = _check_fraction(workforce_share, 'workforce_share')
        if base_revenue is not None:
            base_revenue = ensure_finite(base_revenue, 'base_revenue')
            if base_revenue < 0:
                raise DomainError('base_revenue must be non negative')
        if name is None:
            name = id
        return super().__new__(
            cls, id, name, kind, sector, supply, spot_price, spot_date,
            discounting, workforce_share, base_revenue, data,
        )

    @property
    def discount_rate(self):
        return resolve_discount_rate(self.discounting)

    @property
    def data_path(self):
        """Data file path relative to the data directory."""
        if self.data is not None:
            return self.data
        if self.kind.is_token():
            return 'tokens/{}.csv'.format(self.id)
        return 'firms/{}.csv'.format(self.id)
