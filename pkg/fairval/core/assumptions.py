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

"""Valuation assumptions shared by every asset of a run."""
from collections import namedtuple

from fairval.error import DomainError
from fairval.core.money import ensure_finite


DEFAULT_REVENUE_GROWTH = 0.05
DEFAULT_PERPETUAL_GROWTH = 0.0239
DEFAULT_HORIZON_YEARS = 6
DEFAULT_MARKET_RETURN = 0.10


class Assumptions(namedtuple('Assumptions', [
        'revenue_growth', 'perpetual_growth', 'horizon_years', 'market_return'])):
    """Global assumption ledger.

    Parameters
    ----------
    revenue_growth : float
        annual revenue growth fraction
    perpetual_growth : float
        perpetual growth fraction g, in [0, 1)
    horizon_years : int
        number of projected years, at least 1
    market_return : float
        average yearly market return, in [0, 1)
    """
    __slots__ = ()

    def __new__(cls, revenue_growth=DEFAULT_REVENUE_GROWTH,
                perpetual_growth=DEFAULT_PERPETUAL_GROWTH,
                horizon_years=DEFAULT_HORIZON_YEARS,
                market_return=DEFAULT_MARKET_RETURN):
        revenue_growth = ensure_finite(revenue_growth, 'revenue_growth')
        perpetual_growth = ensure_finite(perpetual_growth, 'perpetual_growth')
        market_return = ensure_finite(market_return, 'market_return')
        if revenue_growth <= -1.0:
            raise DomainError(
                'revenue_growth must be greater than -1, got {}'.format(revenue_growth)
            )
        if not 0.0 <= perpetual_growth < 1.0:
            raise DomainError(
                'perpetual_growth must be in [0, 1), got {}'.format(perpetual_growth)
            )
        if not 0.0 <= market_return < 1.0:
            raise DomainError(
                'market_return must be in [0, 1), got {}'.format(market_return)
            )
        if isinstance(horizon_years, bool) or int(horizon_years) != horizon_years:
            raise DomainError(
                'horizon_years must be an integer, got {!r}'.format(horizon_years)
            )
        horizon_years = int(horizon_years)
        if horizon_years < 1:
            raise DomainError(
                'horizon_years must be at least 1, got {}'.format(horizon_years)
            )
        return super().__new__(
            cls, revenue_growth, perpetual_growth, horizon_years, market_return
        )

    @classmethod
    def from_config(cls, group):
        """Build assumptions from the `assumptions` configuration group."""
        return cls(
            revenue_growth=group['revenue_growth'],
            perpetual_growth=group['perpetual_growth'],
            horizon_years=group['horizon_years'],
            market_return=group['market_return'],
        )

    def with_overrides(self, **overrides):
        """Return new assumptions with non-None `overrides` applied."""
        values = self._asdict()
        for key, value in overrides.items():
            if key not in values:
                raise ValueError('Invalid assumption "{}"'.format(key))
            if value is not None:
                values[key] = value
        return Assumptions(**values)
