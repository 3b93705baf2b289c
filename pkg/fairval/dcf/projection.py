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

"""Cash flows projection and discounting."""
from collections import namedtuple

from fairval.error import DomainError, DivergentValuationError


class ProjectionRow(namedtuple('ProjectionRow', [
        't', 'revenue', 'workforce_expenses', 'net_income', 'pv'])):
    """One projected year. Amounts in USD millions, `pv` is None until discounted."""
    __slots__ = ()


def project_cashflows(base_revenue, growth, workforce_share, n):
    """Project `n` years of revenue, workforce expenses and net income.

    Parameters
    ----------
    base_revenue : float
        revenue of the first projected year, USD millions
    growth : float
        annual revenue growth
    workforce_share : float
        fraction of revenue spent on workforce
    n : int
        number of projected years

    Returns
    -------
    list of ProjectionRow
        rows with `pv` unset
    """
    if base_revenue < 0:
        raise DomainError('base_revenue must be non negative, got {}'.format(base_revenue))
    if n < 1:
        raise DomainError('horizon must be at least 1 year, got {}'.format(n))
    if not 0.0 <= workforce_share < 1.0:
        raise DomainError('workforce_share must be in [0, 1), got {}'.format(workforce_share))

    rows = []
    for t in range(n):
        revenue = base_revenue * (1.0 + growth) ** t
        workforce_expenses = workforce_share * revenue
        net_income = revenue - workforce_expenses
        rows.append(ProjectionRow(t, revenue, workforce_expenses, net_income, None))
    return rows


def discount_rows(rows, r):
    """Fill `pv` of each row with net income discounted by (1 + r)^t."""
    if r <= -1.0:
        raise DomainError('discount rate must be greater than -1, got {}'.format(r))
    return [
        row._replace(pv=row.net_income / (1.0 + r) ** row.t)
        for row in rows
    ]


def terminal_value(final_cash, g, r):
    """Gordon growth perpetuity value of `final_cash` growing at `g`."""
    if r <= g:
        raise DivergentValuationError(
            'discount rate {} must exceed perpetual growth {}'.format(r, g)
        )
    if final_cash < 0:
        raise DomainError('final cash must be non negative, got {}'.format(final_cash))
    return final_cash * (1.0 + g) / (r - g)
