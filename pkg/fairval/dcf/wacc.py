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

"""Weighted average cost of capital."""
from fairval.error import DomainError


def cost_of_equity(beta, market_return):
    """Cost of equity as the product of beta and the market return."""
    if beta < 0:
        raise DomainError('beta must be non negative, got {}'.format(beta))
    return beta * market_return


def wacc(equity, debt, cost_of_equity, cost_of_debt, tax_rate):
    """Compute the weighted average cost of capital.

    Parameters
    ----------
    equity : float
        equity value E
    debt : float
        debt value D
    cost_of_equity : float
        R_e
    cost_of_debt : float
        R_d, before tax
    tax_rate : float
        tax rate applied to the cost of debt

    Returns
    -------
    float
        E/(E+D) R_e + D/(E+D) R_d (1 - tax_rate)
    """
    total = equity + debt
    if total <= 0:
        raise DomainError('equity + debt must be positive, got {}'.format(total))
    equity_weight = equity / total
    debt_weight = debt / total
    return equity_weight * cost_of_equity + debt_weight * cost_of_debt * (1.0 - tax_rate)
