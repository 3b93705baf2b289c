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

"""Growth metrics."""
import numpy as np

from fairval.error import DomainError, UndefinedGrowthError


def qoq_growth(prev, curr):
    """Quarter over quarter growth, `curr / prev - 1`."""
    if prev == 0:
        raise UndefinedGrowthError('growth from zero is undefined')
    return curr / prev - 1.0


def cqgr(v_start, v_end, q):
    """Compound quarterly growth rate.

    Parameters
    ----------
    v_start : float
        value at the first quarter, positive
    v_end : float
        value at the last quarter, positive
    q : int
        number of quarters between the two values

    Returns
    -------
    float
        (v_end / v_start)^(1/q) - 1, evaluated as expm1(log(ratio) / q)
    """
    if v_start <= 0 or v_end <= 0:
        raise DomainError(
            'CQGR endpoints must be positive, got {} and {}'.format(v_start, v_end)
        )
    if q < 1:
        raise DomainError('CQGR needs at least one quarter, got {}'.format(q))
    return float(np.expm1(np.log(v_end / v_start) / q))
