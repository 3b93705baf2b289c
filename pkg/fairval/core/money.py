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

"""Units discipline for USD amounts.

Fundamentals are carried in USD millions, prices in plain USD. Conversions
between the two scales go through this module.
"""
import numpy as np

from fairval.error import DomainError


MILLION = 1e6


def to_millions(usd):
    """Convert plain USD to USD millions."""
    return ensure_finite(usd) / MILLION


def from_millions(usd_millions):
    """Convert USD millions to plain USD."""
    return ensure_finite(usd_millions) * MILLION


def ensure_finite(value, name='amount'):
    """Return `value` as float, raise `DomainError` if not finite."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError('{} must be a number, got {!r}'.format(name, value))
    if not np.isfinite(value):
        raise DomainError('{} must be finite, got {}'.format(name, value))
    return value
