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
"""fairval exceptions module."""


class FairvalError(Exception):
    """Base class for fairval errors."""
    pass


class DomainError(FairvalError, ValueError):
    """Invalid function domain."""
    pass


class UndefinedGrowthError(DomainError):
    """Growth from a zero starting value."""
    pass


class DivergentValuationError(DomainError):
    """Discount rate does not exceed the perpetual growth rate."""
    pass


class InvalidDenominatorError(DomainError):
    """Multiple with a denominator outside its domain."""
    pass


class EmptyIntersectionError(DomainError):
    """Series to compare share no quarter."""
    pass


class IngestError(FairvalError):
    """File-level ingest failure."""
    pass


class MissingColumnError(IngestError):
    """Input file header lacks a mandatory column."""
    pass


class RegistryError(IngestError):
    """Invalid asset registry.

    Parameters
    ----------
    problems : list of (str or None, str)
        asset id (None for file-wide problems) and message
    """
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__('; '.join(_format_problem(p) for p in self.problems))


def _format_problem(problem):
    asset_id, message = problem
    if asset_id is None:
        return message
    return '{}: {}'.format(asset_id, message)
