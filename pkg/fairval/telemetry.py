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

"""Run counters for ingest and commands."""

from fairval.logging import get_logger


class Counter:
    """A named, monotonically increasing run counter."""
    __slots__ = ('name', '_value')

    def __init__(self, name):
        self.name = name
        self._value = 0

    def increment(self, amount=1):
        if amount < 0:
            raise ValueError(
                'Counter {} can only increase, got {}'.format(self.name, amount)
            )
        self._value += amount

    @property
    def value(self):
        return self._value


class Telemetry:
    """Counters of one fairval run, kept in creation order."""
    def __init__(self):
        self._logger = get_logger('fairval.telemetry')
        self._counters = {}

    def counter(self, name):
        """Return the counter called `name`, creating it if needed."""
        counter = self._counters.get(name)
        if counter is None:
            counter = self._counters[name] = Counter(name)
        return counter

    def counters_values(self):
        return [
            {'name': name, 'value': counter.value}
            for name, counter in self._counters.items()
        ]

    def log_counters(self, run_id):
        for name, counter in self._counters.items():
            self._logger.debug(run_id, 'counter {} = {}', name, counter.value)
