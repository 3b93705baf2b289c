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

"""Configuration options."""
import abc
import numbers


class OptionsGroup(object):
    def __init__(self, name, options=None):
        if options is None:
            options = []
        self._options = list(options)
        self.name = name

    def add(self, option):
        self._options.append(option)

    def iter(self):
        return iter(self._options)


class Option(metaclass=abc.ABCMeta):
    def __init__(self, name, default=None, description=None):
        self.name = name
        self.default = default
        self.description = description

    @abc.abstractmethod
    def is_valid(self, value):
        pass

    def validate(self, value, path=None):
        """Raise `ValueError` if value is not valid for this option."""
        if not self.is_valid(value):
            raise ValueError('Invalid value {!r} for option "{}"'.format(
                value, path or self.name
            ))
        return value


class NumericOption(Option):
    def __init__(self, name, min_value=None, max_value=None,
                 default=None, description=None, strict_min=False,
                 strict_max=False):
        super().__init__(name, default, description)
        self.min_value = min_value
        self.max_value = max_value
        self.strict_min = strict_min
        self.strict_max = strict_max

    def _is_number(self, value):
        return isinstance(value, numbers.Real) and not isinstance(value, bool)

    def is_valid(self, value):
        if not self._is_number(value):
            return False
        if self.min_value is not None:
            if value < self.min_value:
                return False
            if self.strict_min and value == self.min_value:
                return False
        if self.max_value is not None:
            if value > self.max_value:
                return False
            if self.strict_max and value == self.max_value:
                return False
        return True


class IntegerOption(NumericOption):
    def _is_number(self, value):
        return isinstance(value, numbers.Integral) and not isinstance(value, bool)


class BoolOption(Option):
    def is_valid(self, value):
        return isinstance(value, bool)


class StringOption(Option):
    def is_valid(self, value):
        return value is None or isinstance(value, str)


class EnumOption(Option):
    def __init__(self, name, values=None,
                 default=None, description=None):
        super().__init__(name, default, description)
        self.values = values

    def is_valid(self, value):
        if self.values is not None:
            if value not in self.values:
                return False
        return isinstance(value, str)
