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

"""Calendar quarters."""
import re
import datetime
from collections import namedtuple


_QUARTER_RE = re.compile(r'^\s*(\d{4})\s*Q([1-4])\s*$')


class Quarter(namedtuple('Quarter', ['year', 'index'])):
    """A calendar quarter, ordered by (year, index).

    Parameters
    ----------
    year : int
        calendar year
    index : int
        quarter index, 1 to 4
    """
    __slots__ = ()

    def __new__(cls, year, index):
        if isinstance(year, bool) or not isinstance(year, int):
            raise ValueError('Quarter year must be an integer, got {!r}'.format(year))
        if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= 4:
            raise ValueError('Quarter index must be in 1..4, got {!r}'.format(index))
        return super().__new__(cls, year, index)

    @classmethod
    def parse(cls, token):
        """Parse a `YYYYQn` token."""
        match = _QUARTER_RE.match(str(token))
        if match is None:
            raise ValueError('Invalid quarter "{}"'.format(token))
        return cls(int(match.group(1)), int(match.group(2)))

    @classmethod
    def from_date(cls, date):
        return cls(date.year, (date.month - 1) // 3 + 1)

    @classmethod
    def from_ordinal(cls, ordinal):
        year, index = divmod(ordinal, 4)
        return cls(year, index + 1)

    @property
    def ordinal(self):
        return self.year * 4 + (self.index - 1)

    @property
    def label(self):
        """Human label, e.g. `Q3 2021`."""
        return 'Q{} {}'.format(self.index, self.year)

    @property
    def first_day(self):
        return datetime.date(self.year, 3 * (self.index - 1) + 1, 1)

    @property
    def last_day(self):
        return self.next().first_day - datetime.timedelta(days=1)

    @property
    def days(self):
        return (self.last_day - self.first_day).days + 1

    def next(self):
        return Quarter.from_ordinal(self.ordinal + 1)

    def previous(self):
        return Quarter.from_ordinal(self.ordinal - 1)

    def __sub__(self, other):
        if not isinstance(other, Quarter):
            return NotImplemented
        return self.ordinal - other.ordinal

    def __str__(self):
        return '{}Q{}'.format(self.year, self.index)


def quarter_range(start, end):
    """Quarters from `start` to `end`, both included."""
    return [Quarter.from_ordinal(o) for o in range(start.ordinal, end.ordinal + 1)]
