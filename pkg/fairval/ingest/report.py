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

"""Row-level parse diagnostics."""
from collections import namedtuple


class Diagnostic(namedtuple('Diagnostic', ['line', 'reason', 'rejected'])):
    """A diagnostic on data line `line` (1-based, header is line 1)."""
    __slots__ = ()

    def __str__(self):
        if self.line is None:
            return self.reason
        return 'line {}: {}'.format(self.line, self.reason)


class ParseReport(object):
    """Accepted and rejected rows counts of one input file."""
    def __init__(self, source=None):
        self.source = source
        self.rows_accepted = 0
        self.rows_rejected = 0
        self.diagnostics = []

    def accept(self):
        self.rows_accepted += 1

    def reject(self, line, reason):
        self.rows_rejected += 1
        self.diagnostics.append(Diagnostic(line, reason, True))

    def note(self, line, reason):
        """Record a diagnostic that does not reject its row."""
        self.diagnostics.append(Diagnostic(line, reason, False))

    @property
    def rejections(self):
        return [d for d in self.diagnostics if d.rejected]

    @property
    def notes(self):
        return [d for d in self.diagnostics if not d.rejected]

    def __eq__(self, other):
        if not isinstance(other, ParseReport):
            return NotImplemented
        return (
            self.rows_accepted == other.rows_accepted and
            self.rows_rejected == other.rows_rejected and
            self.diagnostics == other.diagnostics
        )

    def __repr__(self):
        return '<ParseReport {} accepted={} rejected={}>'.format(
            self.source, self.rows_accepted, self.rows_rejected
        )
