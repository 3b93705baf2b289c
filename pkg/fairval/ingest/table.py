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

"""CSV tables reading shared by token and firm parsers."""
import io

import numpy as np
import pandas as pd

from fairval.error import IngestError, MissingColumnError


# first cell of a row that has more fields than the header
_LONG_ROW = '\x00long-row:'


def read_table(stream, columns, source=None, report=None):
    """Read a CSV table with a mandatory header.

    All cells are kept as stripped strings, blank lines are dropped but keep
    their place in the line numbering stored in the `line` column. Rows with
    more fields than the header are rejected in `report` and dropped, the
    other rows of the file are kept.

    Raises
    ------
    MissingColumnError
        if the file is empty or the header lacks one of `columns`
    IngestError
        if the file can't be tokenized
    """
    text = stream.read()
    try:
        width = len(pd.read_csv(io.StringIO(text), nrows=0).columns)

        def _long_row(fields):
            return ['{}{}'.format(_LONG_ROW, len(fields))] + [''] * (width - 1)

        frame = pd.read_csv(
            io.StringIO(text),
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            engine='python',
            on_bad_lines=_long_row,
        )
    except pd.errors.EmptyDataError:
        raise MissingColumnError('{}: empty file, missing header'.format(source))
    except pd.errors.ParserError as ex:
        raise IngestError('{}: {}'.format(source, ex))

    frame.columns = [str(c).strip() for c in frame.columns]
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise MissingColumnError('{}: missing column(s) {}'.format(
            source, ', '.join(missing)
        ))
    # header is line 1
    lines = np.arange(len(frame)) + 2
    first = frame.iloc[:, 0].fillna('').astype(str)
    long_rows = first.str.startswith(_LONG_ROW).to_numpy()
    if report is not None:
        for line, cell in zip(lines[long_rows], first[long_rows]):
            report.reject(int(line), 'expected {} fields, saw {}'.format(
                width, cell[len(_LONG_ROW):]
            ))

    frame = frame.loc[~long_rows, list(columns)].fillna('').copy()
    for column in columns:
        frame[column] = frame[column].astype(str).str.strip()
    frame['line'] = lines[~long_rows]
    blank = (frame[list(columns)] == '').all(axis=1)
    return frame[~blank]


def parse_number(value):
    """Parse a finite decimal number, return None if invalid."""
    number = pd.to_numeric(value, errors='coerce')
    if pd.isna(number) or not np.isfinite(number):
        return None
    return float(number)


def format_number(value):
    """Format a float so that `parse_number` recovers it exactly."""
    return repr(float(value))
