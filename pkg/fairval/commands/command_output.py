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

"""Generate and format output."""
from io import StringIO
from enum import Enum
import json
import sys

import pandas as pd
from texttable import Texttable

from fairval.core.quarter import Quarter


OUTPUT_FORMATS = ['markdown', 'csv', 'json']


class OutputTable(object):
    """A named table with typed columns.

    Columns are either plain ids or dicts with `id`, `name` and `type`.
    Types are `t` (text), `f` (amount, 2 decimals), `p` (fraction rendered
    as percent, 2 decimals), `r` (ratio, 4 decimals) and `i` (integer).
    Rows are dicts keyed by column id, holding raw values.
    """
    def __init__(self, name, columns, missing='NA'):
        self.name = name
        self.rows = []
        self.missing = missing

        if len(columns) == 0:
            raise ValueError('OutputTable must contain at least one column.')

        column = columns[0]
        if isinstance(column, str):
            self.columns_id = list(columns)
            self.columns_name = list(columns)
            self.columns_type = ['t'] * len(columns)
        elif isinstance(column, dict):
            self.columns_id = [column['id'] for column in columns]
            self.columns_name = [column['name'] for column in columns]
            self.columns_type = [column.get('type', 't') for column in columns]
        else:
            raise ValueError('OutputTable columns in wrong format.')

    def add_row(self, row):
        self.rows.append(row)

    def formatted_rows(self):
        return [
            [
                format_cell(row.get(column_id), column_type, self.missing)
                for column_id, column_type in zip(self.columns_id, self.columns_type)
            ]
            for row in self.rows
        ]


def format_cell(value, column_type, missing='NA'):
    """Format `value` for display. Strings are never reformatted."""
    if value is None:
        return missing
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (str, Quarter)):
        return str(value)
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if column_type == 'f':
        return '{:,.2f}'.format(value)
    if column_type == 'p':
        return '{:.2f}%'.format(100.0 * value)
    if column_type == 'r':
        return '{:.4f}'.format(value)
    if column_type == 'i':
        return '{:d}'.format(int(value))
    return str(value)


def raw_value(value):
    """Value as written in machine readable output."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Quarter):
        return str(value)
    return value


def add_output_format_parser_arguments(parser):
    parser.add_argument(
        '--out',
        dest='output',
        default=None,
        help='Write output to this file instead of standard output',
    )
    parser.add_argument(
        '--format',
        dest='output_format',
        default='markdown',
        choices=OUTPUT_FORMATS,
    )


def print_output_table(tables, args, title=None):
    if not isinstance(tables, list):
        tables = [tables]
    if args.output is None:
        out_file = sys.stdout
    else:
        out_file = open(args.output, 'w', newline='')
    try:
        out_file.write(render_output_tables(tables, args.output_format, title))
    finally:
        if args.output is not None:
            out_file.close()


def render_output_tables(tables, output_format, title=None):
    if output_format == 'markdown':
        return _render_as_markdown(tables, title)
    elif output_format == 'csv':
        return _render_as_csv(tables)
    elif output_format == 'json':
        return _render_as_json(tables)
    raise RuntimeError('Invalid output_format {}'.format(output_format))


def _render_as_markdown(tables, title):
    out = StringIO()
    if title is not None:
        out.write('# {}\n\n'.format(title))
    for table in tables:
        out.write('## {}\n\n'.format(table.name))
        out.write(_draw_table(table))
        out.write('\n\n')
    return out.getvalue()


def _draw_table(table):
    tt = Texttable(max_width=0)
    tt.set_deco(Texttable.HEADER | Texttable.VLINES)
    tt.set_chars(['-', '|', '|', '-'])
    tt.set_cols_dtype(['t'] * len(table.columns_id))
    tt.set_cols_align(['l' if t == 't' else 'r' for t in table.columns_type])
    tt.header(table.columns_name)
    for row in table.formatted_rows():
        tt.add_row(row)
    if not table.rows:
        return tt.draw() or ' | '.join(table.columns_name)
    return tt.draw()


def _table_frame(table):
    return pd.DataFrame(
        [[raw_value(row.get(i)) for i in table.columns_id] for row in table.rows],
        columns=table.columns_id,
    )


def _render_as_csv(tables):
    out = StringIO()
    for index, table in enumerate(tables):
        if index > 0:
            out.write('\n')
        if len(tables) > 1:
            out.write('# {}\n'.format(table.name))
        _table_frame(table).to_csv(out, index=False, na_rep='NA', lineterminator='\n')
    return out.getvalue()


def _render_as_json(tables):
    output = dict()
    for table in tables:
        output[table.name] = _output_table_as_json(table)
    return json.dumps(output, indent=2) + '\n'


def _output_table_as_json(table):
    return [
        {i: raw_value(row.get(i)) for i in table.columns_id}
        for row in table.rows
    ]


def write_csv(table, path):
    """Write a single table as CSV to `path`."""
    with open(path, 'w', newline='') as out_file:
        _table_frame(table).to_csv(out_file, index=False, na_rep='NA', lineterminator='\n')
