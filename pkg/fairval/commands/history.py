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

"""fairval history subcommand."""
from fairval.core.quarter import quarter_range
from fairval.commands.commands import CliCommandWithRegistry
from fairval.commands.command_output import OutputTable, print_output_table
from fairval.fundamentals import build_history
from fairval.logging import get_logger


logger = get_logger(__name__)


class HistoryCommand(CliCommandWithRegistry):
    """Command to output historical earnings, growth and CQGR."""
    name = 'history'

    def execute_with_workspace(self, fairval, workspace, args, run_id):
        histories = build_histories(workspace, run_id)
        print_output_table(history_tables(workspace, histories), args)
        if workspace.file_errors or len(histories) < len(workspace.assets):
            return 1
        return 0

    def help_message(self):
        return 'Output historical earnings tables'


def build_histories(workspace, run_id):
    """Build earnings histories of assets with data, in registry order."""
    start = workspace.history_start()
    histories = []
    for asset in workspace.iter_assets():
        if not asset.available:
            logger.warning(run_id, 'Asset {} has no data, omitted', asset.record.id)
            continue
        end = max(f.quarter for f in asset.quarters)
        history = build_history(asset.record, asset.quarters, start=min(start, end), end=end)
        if history.cqgr is None:
            logger.warning(run_id, 'Asset {} has no CQGR', asset.record.id)
        histories.append((asset, history))
    return histories


def history_tables(workspace, histories):
    if not histories:
        quarters = []
    else:
        start = min(h.rows[0].quarter for _, h in histories)
        end = max(h.rows[-1].quarter for _, h in histories)
        quarters = quarter_range(start, end)

    quarter_columns = [
        {'id': str(q), 'name': q.label, 'type': 'f'} for q in quarters
    ]
    earnings = OutputTable(
        'Historical earnings ($M)',
        [{'id': 'asset', 'name': 'Asset', 'type': 't'}] + quarter_columns + [
            {'id': 'cqgr', 'name': 'CQGR', 'type': 'p'},
        ],
    )
    growth = OutputTable(
        'Quarter over quarter growth',
        [{'id': 'asset', 'name': 'Asset', 'type': 't'}] + [
            dict(column, type='p') for column in quarter_columns
        ],
    )
    for asset, history in histories:
        earnings_row = {'asset': asset.record.id, 'cqgr': history.cqgr}
        growth_row = {'asset': asset.record.id}
        for row in history.rows:
            earnings_row[str(row.quarter)] = row.earnings
            growth_row[str(row.quarter)] = row.growth
        earnings.add_row(earnings_row)
        growth.add_row(growth_row)
    return [earnings, growth]
