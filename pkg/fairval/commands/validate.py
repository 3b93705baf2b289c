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

"""fairval validate subcommand."""
from fairval.commands.commands import CliCommandWithRegistry
from fairval.commands.command_output import OutputTable, print_output_table


class ValidateCommand(CliCommandWithRegistry):
    """Command to check the registry and data files."""
    name = 'validate'

    def execute_with_workspace(self, fairval, workspace, args, run_id):
        tables = validation_tables(fairval, workspace)
        print_output_table(tables, args)
        return 1 if workspace.file_errors else 0

    def help_message(self):
        return 'Check registry and data files'


def validation_tables(fairval, workspace):
    summary = OutputTable('Summary', [
        {'id': 'assets', 'name': 'Assets', 'type': 'i'},
        {'id': 'errors', 'name': 'Errors', 'type': 'i'},
        {'id': 'message', 'name': 'Result', 'type': 't'},
    ])
    assets = len(workspace.records)
    errors = len(workspace.file_errors)
    summary.add_row({
        'assets': assets,
        'errors': errors,
        'message': '{} assets, {} errors'.format(assets, errors),
    })

    files = OutputTable('Files', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'path', 'name': 'Path', 'type': 't'},
        {'id': 'accepted', 'name': 'Accepted', 'type': 'i'},
        {'id': 'rejected', 'name': 'Rejected', 'type': 'i'},
        {'id': 'quarters', 'name': 'Quarters', 'type': 'i'},
    ])
    diagnostics = OutputTable('Diagnostics', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'line', 'name': 'Line', 'type': 'i'},
        {'id': 'reason', 'name': 'Reason', 'type': 't'},
        {'id': 'rejected', 'name': 'Rejected', 'type': 't'},
    ])
    for asset in workspace.iter_assets():
        if asset.report is None:
            continue
        files.add_row({
            'asset': asset.record.id,
            'path': asset.record.data_path,
            'accepted': asset.report.rows_accepted,
            'rejected': asset.report.rows_rejected,
            'quarters': len(asset.quarters),
        })
        for diagnostic in asset.report.diagnostics:
            diagnostics.add_row({
                'asset': asset.record.id,
                'line': diagnostic.line,
                'reason': diagnostic.reason,
                'rejected': diagnostic.rejected,
            })

    errors_table = OutputTable('Errors', [
        {'id': 'path', 'name': 'Path', 'type': 't'},
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'message', 'name': 'Message', 'type': 't'},
    ])
    for error in workspace.file_errors:
        errors_table.add_row({
            'path': error.path,
            'asset': error.asset,
            'message': error.message,
        })

    counters = OutputTable('Counters', [
        {'id': 'name', 'name': 'Name', 'type': 't'},
        {'id': 'value', 'name': 'Value', 'type': 'i'},
    ])
    for counter in fairval.telemetry.counters_values():
        counters.add_row(counter)

    return [summary, files, diagnostics, errors_table, counters]
