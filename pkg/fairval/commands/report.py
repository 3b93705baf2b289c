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

"""fairval report subcommand."""
import os

from fairval.commands.commands import CliCommandWithRegistry
from fairval.commands.command_output import OutputTable, print_output_table
from fairval.commands.history import build_histories, history_tables
from fairval.commands.dcf import value_assets, dcf_table, dcf_summary_table, failures_table
from fairval.commands.multiples import build_all_series, comparison_tables, plot_data_table
from fairval.golden import (
    load_golden,
    compare_dcf,
    compare_history,
    printed_identity,
    engine_identity,
)
from fairval.logging import get_logger


logger = get_logger(__name__)


GOLDEN_FILE = 'golden.toml'


class ReportCommand(CliCommandWithRegistry):
    """Command to output the full valuation document."""
    name = 'report'

    def execute_with_workspace(self, fairval, workspace, args, run_id):
        histories = build_histories(workspace, run_id)
        results, failures = value_assets(fairval, workspace, run_id)
        series = build_all_series(fairval, workspace, run_id)

        tables = [assumptions_table(workspace)]
        tables.extend(history_tables(workspace, histories))
        tables.append(dcf_summary_table(results))
        tables.extend(dcf_table(asset, result) for asset, result in results)
        tables.append(failures_table(failures))
        tables.extend(comparison_tables(series, run_id))
        tables.append(plot_data_table(series))

        golden = _load_golden(workspace, run_id)
        if golden is not None:
            tables.extend(golden_tables(golden, histories, results, run_id))

        print_output_table(tables, args, title='fairval valuation report')

        produced = {a.record.id for a, _ in histories}
        produced |= {a.record.id for a, _ in results}
        if workspace.file_errors or any(a.record.id not in produced for a in workspace.assets):
            return 1
        return 0

    def help_message(self):
        return 'Output the full valuation report'


def _load_golden(workspace, run_id):
    path = os.path.join(workspace.data_dir, GOLDEN_FILE)
    if not os.path.exists(path):
        return None
    with open(path) as f:
        golden = load_golden(f)
    logger.info(run_id, 'Loaded golden tables from {}', path)
    return golden


def assumptions_table(workspace):
    table = OutputTable('Assumptions', [
        {'id': 'name', 'name': 'Assumption', 'type': 't'},
        {'id': 'value', 'name': 'Value', 'type': 't'},
    ])
    assumptions = workspace.assumptions
    table.add_row({'name': 'revenue_growth', 'value': assumptions.revenue_growth})
    table.add_row({'name': 'perpetual_growth', 'value': assumptions.perpetual_growth})
    table.add_row({'name': 'horizon_years', 'value': assumptions.horizon_years})
    table.add_row({'name': 'market_return', 'value': assumptions.market_return})
    table.add_row({'name': 'band', 'value': workspace.valuation_config['band']})
    table.add_row({
        'name': 'market_cap_sampling',
        'value': workspace.valuation_config['market_cap_sampling'],
    })
    return table


def golden_tables(golden, histories, results, run_id):
    """Errata, identity checks and deviations from the golden tables."""
    errata = OutputTable('Errata', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'location', 'name': 'Location', 'type': 't'},
        {'id': 'printed', 'name': 'Printed', 'type': 'r'},
        {'id': 'corrected', 'name': 'Corrected', 'type': 'r'},
        {'id': 'note', 'name': 'Note', 'type': 't'},
    ])
    for erratum in golden.errata:
        errata.add_row({
            'asset': erratum.asset,
            'location': erratum.location,
            'printed': erratum.printed,
            'corrected': erratum.corrected,
            'note': erratum.note,
        })

    known = OutputTable('Known deviations', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'location', 'name': 'Location', 'type': 't'},
        {'id': 'note', 'name': 'Note', 'type': 't'},
    ])
    for deviation in golden.known_deviations:
        known.add_row({
            'asset': deviation.asset or 'all',
            'location': '{}.{}'.format(deviation.table, deviation.field),
            'note': deviation.note,
        })

    identities = OutputTable('Identity checks', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'source', 'name': 'Source', 'type': 't'},
        {'id': 'parts_sum', 'name': 'PV cashflows + PV terminal ($M)', 'type': 'f'},
        {'id': 'total', 'name': 'Total PV ($M)', 'type': 'f'},
        {'id': 'holds', 'name': 'Holds', 'type': 't'},
    ])
    checks = printed_identity(golden)
    checks.extend(engine_identity(result) for _, result in results)
    for check in checks:
        identities.add_row({
            'asset': check.asset,
            'source': check.source,
            'parts_sum': check.parts_sum,
            'total': check.total,
            'holds': check.holds,
        })

    deviations = OutputTable('Golden deviations', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'table', 'name': 'Table', 'type': 't'},
        {'id': 'field', 'name': 'Field', 'type': 't'},
        {'id': 'expected', 'name': 'Printed', 'type': 'r'},
        {'id': 'actual', 'name': 'Engine', 'type': 'r'},
        {'id': 'difference', 'name': 'Difference', 'type': 'r'},
        {'id': 'relative_difference', 'name': 'Relative difference', 'type': 'r'},
        {'id': 'tolerance', 'name': 'Tolerance', 'type': 'r'},
        {'id': 'known', 'name': 'Known', 'type': 't'},
    ])
    summary = OutputTable('Golden comparison summary', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'checks', 'name': 'Checks', 'type': 'i'},
        {'id': 'flagged', 'name': 'Flagged', 'type': 'i'},
    ])
    comparisons = {}
    for asset, history in histories:
        comparisons.setdefault(asset.record.id, []).extend(
            compare_history(golden, history, asset.record.kind.is_token())
        )
    for asset, result in results:
        comparisons.setdefault(asset.record.id, []).extend(
            compare_dcf(golden, result, asset.record.kind.is_token())
        )
    for asset_id, asset_checks in comparisons.items():
        flagged = [c for c in asset_checks if c.flagged]
        summary.add_row({
            'asset': asset_id,
            'checks': len(asset_checks),
            'flagged': len(flagged),
        })
        for check in flagged:
            logger.warning(
                run_id, 'Asset {} {}.{} deviates: printed {}, engine {}',
                asset_id, check.table, check.field, check.expected, check.actual,
            )
            deviations.add_row({
                'asset': asset_id,
                'table': check.table,
                'field': check.field,
                'expected': check.expected,
                'actual': check.actual,
                'difference': check.difference,
                'relative_difference': check.relative_difference,
                'tolerance': check.tolerance,
                'known': golden.known_deviation(check) is not None,
            })
    return [errata, known, identities, summary, deviations]
