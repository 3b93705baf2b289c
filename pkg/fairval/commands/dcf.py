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

"""fairval dcf subcommand."""
from fairval.commands.commands import CliCommandWithRegistry
from fairval.commands.command_output import OutputTable, print_output_table
from fairval.dcf import value_asset
from fairval.error import FairvalError
from fairval.logging import get_logger


logger = get_logger(__name__)


class DcfCommand(CliCommandWithRegistry):
    """Command to value assets with discounted cash flows."""
    name = 'dcf'

    def execute_with_workspace(self, fairval, workspace, args, run_id):
        results, failures = value_assets(fairval, workspace, run_id)
        tables = [dcf_summary_table(results)]
        tables.extend(dcf_table(asset, result) for asset, result in results)
        tables.append(failures_table(failures))
        print_output_table(tables, args)
        if workspace.file_errors or failures:
            return 1
        return 0

    def help_message(self):
        return 'Value assets with discounted cash flows'


def value_assets(fairval, workspace, run_id):
    """Value every loaded asset, in registry order.

    Returns
    -------
    (list of (AssetData, DcfResult), list of (str, str))
        results and failed assets with their error message
    """
    band = workspace.valuation_config['band']
    valued = fairval.telemetry.counter('dcf.assets_valued')
    failed = fairval.telemetry.counter('dcf.assets_failed')
    results = []
    failures = []
    for asset in workspace.iter_assets():
        record = asset.record
        try:
            base_revenue = workspace.base_revenue(asset)
            result = value_asset(record, base_revenue, workspace.assumptions, band)
        except FairvalError as ex:
            logger.error(run_id, 'Asset {} not valued: {}', record.id, ex)
            failed.increment()
            failures.append((record.id, str(ex)))
            continue
        if result.flagged:
            logger.warning(
                run_id, 'Asset {} has non positive fair price, verdict {} by convention',
                record.id, result.verdict.value,
            )
        logger.info(
            run_id, 'Asset {} total PV {:.2f}, fair price {:.4f}, {}',
            record.id, result.total_pv, result.fair_price, result.verdict.value,
        )
        valued.increment()
        results.append((asset, result))
    return results, failures


def dcf_table(asset, result):
    """Projection table of one asset, one column per projected year."""
    record = asset.record
    year_columns = [
        {'id': 'y{}'.format(row.t), 'name': str(record.spot_date.year + row.t), 'type': 'f'}
        for row in result.rows
    ]
    table = OutputTable(
        'DCF {} ({})'.format(record.id, record.name),
        [{'id': 'item', 'name': 'Item', 'type': 't'}] + year_columns,
        missing='',
    )

    def _row_values(item, values):
        row = {'item': item}
        row.update({c['id']: v for c, v in zip(year_columns, values)})
        return row

    def _first(item, value):
        return {'item': item, year_columns[0]['id']: value}

    table.add_row(_row_values('Revenue ($M)', [r.revenue for r in result.rows]))
    table.add_row(_row_values('Workforce expenses ($M)', [r.workforce_expenses for r in result.rows]))
    table.add_row(_row_values('Net income ($M)', [r.net_income for r in result.rows]))
    table.add_row(_row_values('PV cashflows ($M)', [r.pv for r in result.rows]))
    table.add_row({'item': 'PV terminal value ($M)', year_columns[-1]['id']: result.pv_terminal})
    table.add_row(_first('Total PV ($M)', result.total_pv))
    table.add_row(_first('Total PV / {} supply ($)'.format(record.id), result.fair_price))
    table.add_row(_first('{} market price ($)'.format(record.id), result.market_price))
    table.add_row(_first('Verdict', result.verdict.value))
    return table


def dcf_summary_table(results):
    table = OutputTable('DCF summary', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'discount_rate', 'name': 'Discount rate', 'type': 'p'},
        {'id': 'pv_cashflows', 'name': 'PV cashflows ($M)', 'type': 'f'},
        {'id': 'terminal_value', 'name': 'Terminal value ($M)', 'type': 'f'},
        {'id': 'pv_terminal', 'name': 'PV terminal value ($M)', 'type': 'f'},
        {'id': 'total_pv', 'name': 'Total PV ($M)', 'type': 'f'},
        {'id': 'fair_price', 'name': 'Fair price ($)', 'type': 'f'},
        {'id': 'market_price', 'name': 'Market price ($)', 'type': 'f'},
        {'id': 'price_ratio', 'name': 'Market / fair', 'type': 'r'},
        {'id': 'verdict', 'name': 'Verdict', 'type': 't'},
        {'id': 'flagged', 'name': 'Flagged', 'type': 't'},
    ])
    for asset, result in results:
        table.add_row({
            'asset': asset.record.id,
            'discount_rate': result.discount_rate,
            'pv_cashflows': result.pv_cashflows,
            'terminal_value': result.terminal_value_undiscounted,
            'pv_terminal': result.pv_terminal,
            'total_pv': result.total_pv,
            'fair_price': result.fair_price,
            'market_price': result.market_price,
            'price_ratio': result.price_ratio,
            'verdict': result.verdict,
            'flagged': result.flagged,
        })
    return table


def failures_table(failures):
    table = OutputTable('Failures', [
        {'id': 'asset', 'name': 'Asset', 'type': 't'},
        {'id': 'message', 'name': 'Message', 'type': 't'},
    ])
    for asset_id, message in failures:
        table.add_row({'asset': asset_id, 'message': message})
    return table
