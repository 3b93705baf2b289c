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

"""fairval multiples subcommand."""
from fairval.commands.commands import CliCommandWithRegistry
from fairval.commands.command_output import (
    OutputTable,
    print_output_table,
    write_csv,
)
from fairval.error import DomainError
from fairval.logging import get_logger
from fairval.multiples import Metric, SECTOR_PAIRS, build_series, compare_sector


logger = get_logger(__name__)


PLOT_DATA_COLUMNS = [
    {'id': 'asset', 'name': 'asset', 'type': 't'},
    {'id': 'sector', 'name': 'sector', 'type': 't'},
    {'id': 'quarter', 'name': 'quarter', 'type': 't'},
    {'id': 'metric', 'name': 'metric', 'type': 't'},
    {'id': 'ratio', 'name': 'ratio', 'type': 'r'},
    {'id': 'log10_ratio', 'name': 'log10_ratio', 'type': 'r'},
]


class MultiplesCommand(CliCommandWithRegistry):
    """Command to output valuation multiples and sector comparisons."""
    name = 'multiples'

    def execute_with_workspace(self, fairval, workspace, args, run_id):
        series = build_all_series(fairval, workspace, run_id)
        plot_data = plot_data_table(series)
        tables = comparison_tables(series, run_id)
        if args.plot_data:
            write_csv(plot_data, args.plot_data)
        else:
            tables.append(plot_data)
        print_output_table(tables, args)

        with_output = {s.asset for s in series}
        if workspace.file_errors or any(a.record.id not in with_output for a in workspace.assets):
            return 1
        return 0

    def help_message(self):
        return 'Output valuation multiples series and sector comparisons'

    def add_extra_parser_arguments(self, parser):
        parser.add_argument(
            '--plot-data',
            dest='plot_data',
            help='Write the long format plot CSV to this file',
        )


def build_all_series(fairval, workspace, run_id):
    """Build both multiples series of every asset with data.

    Series without any valid point are omitted with a warning.
    """
    omitted_counter = fairval.telemetry.counter('multiples.points_omitted')
    series = []
    for metric in Metric:
        for asset in workspace.iter_assets():
            if not asset.available:
                continue
            s = build_series(asset.record, asset.quarters, metric)
            for omitted in s.omitted:
                omitted_counter.increment()
                logger.warning(
                    run_id, 'Asset {} {} at {} omitted: {}',
                    s.asset, metric.value, omitted.quarter, omitted.reason,
                )
            for point in s.points:
                if point.flagged:
                    logger.warning(
                        run_id, 'Asset {} {} at {} is negative, no log point',
                        s.asset, metric.value, point.quarter,
                    )
            if not s.points:
                logger.warning(run_id, 'Asset {} has no valid {} point, omitted', s.asset, metric.value)
                continue
            series.append(s)
    return series


def plot_data_table(series):
    table = OutputTable('plot_data', PLOT_DATA_COLUMNS)
    for s in series:
        for point in s.points:
            table.add_row({
                'asset': s.asset,
                'sector': s.sector.value,
                'quarter': str(point.quarter),
                'metric': s.metric.value,
                'ratio': point.ratio,
                'log10_ratio': point.log10_ratio,
            })
    return table


def comparison_tables(series, run_id):
    tables = []
    for metric in Metric:
        metric_series = [s for s in series if s.metric == metric]
        for pair in SECTOR_PAIRS:
            try:
                comparison = compare_sector(metric_series, pair)
            except DomainError as ex:
                logger.warning(run_id, 'No {} comparison for {}: {}', metric.value, pair.name, ex)
                continue
            tables.append(comparison_table(comparison))
    return tables


def comparison_table(comparison):
    columns = [{'id': 'quarter', 'name': 'Quarter', 'type': 't'}]
    columns.extend(
        {'id': asset, 'name': asset, 'type': 'r'} for asset in comparison.assets
    )
    columns.extend([
        {'id': 'defi_median', 'name': 'DeFi median', 'type': 'r'},
        {'id': 'tradfi_median', 'name': 'TradFi median', 'type': 'r'},
        {'id': 'spread_ratio', 'name': 'Spread ratio', 'type': 'r'},
        {'id': 'log10_spread', 'name': 'Log10 spread', 'type': 'r'},
    ])
    table = OutputTable(
        '{} {}'.format(comparison.pair.name, comparison.metric.label),
        columns,
    )
    for row in comparison.rows:
        values = {
            'quarter': row.quarter.label,
            'defi_median': row.defi_median,
            'tradfi_median': row.tradfi_median,
            'spread_ratio': row.spread_ratio,
            'log10_spread': row.log10_spread,
        }
        values.update(row.ratios)
        table.add_row(values)
    return table
