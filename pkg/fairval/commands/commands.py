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

"""CLI commands base class."""
import abc
import sys

from fairval.error import FairvalError
from fairval.fairval import Fairval, create_run_id
from fairval.commands.command_output import add_output_format_parser_arguments
from fairval.workspace import Workspace, default_data_dir


class CliCommand(metaclass=abc.ABCMeta): # pragma: no cover
    """Abstract class for CLI commands."""
    @abc.abstractmethod
    def execute(self, args):
        """Run the command."""
        pass

    @abc.abstractmethod
    def help_message(self):
        """Return the command help message."""
        pass

    @abc.abstractmethod
    def add_parser_arguments(self, parser):
        """Add arguments specific to this command to the argument parser."""
        pass


class CliCommandWithRegistry(CliCommand):
    """A CLI Command that loads a registry and its data files."""
    name = None

    def execute(self, args):
        fairval = Fairval()
        try:
            if args.config:
                fairval.update_configuration(args.config)
            fairval.update_configuration(_valuation_overrides(args))
        except (ValueError, OSError) as ex:
            print('Invalid configuration: {}'.format(ex), file=sys.stderr)
            return 1

        run_id = create_run_id(self.name or type(self).__name__)
        workspace = Workspace(
            fairval,
            args.registry,
            data_dir=args.data or default_data_dir(),
            assets=_parse_assets(args.assets),
            overrides={
                'revenue_growth': args.growth,
                'perpetual_growth': args.perpetual_growth,
                'horizon_years': args.horizon,
            },
            run_id=run_id,
        )
        try:
            workspace.load()
        except FairvalError as ex:
            print('Invalid assumptions: {}'.format(ex), file=sys.stderr)
            return 1
        status = self.execute_with_workspace(fairval, workspace, args, run_id)
        fairval.telemetry.log_counters(run_id)
        return status

    @abc.abstractmethod
    def execute_with_workspace(self, fairval, workspace, args, run_id):
        """Run the command on the loaded workspace, return the exit status."""
        pass

    def add_parser_arguments(self, parser):
        parser.add_argument('--registry', required=True, help='Asset registry file')
        parser.add_argument(
            '--data',
            default=None,
            help='Data directory, defaults to $FAIRVAL_DATA or the registry directory',
        )
        parser.add_argument('--config', help='Specify the configuration file')
        parser.add_argument('--assets', help='Comma separated tickers to process')
        parser.add_argument('--growth', type=float, help='Revenue growth override')
        parser.add_argument(
            '--perpetual-growth',
            dest='perpetual_growth',
            type=float,
            help='Perpetual growth override',
        )
        parser.add_argument('--horizon', type=int, help='Projected years override')
        parser.add_argument('--band', type=float, help='Verdict band override')
        parser.add_argument(
            '--market-cap-sampling',
            dest='market_cap_sampling',
            choices=['quarter_end', 'quarter_average'],
            help='Token market cap sampling within a quarter',
        )
        add_output_format_parser_arguments(parser)
        self.add_extra_parser_arguments(parser)

    def add_extra_parser_arguments(self, parser):
        """Add extra arguments to this command parser."""
        pass


def _parse_assets(assets):
    if not assets:
        return None
    return [a.strip() for a in assets.split(',') if a.strip()]


def _valuation_overrides(args):
    valuation = {}
    if args.band is not None:
        valuation['band'] = args.band
    if args.market_cap_sampling is not None:
        valuation['market_cap_sampling'] = args.market_cap_sampling
    return {'valuation': valuation}
