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
"""fairval CLI entry point."""

import sys
import argparse
from importlib.metadata import entry_points


COMMANDS_GROUP = 'fairval.commands'


def collect_commands(parser, subcommands_entry_points_iter):
    """Collect all commands registered with `fairval.commands`.

    Returns
    -------
    dict
        a dict of command names and objects.
    """
    commands = {}
    for entry_point in subcommands_entry_points_iter:
        if entry_point.name in commands:
            print('Duplicate entry point {} found.'.format(entry_point.name))
            sys.exit(1)
        sub_cls = entry_point.load()
        sub = sub_cls()
        subparser = parser.add_parser(entry_point.name, help=sub.help_message())
        sub.add_parser_arguments(subparser)
        commands[entry_point.name] = sub

    return commands


def command_entry_points():
    """Entry points registered in the `fairval.commands` group."""
    try:
        return list(entry_points(group=COMMANDS_GROUP))
    except TypeError:
        # python < 3.10
        return list(entry_points().get(COMMANDS_GROUP, []))


def main(argv=None): # pragma: no cover
    """Main entry point."""
    parser = argparse.ArgumentParser(prog='fairval')
    subparser = parser.add_subparsers(dest='command')
    subcommands = collect_commands(
        subparser,
        command_entry_points(),
    )
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help(sys.stderr)
        sys.exit(1)

    command = subcommands.get(args.command)

    if command is None:
        print('Invalid command {}'.format(args.command))
        sys.exit(1)

    sys.exit(command.execute(args))
