# pylint: skip-file
import pytest
import argparse
from fairval.cli import collect_commands, command_entry_points


class _MockCommand():
    def help_message(self):
        return 'help'

    def add_parser_arguments(self, parser):
        pass


class _MockEntryPoint:
    def __init__(self, name):
        self.name = name

    def load(self):
        return _MockCommand


def mock_entry_points_iter(entry_points):
    for name in entry_points:
        yield _MockEntryPoint(name)


def test_collect_subcommands():
    parser = argparse.ArgumentParser()
    subparser = parser.add_subparsers(dest='command')
    subcommands = collect_commands(
        subparser,
        mock_entry_points_iter(['validate', 'history', 'dcf']),
    )
    assert 'validate' in subcommands
    assert 'history' in subcommands
    assert 'dcf' in subcommands


def test_collect_subcommands_fails_with_duplicate_subcommand():
    parser = argparse.ArgumentParser(prog='tests')
    subparser = parser.add_subparsers(dest='command')
    with pytest.raises(SystemExit) as exc:
        subcommands = collect_commands(
            subparser,
            mock_entry_points_iter(['dcf', 'dcf']),
        )
    assert exc.type == SystemExit


def test_command_entry_points_returns_a_list():
    assert isinstance(command_entry_points(), list)


def test_registry_commands_require_registry():
    from fairval.commands.dcf import DcfCommand

    class _DcfEntryPoint(_MockEntryPoint):
        def load(self):
            return DcfCommand

    parser = argparse.ArgumentParser(prog='fairval')
    subparser = parser.add_subparsers(dest='command')
    collect_commands(subparser, [_DcfEntryPoint('dcf')])
    with pytest.raises(SystemExit):
        parser.parse_args(['dcf'])
    args = parser.parse_args(['dcf', '--registry', 'r.toml', '--band', '0.05'])
    assert args.registry == 'r.toml'
    assert args.band == 0.05
