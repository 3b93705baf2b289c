import argparse
import json
import shutil
from pathlib import Path

import pytest

from fairval.cli import collect_commands
from fairval.commands.validate import ValidateCommand
from fairval.commands.history import HistoryCommand
from fairval.commands.dcf import DcfCommand
from fairval.commands.multiples import MultiplesCommand
from fairval.commands.report import ReportCommand
from fairval.workspace import DATA_ENV_VARIABLE


PUBLISHED_FIXTURES = Path(__file__).parent.parent / 'fixtures' / 'published'
PUBLISHED_REGISTRY = str(PUBLISHED_FIXTURES / 'registry.toml')

COMMANDS = [
    ('validate', ValidateCommand),
    ('history', HistoryCommand),
    ('dcf', DcfCommand),
    ('multiples', MultiplesCommand),
    ('report', ReportCommand),
]


class _EntryPoint:
    def __init__(self, name, cls):
        self.name = name
        self._cls = cls

    def load(self):
        return self._cls


def run_cli(argv):
    """Run a fairval command line, return its exit status."""
    parser = argparse.ArgumentParser(prog='fairval')
    subparser = parser.add_subparsers(dest='command')
    commands = collect_commands(
        subparser,
        [_EntryPoint(name, cls) for name, cls in COMMANDS],
    )
    args = parser.parse_args(argv)
    return commands[args.command].execute(args)


def run_json(capsys, argv):
    """Run a command with JSON output, return (status, document)."""
    status = run_cli(argv + ['--format', 'json'])
    out = capsys.readouterr().out
    return status, json.loads(out)


@pytest.fixture(autouse=True)
def no_data_env(monkeypatch):
    monkeypatch.delenv(DATA_ENV_VARIABLE, raising=False)


@pytest.fixture
def published_copy(tmp_path):
    """A writable copy of the published fixtures."""
    target = tmp_path / 'published'
    shutil.copytree(PUBLISHED_FIXTURES, target)
    return target
