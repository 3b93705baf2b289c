# pylint: skip-file
import pytest

from tests.e2e.conftest import PUBLISHED_REGISTRY, run_cli, run_json


@pytest.fixture
def report(capsys):
    status, document = run_json(capsys, ['report', '--registry', PUBLISHED_REGISTRY])
    assert status == 0
    return document


def test_report_sections(report):
    for name in [
            'Assumptions', 'Historical earnings ($M)', 'DCF summary',
            'DCF UNI (Uniswap)', 'DEX-Exchange Market Cap / Revenue', 'plot_data',
            'Errata', 'Known deviations', 'Identity checks', 'Golden comparison summary',
            'Golden deviations']:
        assert name in report


def test_assumptions(report):
    assumptions = {row['name']: row['value'] for row in report['Assumptions']}
    assert assumptions['perpetual_growth'] == 0.0239
    assert assumptions['horizon_years'] == 6
    assert assumptions['band'] == 0.10


def test_identities_hold(report):
    checks = report['Identity checks']
    assert len(checks) == 30
    assert {row['source'] for row in checks} == {'printed', 'engine'}
    assert all(row['holds'] for row in checks)


def test_errata_are_listed(report):
    assert len(report['Errata']) == 4
    assert {row['asset'] for row in report['Errata']} == {'C', 'BLK', 'MS'}


def test_terminal_value_deviations_are_reported(report):
    deviations = {(row['asset'], row['field']) for row in report['Golden deviations']}
    assert ('UNI', 'pv_terminal') in deviations
    assert ('UNI', 'pv[1]') not in deviations
    assert ('ICE', 'pv[0]') not in deviations
    assert ('YFI', 'verdict') in deviations
    assert ('UNI', 'verdict') not in deviations


def test_deviations_carry_differences_and_legend(report):
    rows = {(row['asset'], row['field']): row for row in report['Golden deviations']}
    yearn = rows[('YFI', 'verdict')]
    assert yearn['actual'] == 'Fair'
    assert yearn['difference'] is None
    assert yearn['known']
    ice = rows[('ICE', 'pv[5]')]
    assert 0.5 < ice['difference'] < 1.0
    assert ice['relative_difference'] == pytest.approx(2.26e-4, abs=1e-6)
    assert ice['known']
    legend = {(row['asset'], row['location']) for row in report['Known deviations']}
    assert ('YFI', 'dcf.verdict') in legend
    assert ('all', 'dcf.pv_terminal') in legend


def test_comparison_summary_covers_every_asset(report):
    summary = {row['asset']: row for row in report['Golden comparison summary']}
    assert len(summary) == 15
    assert all(row['checks'] > 0 for row in summary.values())


def test_markdown_report(capsys):
    status = run_cli(['report', '--registry', PUBLISHED_REGISTRY, '--assets', 'UNI'])
    out = capsys.readouterr().out
    assert status == 0
    assert out.startswith('# fairval valuation report\n')
    assert '## DCF UNI (Uniswap)' in out
