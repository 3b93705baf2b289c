# pylint: skip-file
import pandas as pd
import pytest

from tests.e2e.conftest import PUBLISHED_REGISTRY, run_cli, run_json


def test_sector_comparisons(capsys):
    status, document = run_json(capsys, ['multiples', '--registry', PUBLISHED_REGISTRY])
    assert status == 0
    assert 'DEX-Exchange Market Cap / Revenue' in document
    assert 'PLF-Bank Market Cap / Net Assets' in document
    assert 'YieldAggregator-AssetManager Market Cap / Revenue' in document
    assert 'plot_data' in document


def test_dex_exchange_spread_narrows(capsys):
    _, document = run_json(capsys, ['multiples', '--registry', PUBLISHED_REGISTRY])
    rows = document['DEX-Exchange Market Cap / Revenue']
    assert [row['quarter'] for row in rows] == ['Q3 2021', 'Q4 2021', 'Q1 2022', 'Q2 2022']
    spreads = [row['spread_ratio'] for row in rows]
    assert all(a > b for a, b in zip(spreads, spreads[1:]))


def test_uniswap_multiples(capsys):
    _, document = run_json(capsys, ['multiples', '--registry', PUBLISHED_REGISTRY, '--assets', 'UNI,ICE'])
    points = {
        (row['metric'], row['quarter']): row
        for row in document['plot_data'] if row['asset'] == 'UNI'
    }
    revenue = points[('RevenueMultiple', '2022Q2')]
    assert revenue['ratio'] == pytest.approx(215.52, abs=0.01)
    assert revenue['log10_ratio'] == pytest.approx(2.3335, abs=1e-4)
    assert revenue['sector'] == 'DEX'


def test_plot_data_file(capsys, tmp_path):
    path = tmp_path / 'plot.csv'
    status = run_cli(['multiples', '--registry', PUBLISHED_REGISTRY, '--plot-data', str(path)])
    assert status == 0
    assert '## plot_data' not in capsys.readouterr().out
    frame = pd.read_csv(path)
    assert list(frame.columns) == ['asset', 'sector', 'quarter', 'metric', 'ratio', 'log10_ratio']
    assert set(frame['metric']) == {'RevenueMultiple', 'NetAssetMultiple'}
    assert len(frame['asset'].unique()) == 15
