# pylint: skip-file
import shutil

import pytest

from fairval.core import Quarter
from fairval.error import DomainError, FairvalError
from fairval.fairval import Fairval
from fairval.workspace import Workspace
from tests.unit.conftest import PUBLISHED_FIXTURES


TOKEN_ROWS = 3 * 546 + 365 + 2 * 456
FIRM_ROWS = 9 * 7


@pytest.fixture
def published_workspace():
    fairval = Fairval()
    return Workspace(fairval, str(PUBLISHED_FIXTURES / 'registry.toml'), run_id='test').load()


@pytest.fixture
def data_dir(tmp_path):
    shutil.copytree(PUBLISHED_FIXTURES / 'tokens', tmp_path / 'tokens')
    shutil.copytree(PUBLISHED_FIXTURES / 'firms', tmp_path / 'firms')
    return tmp_path


def _registry(data_dir, text):
    path = data_dir / 'registry.toml'
    path.write_text(text)
    return str(path)


UNI = '''
[[asset]]
id = "UNI"
kind = "Token"
sector = "DEX"
supply = 460050000.0
spot_price = 5.0
spot_date = 2022-06-30
{extra}
[asset.discounting]
rate = 0.25
'''


class TestPublishedWorkspace:
    def test_loads_every_asset(self, published_workspace):
        assert published_workspace.file_errors == []
        assert len(published_workspace.assets) == 15
        assert all(asset.available for asset in published_workspace.iter_assets())

    def test_counters(self, published_workspace):
        counters = {
            c['name']: c['value']
            for c in published_workspace.fairval.telemetry.counters_values()
        }
        assert counters['ingest.rows_accepted'] == TOKEN_ROWS + FIRM_ROWS
        assert counters['ingest.rows_rejected'] == 0
        assert counters['ingest.files_failed'] == 0

    def test_base_revenue(self, published_workspace):
        assets = {a.record.id: a for a in published_workspace.iter_assets()}
        assert published_workspace.base_revenue(assets['UNI']) == 108.68
        assert published_workspace.base_revenue(assets['ICE']) == pytest.approx(5882.0)
        assert published_workspace.base_revenue(assets['C']) == pytest.approx(22474.0)

    def test_history_start(self, published_workspace):
        assert published_workspace.history_start() == Quarter(2020, 4)

    def test_token_quarters(self, published_workspace):
        uni, = [a for a in published_workspace.iter_assets() if a.record.id == 'UNI']
        assert len(uni.daily) == 546
        assert [q.earnings for q in uni.quarters] == pytest.approx(
            [25.7, 46.9, 30.8, 46.8, 31.1, 23.2], abs=1e-4
        )


class TestWorkspace:
    def test_asset_selection(self, data_dir):
        path = _registry(data_dir, UNI.format(extra=''))
        workspace = Workspace(Fairval(), path, assets=['UNI', 'XYZ']).load()
        assert [a.record.id for a in workspace.assets] == ['UNI']
        assert [(e.asset, e.message) for e in workspace.file_errors] == [('XYZ', 'unknown asset')]

    def test_missing_data_file(self, data_dir):
        path = _registry(data_dir, UNI.format(extra='data = "tokens/missing.csv"\n'))
        workspace = Workspace(Fairval(), path).load()
        asset, = workspace.assets
        assert not asset.available
        assert workspace.file_errors[0].asset == 'UNI'
        assert 'cannot read data file' in workspace.file_errors[0].message

    def test_malformed_data_file(self, data_dir):
        (data_dir / 'tokens' / 'UNI.csv').write_text('date,price\n2021-01-01,1\n')
        workspace = Workspace(Fairval(), _registry(data_dir, UNI.format(extra=''))).load()
        assert not workspace.assets[0].available
        assert 'missing column(s)' in workspace.file_errors[0].message

    def test_rejected_rows_are_counted(self, data_dir):
        with open(data_dir / 'tokens' / 'UNI.csv', 'a') as f:
            f.write('2022-07-01,5.0,5000000000.0,1.0,-1.0,1.0\n')
        fairval = Fairval()
        workspace = Workspace(fairval, _registry(data_dir, UNI.format(extra=''))).load()
        assert workspace.file_errors == []
        assert workspace.assets[0].report.rows_rejected == 1
        assert fairval.telemetry.counter('ingest.rows_rejected').value == 1

    def test_missing_registry(self, tmp_path):
        workspace = Workspace(Fairval(), str(tmp_path / 'nope.toml')).load()
        assert workspace.assets == []
        assert workspace.file_errors[0].asset is None

    def test_registry_problems_are_file_errors(self, data_dir):
        path = _registry(data_dir, UNI.format(extra='color = "red"\n'))
        workspace = Workspace(Fairval(), path).load()
        assert workspace.assets == []
        assert workspace.file_errors[0].asset == 'UNI'

    def test_override_making_rate_divergent(self, data_dir):
        path = _registry(data_dir, UNI.format(extra=''))
        workspace = Workspace(Fairval(), path, overrides={'perpetual_growth': 0.3}).load()
        assert workspace.assets == []
        assert workspace.file_errors[0].message == 'discount rate must exceed perpetual growth'

    def test_invalid_override(self, data_dir):
        path = _registry(data_dir, UNI.format(extra=''))
        with pytest.raises(DomainError):
            Workspace(Fairval(), path, overrides={'horizon_years': 0}).load()

    def test_market_cap_sampling_from_configuration(self, data_dir):
        fairval = Fairval()
        fairval.update_configuration({'valuation': {'market_cap_sampling': 'quarter_average'}})
        path = _registry(data_dir, UNI.format(extra=''))
        average = Workspace(fairval, path).load().assets[0].quarters[-1].market_cap
        end = Workspace(Fairval(), path).load().assets[0].quarters[-1].market_cap
        assert end == pytest.approx(5000.0)
        assert average > end

    def test_unresolvable_base_revenue(self, data_dir):
        text = UNI.format(extra='spot_date = 2023-06-30\n').replace('spot_date = 2022-06-30\n', '')
        workspace = Workspace(Fairval(), _registry(data_dir, text)).load()
        with pytest.raises(FairvalError):
            workspace.base_revenue(workspace.assets[0])
