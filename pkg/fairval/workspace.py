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

"""Registry and data files of a run."""
import os
from collections import namedtuple

from fairval.core.assumptions import Assumptions
from fairval.core.quarter import Quarter
from fairval.error import FairvalError, IngestError
from fairval.fundamentals import aggregate_token_quarters, annualize_first_half
from fairval.ingest import (
    read_registry,
    parse_token_daily,
    parse_firm_quarterly,
)
from fairval.logging import get_logger


logger = get_logger(__name__)


DATA_ENV_VARIABLE = 'FAIRVAL_DATA'


class FileError(namedtuple('FileError', ['path', 'asset', 'message'])):
    """A file-level error, `asset` is None for registry wide errors."""
    __slots__ = ()

    def __str__(self):
        if self.asset is None:
            return '{}: {}'.format(self.path, self.message)
        return '{}: {}: {}'.format(self.path, self.asset, self.message)


class AssetData(namedtuple('AssetData', ['record', 'path', 'report', 'daily', 'quarters'])):
    """Parsed data of an asset. `report` is None if the file failed."""
    __slots__ = ()

    @property
    def available(self):
        return self.report is not None and len(self.quarters) > 0


def default_data_dir():
    return os.environ.get(DATA_ENV_VARIABLE)


class Workspace(object):
    """Load the registry and every asset data file of a run.

    Parameters
    ----------
    fairval : Fairval
        root object, provides configuration and telemetry
    registry_path : str
        path of the registry TOML file
    data_dir : str, optional
        data directory, defaults to the registry directory
    assets : list of str, optional
        restrict the run to these tickers
    overrides : dict, optional
        assumption overrides applied on top of the registry
    run_id : str, optional
        run id used in logs
    """
    def __init__(self, fairval, registry_path, data_dir=None, assets=None,
                 overrides=None, run_id=None):
        self.fairval = fairval
        self.registry_path = registry_path
        if data_dir is None:
            data_dir = os.path.dirname(os.path.abspath(registry_path))
        self.data_dir = data_dir
        self.requested = list(assets) if assets else None
        self.overrides = dict(overrides or {})
        self.run_id = run_id

        self.assumptions = None
        self.records = []
        self.assets = []
        self.file_errors = []
        self._counters = {
            name: fairval.telemetry.counter(name)
            for name in ['ingest.rows_accepted', 'ingest.rows_rejected', 'ingest.files_failed']
        }

    @property
    def valuation_config(self):
        return self.fairval.get_configuration_group('valuation')

    def load(self):
        """Load registry and data files. Assumption overrides are validated
        first and raise `DomainError` if invalid."""
        defaults = Assumptions.from_config(
            self.fairval.get_configuration_group('assumptions')
        )
        try:
            with open(self.registry_path) as f:
                records, assumptions, problems = read_registry(f, defaults)
        except OSError as ex:
            self._file_error(self.registry_path, None, 'cannot read registry: {}'.format(ex.strerror))
            self.assumptions = defaults.with_overrides(**self.overrides)
            return self

        self.assumptions = assumptions.with_overrides(**self.overrides)
        for asset_id, message in problems:
            self._file_error(self.registry_path, asset_id, message)

        # overrides may turn a valid registry rate into a divergent one
        records = self._check_convergence(records)

        if self.requested is not None:
            known = {r.id for r in records}
            for asset_id in self.requested:
                if asset_id not in known and not self._has_error(asset_id):
                    self._file_error(self.registry_path, asset_id, 'unknown asset')
            records = [r for r in records if r.id in self.requested]

        self.records = records
        for record in records:
            self.assets.append(self._load_asset(record))
        logger.info(
            self.run_id, 'Loaded {} assets from {}, {} file errors',
            len(self.assets), self.registry_path, len(self.file_errors),
        )
        return self

    def _check_convergence(self, records):
        valid = []
        for record in records:
            if record.discount_rate <= self.assumptions.perpetual_growth:
                self._file_error(
                    self.registry_path,
                    record.id,
                    'discount rate must exceed perpetual growth',
                )
            else:
                valid.append(record)
        return valid

    def _has_error(self, asset_id):
        return any(e.asset == asset_id for e in self.file_errors)

    def _file_error(self, path, asset_id, message):
        error = FileError(path, asset_id, message)
        logger.error(self.run_id, '{}', str(error))
        self.file_errors.append(error)
        self._counters['ingest.files_failed'].increment()

    def _load_asset(self, record):
        path = os.path.join(self.data_dir, record.data_path)
        daily = []
        try:
            with open(path) as f:
                if record.kind.is_token():
                    daily, report = parse_token_daily(f, record.id)
                else:
                    quarters, report = parse_firm_quarterly(f, record.id)
        except OSError as ex:
            self._file_error(path, record.id, 'cannot read data file: {}'.format(ex.strerror))
            return AssetData(record, path, None, [], [])
        except IngestError as ex:
            self._file_error(path, record.id, str(ex))
            return AssetData(record, path, None, [], [])

        if record.kind.is_token():
            quarters = aggregate_token_quarters(
                daily, self.valuation_config['market_cap_sampling']
            )

        self._counters['ingest.rows_accepted'].increment(report.rows_accepted)
        self._counters['ingest.rows_rejected'].increment(report.rows_rejected)
        for diagnostic in report.diagnostics:
            logger.warning(self.run_id, '{}: {}', record.id, str(diagnostic))
        return AssetData(record, path, report, daily, quarters)

    def iter_assets(self):
        """Iterate over assets data in registry order."""
        return iter(self.assets)

    def history_start(self):
        return Quarter.parse(self.valuation_config['history_start'])

    def base_revenue(self, asset_data):
        """Explicit registry base revenue, or twice the first half earnings
        of the spot year."""
        record = asset_data.record
        if record.base_revenue is not None:
            return record.base_revenue
        try:
            return annualize_first_half(asset_data.quarters, record.spot_date.year)
        except FairvalError as ex:
            raise FairvalError('{}: base revenue not resolvable, {}'.format(record.id, ex))
