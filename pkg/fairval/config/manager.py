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

"""Configuration Manager."""
import toml

from fairval.config.configuration import FairvalConfig
from fairval.config.options import (
    OptionsGroup,
    EnumOption,
    NumericOption,
    IntegerOption,
    StringOption,
    BoolOption,
)


MARKET_CAP_SAMPLINGS = ['quarter_end', 'quarter_average']


class ConfigurationManager(object):
    def __init__(self):
        self._initialized = False
        self._configuration = None
        self._initialize()

    def _initialize(self):
        config = FairvalConfig()

        for options in _default_groups():
            group = config.add_group(options.name)
            _assign_options_to_group(options, group)

        self._configuration = config
        self._initialized = True

    def update_configuration(self, user_config):
        """Update configuration from a dict or a TOML file path."""
        if not isinstance(user_config, dict):
            user_config = toml.load(user_config)
        self._configuration.update(user_config)

    @property
    def configuration(self):
        if not self._initialized:
            raise RuntimeError('ConfigurationManager was not initialized.')
        return self._configuration


def _logging_group():
    return OptionsGroup('logging', [
        EnumOption('level', ['NOTSET', 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], 'INFO'),
        BoolOption('stdout', default=True),
        StringOption('file', default=None),
    ])


def _assumptions_group():
    return OptionsGroup('assumptions', [
        NumericOption('revenue_growth', min_value=-1.0, strict_min=True, default=0.05),
        NumericOption('perpetual_growth', min_value=0.0, max_value=1.0,
                      strict_max=True, default=0.0239),
        IntegerOption('horizon_years', min_value=1, default=6),
        NumericOption('market_return', min_value=0.0, max_value=1.0,
                      strict_max=True, default=0.10),
    ])


def _valuation_group():
    return OptionsGroup('valuation', [
        NumericOption('band', min_value=0.0, max_value=1.0, strict_max=True, default=0.10),
        EnumOption('market_cap_sampling', MARKET_CAP_SAMPLINGS, 'quarter_end'),
        StringOption('history_start', default='2020Q4'),
    ])


def _golden_group():
    return OptionsGroup('golden', [
        NumericOption('token_tolerance', min_value=0.0, default=0.01),
        NumericOption('equity_tolerance', min_value=0.0, default=0.1),
        NumericOption('identity_tolerance', min_value=0.0, default=0.02),
        NumericOption('pv_relative_tolerance', min_value=0.0, default=1e-4),
        NumericOption('cqgr_tolerance', min_value=0.0, default=5e-4),
    ])


def _default_groups():
    return [
        _logging_group(),
        _assumptions_group(),
        _valuation_group(),
        _golden_group(),
    ]


def _assign_options_to_group(options, group):
    for option in options.iter():
        if isinstance(option, OptionsGroup):
            sub_group = group.add_group(option.name)
            _assign_options_to_group(option, sub_group)
        else:
            group.declare(option)
