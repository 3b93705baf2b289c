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

"""fairval root object. Contains global state."""
import datetime

from fairval.config import ConfigurationManager
from fairval.math import mc
from fairval.telemetry import Telemetry
from fairval.logging import (
    get_logger,
    apply_config as apply_log_config,
)


class Fairval:
    """Contains information about the current instance of fairval."""
    def __init__(self):
        self._config_manager = ConfigurationManager()
        self._config = self._config_manager.configuration
        self._telemetry = Telemetry()
        self.logger = get_logger('fairval')
        apply_log_config(self._config.logging)

    def update_configuration(self, user_config):
        """Update fairval configuration with `user_config`."""
        self._config_manager.update_configuration(user_config)
        self._config = self._config_manager.configuration
        apply_log_config(self._config.logging)
        _update_math_context(self.get_configuration_group('golden'))

    def get_configuration_group(self, group):
        """Get the specified configuration `group`."""
        parts = group.split('.')
        config = self._config
        for part in parts:
            config = config.get(part, None)
            if config is None:
                raise ValueError(
                    'Invalid configuration group "{}"'.format(group)
                )
        return config

    @property
    def configuration(self):
        return self._config

    @property
    def telemetry(self):
        return self._telemetry


def create_run_id(name, now=None):
    """Run ids are the command name followed by a UTC timestamp."""
    if now is None:
        now = datetime.datetime.utcnow()
    return '{}_{}'.format(name, now.strftime('%Y%m%dT%H%M%S'))


def _update_math_context(golden):
    mc.token_tolerance = golden.token_tolerance
    mc.equity_tolerance = golden.equity_tolerance
    mc.identity_tolerance = golden.identity_tolerance
    mc.pv_relative_tolerance = golden.pv_relative_tolerance
    mc.cqgr_tolerance = golden.cqgr_tolerance
