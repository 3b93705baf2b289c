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

"""fairval Configuration module."""

__all__ = [
    'FairvalConfig', 'ConfigurationManager', 'OptionsGroup', 'Option',
    'NumericOption', 'IntegerOption', 'BoolOption', 'StringOption',
    'EnumOption',
]

from .configuration import FairvalConfig
from .manager import ConfigurationManager
from .options import (
    OptionsGroup,
    Option,
    NumericOption,
    IntegerOption,
    BoolOption,
    StringOption,
    EnumOption,
)
