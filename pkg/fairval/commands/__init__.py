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

__all__ = [
    'OutputTable', 'add_output_format_parser_arguments',
    'print_output_table', 'render_output_tables', 'CliCommand',
    'CliCommandWithRegistry',
]

from .command_output import (
    OutputTable,
    add_output_format_parser_arguments,
    print_output_table,
    render_output_tables,
)
from .commands import CliCommand, CliCommandWithRegistry
