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

"""fairval Math context."""
import numpy as np


class MathContext:
    def __init__(self):
        self.epsilon = 1e-9
        self.token_tolerance = 0.01
        self.equity_tolerance = 0.1
        self.identity_tolerance = 0.02
        self.pv_relative_tolerance = 1e-4
        self.cqgr_tolerance = 5e-4


mc = MathContext()


def is_close(a, b, atol=None, rtol=None):
    if atol is None and rtol is None:
        raise ValueError('One of atol and rtol must be specified')
    if atol is None:
        atol = 0.0
    if rtol is None:
        rtol = 0.0

    return bool(np.isclose(a, b, atol=atol, rtol=rtol))
