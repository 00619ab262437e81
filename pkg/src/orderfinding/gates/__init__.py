# Copyright 2026 The orderfinding authors.
#
# For a full list of individual contributors, please see the commit history.
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
"""Gates."""
from .gate import Gate, QUBIT_COUNT
from .hadamard import Hadamard
from .not_gate import NotGate
from .z_rotation import ZRotation
from .y_rotation import YRotation
from .conditional_z_rotation import ConditionalZRotation
from .controlled_not import ControlledNot
from .controlled_unitary import ControlledUnitary
