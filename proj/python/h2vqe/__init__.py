# Copyright 2026 The h2vqe Authors
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

"""H2 ground-state energies by VQE on a statevector simulator.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports it.
"""

from ._core import (
    CircuitParseError,
    PauliSum,
    ResourceLimit,
    UnsupportedFeature,
    VqeConfig,
    exact_ground_energy,
    hamiltonian,
    hartree_fock_energy,
    parse_pauli_sum,
    run_circuit,
    sample_circuit,
    scan,
    single_point,
)

__all__ = [
    "CircuitParseError",
    "PauliSum",
    "ResourceLimit",
    "UnsupportedFeature",
    "VqeConfig",
    "exact_ground_energy",
    "hamiltonian",
    "hartree_fock_energy",
    "parse_pauli_sum",
    "run_circuit",
    "sample_circuit",
    "scan",
    "single_point",
]

__version__ = "0.1.0"
