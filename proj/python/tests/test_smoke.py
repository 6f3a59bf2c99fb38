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

import math

import numpy as np
import pytest

import h2vqe


def test_hamiltonian_has_fifteen_terms():
    h = h2vqe.hamiltonian(0.725)
    assert h.n_qubits == 4
    assert len(h) == 15
    labels = {s for s, _ in h.terms()}
    assert {"XXXX", "XXYY", "YYXX", "YYYY", "IIII"} <= labels
    assert h.coefficient("XXXX") == pytest.approx(h.coefficient("YYYY"), abs=1e-12)


def test_electronic_identity_excludes_nuclear_repulsion():
    full = h2vqe.hamiltonian(0.725).coefficient("IIII").real
    elec = h2vqe.hamiltonian(0.725, include_nuclear_repulsion=False).coefficient("IIII").real
    assert full - elec == pytest.approx(0.529177210903 / 0.725, abs=1e-9)


def test_dense_matrix_matches_exact_ground():
    h = h2vqe.hamiltonian(0.725)
    m = h.to_dense()
    assert m.shape == (16, 16)
    assert np.allclose(m, m.conj().T)
    assert np.linalg.eigvalsh(m)[0] == pytest.approx(h2vqe.exact_ground_energy(h), abs=1e-10)


def test_text_round_trip():
    h = h2vqe.hamiltonian(1.0)
    back = h2vqe.parse_pauli_sum(str(h))
    assert dict(back.terms()) == dict(h.terms())


def test_single_point_reaches_exact():
    cfg = h2vqe.VqeConfig()
    cfg.max_iterations = 100
    r = h2vqe.single_point(0.725, cfg)
    assert r["converged"]
    assert r["vqe_hartree"] == pytest.approx(r["exact_hartree"], abs=1e-6)
    assert r["hf_hartree"] > r["vqe_hartree"]
    assert len(r["optimal_params"]) == 3


def test_scan_rows_in_order():
    cfg = h2vqe.VqeConfig()
    cfg.max_iterations = 100
    rows = h2vqe.scan(0.5, 1.5, 0.5, cfg, jobs=2)
    assert [round(r["distance_angstrom"], 6) for r in rows] == [0.5, 1.0, 1.5]
    assert all(r["abs_error_hartree"] < 1e-6 for r in rows)


def test_config_rejects_sampling_with_lbfgs():
    cfg = h2vqe.VqeConfig()
    cfg.shots = 100
    with pytest.raises(ValueError):
        cfg.validate()
    with pytest.raises(ValueError):
        cfg.optimizer = "adam"
    cfg.optimizer = "nelder-mead"
    cfg.validate()


def test_bell_circuit():
    psi = h2vqe.run_circuit("q 2\nh 0\ncnot 0 1\n")
    r = 1 / math.sqrt(2)
    assert np.allclose(psi, [r, 0, 0, r])
    counts = h2vqe.sample_circuit("q 1\nx 0\n", 50, 3)
    assert counts == {"1": 50}


def test_parse_error_is_value_error():
    with pytest.raises(h2vqe.CircuitParseError) as info:
        h2vqe.run_circuit("q 1\nfoo 0\n")
    assert isinstance(info.value, ValueError)
    assert "line 2" in str(info.value)
