# Copyright 2026 The qwqca Authors
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

import cmath
import json
import math
import os
import subprocess

import pytest

import qwqca


def max_diff(a, b):
    return max(abs(x - y) for x, y in zip(a, b))


def test_graph_basics():
    g = qwqca.build_cycle(8)
    assert g.vertex_count == 8
    assert g.degree == 2
    assert g.arc_count == 16
    assert sorted(g.neighbors(0)) == [1, 7]
    t = qwqca.build_torus(4, 4)
    assert t.degree == 4
    assert len(t.edges()) == 32


def test_covers_validate():
    g = qwqca.build_cycle(10)
    assert qwqca.cover_violations(g, qwqca.cycle_cover(10)) == []
    assert qwqca.cover_violations(g, [qwqca.cycle_cover(10)[0]]) != []
    with pytest.raises(ValueError):
        qwqca.cycle_cover(7)


def test_reflection_exponentials_agree():
    h = [[0, 1], [1, 0]]
    a = qwqca.exp_reflection(h, math.pi / 3)
    b = qwqca.exp_series(h, math.pi / 3)
    assert max(abs(a[r][c] - b[r][c]) for r in range(2) for c in range(2)) < 1e-12
    assert qwqca.is_unitary(qwqca.balanced_coin())


def test_coined_walk_two_steps():
    g = qwqca.build_cycle(16)
    walk = qwqca.CoinedWalk(g, qwqca.balanced_coin(), [1, 0])
    psi = walk.evolve(walk.localized(0, 1), 2)
    p = walk.vertex_distribution(psi)
    assert p[2] == pytest.approx(0.25, abs=1e-15)
    assert p[0] == pytest.approx(0.5, abs=1e-15)
    assert p[14] == pytest.approx(0.25, abs=1e-15)


def test_automaton_matches_walk():
    g = qwqca.build_cycle(12)
    walk = qwqca.CoinedWalk(g, qwqca.balanced_coin(), [1, 0])
    automaton = walk.to_automaton()
    assert automaton.tiling_count == 3
    assert automaton.encoded_dimension == 24
    psi0 = walk.localized(0, 1)
    via_automaton = automaton.decode(automaton.evolve(automaton.encode(psi0), 9))
    assert max_diff(via_automaton, walk.evolve(psi0, 9)) < 1e-12


def test_staggered_walk_and_report():
    g = qwqca.build_cycle(16)
    walk = qwqca.StaggeredWalk(g, qwqca.cycle_cover(16), angles=[math.pi / 3, math.pi / 3])
    h = walk.hamiltonian(0)
    assert h[0][1] == pytest.approx(1.0)
    w0 = walk.to_automaton().tile_unitary(0)
    assert w0[0][0] == 1 and w0[3][3] == 1
    assert w0[1][1] == pytest.approx(cmath.exp(-1j * math.pi / 3) + 1j * math.sin(math.pi / 3))
    report = qwqca.equivalence_run(walk, t_max=25, n_states=5, seed=3)
    assert report["passed"]
    assert report["max_residual"] <= 1e-10
    assert len(report["residuals"]) == 26


def test_sigma_series():
    dist = [0.0] * 16
    dist[2], dist[0], dist[14] = 0.25, 0.5, 0.25
    assert qwqca.sigma_series([dist], 0)[0] == pytest.approx(math.sqrt(2.0))


@pytest.mark.skipif(not os.environ.get("QWQCA_CLI"), reason="CLI binary not provided")
def test_cli_translate(tmp_path):
    config = tmp_path / "walk.json"
    config.write_text(json.dumps({
        "graph": {"kind": "cycle", "params": {"n": 8}},
        "model": {"kind": "sqwh", "cover": "cycle", "angles": [0.5, 0.5]},
    }))
    out = tmp_path / "automaton.json"
    subprocess.run([os.environ["QWQCA_CLI"], "translate", "--config", str(config), "--out", str(out)], check=True)
    doc = json.loads(out.read_text())
    assert len(doc["automaton"]["tilings"]) == 2
