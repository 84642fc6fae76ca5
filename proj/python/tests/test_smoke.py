# Copyright 2026 The invar-lattice Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools
import math

import pytest

import invar_lattice as il


@pytest.fixture
def z7():
    return il.Support(modulus=7, chars=[[1], [2], [4]])


def test_support(z7):
    assert z7.m == 3
    assert z7.group_order == 7
    assert z7.effective_order == 7
    assert z7.chars == [[1], [2], [4]]
    assert il.Support(modulus=9, chars=[[-1], [1]]).chars == [[8], [1]]
    assert il.Support(factors=[3, 3], chars=[[1, 0], [0, 1]]).group_order == 9


def test_degree_bounds(z7):
    assert il.gamma_rational(z7) == 3
    assert il.beta_rational(z7) == 3
    assert il.gamma_poly(z7) == 4
    assert il.beta_poly(z7) == 4
    assert il.successive_minima(z7) == [3, 3, 3]
    assert il.extension_index(z7, 3, "simplex") == math.inf
    assert il.extension_index(z7, 4, "simplex") == 1
    assert il.extension_index(z7, 3, "cross") == 1


def test_lattice_matches_congruence(z7):
    assert il.lattice_determinant(z7) == 7
    for a in itertools.product(range(-3, 4), repeat=3):
        expected = (a[0] + 2 * a[1] + 4 * a[2]) % 7 == 0
        assert il.contains(z7, list(a)) == expected


def test_shells(z7):
    shell = il.shell_points(z7, 3, "cross")
    assert shell == [[-2, 1, 0], [-1, -1, -1], [-1, 0, 2], [0, -2, 1],
                     [0, 2, -1], [1, 0, -2], [1, 1, 1], [2, -1, 0]]
    assert il.shell_points(z7, 3, "simplex") == [[1, 1, 1]]


def test_report(z7):
    report = il.bounds(z7)
    assert report["schema"] == il.SCHEMA == "invar-lattice/1"
    assert report["beta_r"] == 3
    assert report["beta_poly"] == 4
    assert report["theoretical"]["hard_floor"] == 3
    assert "x1^2/x2" in report["witnesses"]["rational"]["monomials"]
    assert il.bounds(z7, mode="rational", witnesses=False)["beta_poly"] is None


def test_witness(z7):
    w = il.generator_witness(z7, 3)
    assert w["generators"] == [[1, 1, 1], [0, 2, -1], [2, -1, 0]]
    assert il.monomial_string([1, -1, -1], il.variable_names(z7)) == "x1/(x2*x4)"


def test_family():
    rows = il.family_sweep("3:12", "1:4", workers=2)
    assert all(r["match"] for r in rows)
    assert il.family_value(9, 2) == 9
    assert il.family_support(7, 4).chars == [[1], [6], [2], [5]]


def test_errors(z7):
    with pytest.raises(il.InvarLatticeError) as info:
        il.Support(modulus=7, chars=[[0]])
    assert info.value.code == "trivial_representation"
    with pytest.raises(il.InvarLatticeError) as info:
        il.generator_witness(z7, 3, "simplex")
    assert info.value.code == "insufficient_degree"
    with pytest.raises(il.InvarLatticeError) as info:
        il.beta_rational(il.Support(modulus=97, chars=[[1], [2], [3], [5], [7]]), budget=50)
    assert info.value.code == "budget_exceeded"
    with pytest.raises(il.InvarLatticeError):
        il.Support(modulus=7, factors=[7], chars=[[1]])
