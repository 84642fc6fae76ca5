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

"""Degree bounds for invariant Laurent monomials of diagonal abelian actions."""

import json

from ._core import (
    SCHEMA,
    InvarLatticeError,
    Support,
    beta_poly,
    beta_rational,
    contains,
    extension_index,
    family_support,
    family_sweep,
    family_value,
    gamma_poly,
    gamma_rational,
    hard_floor,
    lattice_basis,
    lattice_determinant,
    monomial_string,
    root_lower_bound,
    shell_points,
    successive_minima,
    variable_names,
)
from . import _core


def bounds(support, mode="both", budget=10_000_000, witnesses=True):
    """Full report for a support, as a dict with the CLI's JSON layout."""
    return json.loads(_core.report_json(support, mode, budget, witnesses))


def generator_witness(support, degree, geometry="cross", budget=10_000_000):
    """Generating exponent vectors of degree <= degree with their certificate."""
    return json.loads(_core.witness_json(support, degree, geometry, budget))


__all__ = [
    "SCHEMA",
    "InvarLatticeError",
    "Support",
    "beta_poly",
    "beta_rational",
    "bounds",
    "contains",
    "extension_index",
    "family_support",
    "family_sweep",
    "family_value",
    "gamma_poly",
    "gamma_rational",
    "generator_witness",
    "hard_floor",
    "lattice_basis",
    "lattice_determinant",
    "monomial_string",
    "root_lower_bound",
    "shell_points",
    "successive_minima",
    "variable_names",
]
