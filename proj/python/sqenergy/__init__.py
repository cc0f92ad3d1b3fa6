# Copyright 2026 The sqenergy Authors
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

"""Positive and negative square energies of unicyclic graphs."""

import json

from . import _core
from ._core import (
    Error,
    Graph,
    brute_force_matching_counts,
    char_poly_leverrier,
    char_poly_unicyclic,
    classify_unicyclic,
    cycle_graph,
    delta_integral,
    eigenvalues,
    graph_id,
    is_connected,
    matching_counts,
    matching_poly,
    parse_edge_list,
    parse_graph6,
    random_unicyclic,
    square_energies,
    theta_closed,
    theta_eigen,
    to_edge_list,
    to_graph6,
)

__version__ = "0.1.0"


def analyze(graph):
    """Full analysis report as a dict."""
    return json.loads(_core.analyze_json(graph))


def sweep_cycles(k_max):
    """Rows and summary comparing C_3..C_k_max against the closed form."""
    return json.loads(_core.sweep_cycles_json(k_max))


def exhaustive_campaign(n_max, n_min=3, workers=1):
    return json.loads(_core.exhaustive_campaign_json(n_max, n_min, workers))


def random_campaign(n_min, n_max, k="odd", trials=100, seed=0, workers=1):
    """k is an int, "odd" or "any"."""
    return json.loads(_core.random_campaign_json(n_min, n_max, str(k), trials, seed, workers))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
