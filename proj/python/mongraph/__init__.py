"""Monodromy graphs and algebraic maps of finite permutation groups.

Permutations use 1-based cycle notation; an empty subgroup string is the
trivial subgroup. Results come back as plain dicts.
"""

import json

from ._mongraph import MongraphError, default_bound
from . import _mongraph as _core

__all__ = [
    "MongraphError",
    "mon",
    "algebraic_map",
    "census",
    "verify",
    "represent",
    "are_isomorphic",
    "is_planar",
]


def _graph_text(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def mon(group, subgroup, rho, tau, bound=default_bound):
    return json.loads(_core.mon_json(group, subgroup, rho, tau, bound))


def algebraic_map(group, subgroup, rho, tau, bound=default_bound):
    return json.loads(_core.map_json(group, subgroup, rho, tau, bound))


def census(group, planar_atlas=False, require_involution=False, bound=default_bound):
    return json.loads(_core.census_json(group, planar_atlas, require_involution, bound))


def verify(group, transversals=20, seed=20240611):
    """Returns (ok, report text)."""
    return _core.verify(group, transversals, seed)


def represent(graph, bound=default_bound):
    return json.loads(_core.represent_json(_graph_text(graph), bound))


def are_isomorphic(a, b):
    return _core.are_isomorphic(_graph_text(a), _graph_text(b))


def is_planar(graph):
    return _core.is_planar(_graph_text(graph))
