"""Shintani cocycles, cone pairings and p-adic pseudo-measures.

Rationals travel as strings ("1/2"); lattice vectors as lists of ints.
Pseudo-measures and test functions are dicts in the JSON layouts of the CLI.
"""

import json

from . import _core
from ._core import ShintaniError

__all__ = [
    "ShintaniError",
    "pair",
    "pair_cone_function",
    "check_vh",
    "pm_eq",
    "pm_is_integer_constant",
    "deformed_cone_decompose",
    "psi_cdg",
    "phi",
    "verify_cocycle",
    "verify_equivariance",
    "is_measure_amice",
    "run",
]


def _q(q):
    return json.dumps([str(x) for x in q])


def pair(test_function, cone):
    return json.loads(_core.pair(json.dumps(test_function), json.dumps([[str(x) for x in g] for g in cone])))


def pair_cone_function(test_function, terms):
    return json.loads(_core.pair_cone_function(json.dumps(test_function), json.dumps(terms)))


def check_vh(test_function, ray):
    return _core.check_vh(json.dumps(test_function), _q(ray))


def pm_eq(a, b):
    return _core.pm_eq(json.dumps(a), json.dumps(b))


def pm_is_integer_constant(a, dim):
    c = _core.pm_is_integer_constant(json.dumps(a), dim)
    return None if c is None else int(c)


def deformed_cone_decompose(gens, q):
    return json.loads(_core.deformed_cone_decompose(json.dumps([[str(x) for x in g] for g in gens]), _q(q)))


def psi_cdg(matrices, q):
    return json.loads(_core.psi_cdg(json.dumps(matrices), _q(q)))


def phi(test_function, matrices, q):
    return json.loads(_core.phi(json.dumps(test_function), json.dumps(matrices), _q(q)))


def verify_cocycle(test_function, matrices, q):
    return _core.verify_cocycle(json.dumps(test_function), json.dumps(matrices), _q(q))


def verify_equivariance(test_function, g, matrices, q):
    return _core.verify_equivariance(json.dumps(test_function), json.dumps(g), json.dumps(matrices), _q(q))


def is_measure_amice(a, basis, p, precision=20, degree=12):
    return _core.is_measure_amice(json.dumps(a), json.dumps(basis), p, precision, degree)


def run(command, document, **config):
    """Runs a CLI command on a dict; returns (exit_code, report dict or None, error text)."""
    code, out, err = _core.run(command, json.dumps(document), **config)
    return code, (json.loads(out) if out else None), err
