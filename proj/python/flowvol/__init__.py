"""Exact volume polynomials of type-A flow polytopes on the nice chamber.

Multiplicities are given as the rank r and the entries m[i,j] in row-major
order (1,2), (1,3), ..., (1,r+1), (2,3), ...  Polynomials come back as dicts
mapping exponent tuples to fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import InductionError, InputError, OracleError, ResidueError

__all__ = [
    "InductionError",
    "InputError",
    "OracleError",
    "ResidueError",
    "annihilates",
    "count_lattice_points",
    "ehrhart_leading_coefficient",
    "evaluate",
    "kernel",
    "lift",
    "pde_operators",
    "run",
    "solution_space",
    "volume",
    "volume_string",
]


def _poly(terms):
    return {exps: Fraction(c) for exps, c in terms.items()}


def volume(rank, entries):
    return _poly(_core.volume_terms(rank, list(entries)))


def volume_string(rank, entries, latex=False):
    return _core.volume_string(rank, list(entries), latex)


def kernel(rank, entries):
    return _core.kernel_string(rank, list(entries))


def pde_operators(rank, entries):
    return _core.pde_operators(rank, list(entries))


def annihilates(rank, entries):
    return _core.annihilates(rank, list(entries))


def solution_space(rank, entries, degree):
    return [_poly(t) for t in _core.solution_space(rank, list(entries), degree)]


def lift(rank, entries):
    return _poly(_core.lift_terms(rank, list(entries)))


def count_lattice_points(rank, entries, a):
    return int(_core.count_lattice_points(rank, list(entries), list(a)))


def ehrhart_leading_coefficient(rank, entries, a, max_dilation=-1):
    return Fraction(_core.ehrhart_leading_coefficient(rank, list(entries), list(a), max_dilation))


def evaluate(poly, point):
    """Value of a polynomial dict at a point of Fractions or ints."""
    total = Fraction(0)
    for exps, c in poly.items():
        term = c
        for x, e in zip(point, exps):
            term *= Fraction(x) ** e
        total += term
    return total


def run(command, spec, latex=False, order_check=False):
    """Runs a CLI command on a spec string; returns (exit_status, report)."""
    return _core.run(command, spec, latex, order_check)
