"""Conifold transitions of toric Fano threefolds.

Polytopes are given as lists of integer vertex coordinates. Results are plain
Python objects; integers too large for 64 bits arrive as decimal strings in
the JSON-shaped results, exactly as the command-line tool prints them.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ConifoldError

__all__ = [
    "ConifoldError",
    "periods",
    "transition",
    "resolve",
    "match",
    "find_recurrence",
    "period_term_direct",
    "degree",
    "is_reflexive",
]


def periods(vertices, dmax=20, prune=True, recurrence=False, threads=1):
    return json.loads(_core.periods_json(vertices, dmax, prune, recurrence, threads))


def transition(vertices, mode="fano", threads=1):
    return json.loads(_core.transition_json(vertices, mode, threads))


def resolve(vertices):
    return json.loads(_core.resolve_json(vertices))


def match(vertices, db_path, dmax=20):
    return json.loads(_core.match_json(vertices, str(db_path), dmax))


def find_recurrence(terms, max_order=4, max_degree=3, holdout=5):
    return json.loads(_core.recurrence_json(list(terms), max_order, max_degree, holdout))


def period_term_direct(vertices, d):
    return _core.period_term_direct(vertices, d)


def degree(vertices):
    num, den = _core.degree(vertices)
    return Fraction(num, den)


def is_reflexive(vertices):
    return _core.is_reflexive(vertices)
