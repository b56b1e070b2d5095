"""Minimality analysis of closed relations on finite sets and on [0,1].

Relations are given as dicts (or JSON text) in the relation file format, e.g.
``{"type": "finite", "n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}``.
Reports come back as dicts.
"""

import json

from . import _core
from ._core import ConstraintError, Error, ParseError

__all__ = [
    "ConstraintError",
    "Error",
    "ParseError",
    "audit",
    "classify",
    "closure",
    "conjugate",
    "corpus_dump",
    "corpus_names",
    "corpus_verify",
    "kinds",
    "max_gap",
    "orbit",
    "probe",
    "serialize",
    "witness",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def kinds():
    """The sixteen kind names in report order."""
    return _core.kinds()


def serialize(relation):
    """Canonical compact JSON text of a relation."""
    return _core.serialize(_text(relation))


def classify(relation, steps=2000, epsilon=1e-2, seed=0):
    """Exact flags for a finite relation, a labeled diagnostic for segments."""
    return json.loads(_core.classify(_text(relation), steps, epsilon, seed))


def orbit(relation, x0=0.0, steps=10000, policy="first", seed=0, direction="forward", epsilon=1e-2):
    return json.loads(_core.orbit(_text(relation), x0, steps, policy, seed, direction, epsilon))


def witness(relation, kind, epsilon=1e-2):
    return json.loads(_core.witness(_text(relation), kind, epsilon))


def closure(relation, mode="inner", x0=0.0, epsilon=None, max_iter=200):
    return json.loads(_core.closure(_text(relation), mode, x0, epsilon, max_iter))


def audit(n_max=7, exhaustive_n=3, samples=10000, seed=0, functional_only=False):
    return json.loads(_core.audit(n_max, exhaustive_n, samples, seed, functional_only))


def probe(pairs=(), n_max=7, exhaustive_n=3, samples=10000, seed=0, functional_only=False):
    """pairs: "stronger:weaker" strings; the 3-vs-2 pairs when empty."""
    return json.loads(_core.probe(list(pairs), n_max, exhaustive_n, samples, seed, functional_only))


def conjugate(relation, phi, steps=2000, epsilon=1e-2, seed=0):
    return json.loads(_core.conjugate(_text(relation), _text(phi), steps, epsilon, seed))


def corpus_names():
    return _core.corpus_names()


def corpus_dump(name, depth=10, lambda_=None):
    if lambda_ is None:
        return json.loads(_core.corpus_dump(name, depth))
    return json.loads(_core.corpus_dump(name, depth, lambda_))


def corpus_verify(name, depth=10, lambda_=None, steps=10000, epsilon=1e-2, seed=0):
    args = {"depth": depth, "steps": steps, "epsilon": epsilon, "seed": seed}
    if lambda_ is not None:
        args["lambda_"] = lambda_
    return json.loads(_core.corpus_verify(name, **args))


def max_gap(points):
    return _core.max_gap(list(points))
