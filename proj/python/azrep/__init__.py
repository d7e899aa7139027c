"""Prime tensor ideals of pointwise finite-dimensional zigzag representations.

Thin convenience layer over the compiled ``_azrep`` module: the native API
speaks JSON strings; these wrappers speak dicts.
"""

import json

from . import _azrep

__all__ = [
    "barcode",
    "tensor",
    "support",
    "member",
    "witness",
    "certify",
    "verify_lemmas",
    "interval_rep",
]


def barcode(rep):
    return json.loads(_azrep.barcode(json.dumps(rep)))


def tensor(a, b):
    return json.loads(_azrep.tensor(json.dumps(a), json.dumps(b)))


def support(rep):
    return _azrep.support(json.dumps(rep))


def member(rep, point):
    return _azrep.member(json.dumps(rep), point)


def witness(rep):
    return json.loads(_azrep.witness(json.dumps(rep)))


def certify(cert):
    return json.loads(_azrep.certify(json.dumps(cert)))


def verify_lemmas(seed=0, scale=1):
    return json.loads(_azrep.verify_lemmas(seed, scale))


def interval_rep(lo, hi, orientation, vertices, field="gf2"):
    return json.loads(_azrep.interval_rep(lo, hi, orientation, list(vertices), field))
