"""Decomposition and cellularity of perfect chain complexes over Z/p^2 and F_p[X]/(X^2).

Complexes are plain dicts in the canonical file format::

    {"ring": "zpsq:2", "ranks": [1, 1], "differentials": [[[[0, 1]]]]}

where differentials[n-1] is d_n as rows of [a, b] pairs meaning a + b*r.
"""

import json

from . import _cellx
from ._cellx import GuardRefusalError, InvalidComplexError

__all__ = [
    "GuardRefusalError",
    "InvalidComplexError",
    "interval",
    "sphere",
    "disk",
    "validate",
    "homology",
    "brute_homology",
    "minimize",
    "decompose",
    "is_cellular",
    "is_acyclic_over",
    "generator_relation",
    "shift",
    "direct_sum",
    "tensor",
    "hom_complex",
    "cone",
    "cross_check",
    "random_complex",
    "random_extension",
]


def _enc(x):
    return x if isinstance(x, str) else json.dumps(x)


def interval(ring, i, j):
    return json.loads(_cellx.interval(ring, i, j))


def sphere(ring, n):
    return json.loads(_cellx.sphere(ring, n))


def disk(ring, n):
    return json.loads(_cellx.disk(ring, n))


def validate(x):
    """None when d∘d = 0, otherwise (degree, message) for the first failure."""
    return _cellx.validate(_enc(x))


def homology(x):
    """List of {"free": a, "residue": b}, one per degree: H_n = R^a + k^b."""
    return json.loads(_cellx.homology(_enc(x)))


def brute_homology(x, max_elements=4096):
    return json.loads(_cellx.brute_homology(_enc(x), max_elements))


def minimize(x):
    return json.loads(_cellx.minimize(_enc(x)))


def decompose(x):
    return json.loads(_cellx.decompose(_enc(x)))


def is_cellular(x, a):
    return json.loads(_cellx.is_cellular(_enc(x), _enc(a)))


def is_acyclic_over(x, a):
    return json.loads(_cellx.is_acyclic_over(_enc(x), _enc(a)))


def generator_relation(i, j, i2, j2):
    return _cellx.generator_relation(i, j, i2, j2)


def shift(x, n):
    return json.loads(_cellx.shift(_enc(x), n))


def direct_sum(x, y):
    return json.loads(_cellx.direct_sum(_enc(x), _enc(y)))


def tensor(x, y):
    return json.loads(_cellx.tensor(_enc(x), _enc(y)))


def hom_complex(x, y):
    return json.loads(_cellx.hom_complex(_enc(x), _enc(y)))


def cone(f):
    """f is {"source": ..., "target": ..., "mats": [...]}."""
    return json.loads(_cellx.cone(_enc(f)))


def cross_check(x, a, guard=1 << 20):
    return json.loads(_cellx.cross_check(_enc(x), _enc(a), guard))


def random_complex(ring, seed, max_degree=4, max_rank=4, allow_units=False):
    return json.loads(_cellx.random_complex(ring, seed, max_degree, max_rank, allow_units))


def random_extension(x, z, seed):
    return json.loads(_cellx.random_extension(_enc(x), _enc(z), seed))
