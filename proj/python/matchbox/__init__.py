"""Matching Rota-Baxter families, their splittings, and checks.

Thin wrapper over the _matchbox extension: the extension returns canonical
JSON text (identical to the CLI's --json output); this module parses it into
plain dicts.
"""

import json

from ._matchbox import (
    MatchboxError,
    aybe_search_json,
    aybe_verify_json,
    check_json,
    count_pbt,
    dend_mul_json,
    enumerate_json,
    pipeline_json,
    prelie_mul_json,
)

__all__ = [
    "MatchboxError",
    "aybe_search",
    "aybe_verify",
    "check",
    "count_pbt",
    "dend_mul",
    "enumerate_trees",
    "pipeline",
    "prelie_mul",
]


def enumerate_trees(kind="pbt", n=3, dec="a", omega="r,g", cap=100000):
    return json.loads(enumerate_json(kind, n, dec, omega, cap))


def dend_mul(op, idx, lhs, rhs, dec="a", omega="r,g"):
    return json.loads(dend_mul_json(op, idx, lhs, rhs, dec, omega))


def prelie_mul(idx, lhs, rhs, dec="a", omega="r,g"):
    return json.loads(prelie_mul_json(idx, lhs, rhs, dec, omega))


def check(structure, axioms, derive=(), exhaustive=False, max_vertices=2, seed=1,
          trials=200, threads=0, dec="a", omega="r,g", len=6, dim=2):
    return json.loads(check_json(structure, axioms, list(derive), exhaustive,
                                 max_vertices, seed, trials, threads, dec, omega, len, dim))


def pipeline(source, steps, seed=1, trials=100, threads=0, omega="r,g", len=6, dim=2):
    return json.loads(pipeline_json(source, list(steps), seed, trials, threads, omega, len, dim))


def aybe_search(dim=2, weight="0", support="E12xE11,E12xE12", grid="-1,0,1",
                family=False, cap=200000):
    return json.loads(aybe_search_json(dim, weight, support, grid, family, cap))


def aybe_verify(dim, weight, r, s=None):
    r_text = r if isinstance(r, str) else json.dumps(r)
    s_text = "" if s is None else (s if isinstance(s, str) else json.dumps(s))
    return json.loads(aybe_verify_json(dim, weight, r_text, s_text))
