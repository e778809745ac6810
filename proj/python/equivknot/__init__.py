"""Equivariant unknotting of strongly invertible knots."""

import json

from ._core import (
    EquivknotError,
    ParseError,
    braids_equal,
    continued_fraction,
    inertia,
    is_intravergent,
    jm_fraction,
    normalize,
    signature_q2_jm,
    torus_braid,
    u4_equals_one,
)
from . import _core

__all__ = [
    "EquivknotError",
    "ParseError",
    "braids_equal",
    "continued_fraction",
    "inertia",
    "is_intravergent",
    "jm_fraction",
    "nonadditivity_report",
    "normalize",
    "signature",
    "signature_q2_jm",
    "torus_braid",
    "u4_equals_one",
    "unknot",
    "verify_log",
]


def unknot(strands, word, search_depth=None):
    """Move log (as a dict) unknotting a positive intravergent braid."""
    return json.loads(_core.unknot_json(strands, list(word), search_depth))


def verify_log(log, full=True):
    """Replay a move log dict; returns a dict with "passed" and diagnostics."""
    return _core.verify_log_json(json.dumps(log), full)


def signature(rows):
    n_plus, n_minus, _ = inertia(rows)
    return n_plus - n_minus


def nonadditivity_report(m_min=-100, m_max=100):
    return json.loads(_core.nonadditivity_report_json(m_min, m_max))
