"""Finite bounded posets with antitone involution."""

import json

from ._qposet import (
    OrthoPoset,
    QposetError,
    adjoint_exists,
    arrow_table,
    check_backward_op,
    check_forward_op,
    check_mpo,
    check_op,
    class_names,
    enumerate,
    export_dot,
    fixture,
    fixture_names,
    imp,
    parse,
    serialize,
    sweep_json,
    theorem_suite,
)


def sweep(max_size, jobs=1):
    """Sweep report as a dict."""
    return json.loads(sweep_json(max_size, jobs))


__all__ = [
    "OrthoPoset",
    "QposetError",
    "adjoint_exists",
    "arrow_table",
    "check_backward_op",
    "check_forward_op",
    "check_mpo",
    "check_op",
    "class_names",
    "enumerate",
    "export_dot",
    "fixture",
    "fixture_names",
    "imp",
    "parse",
    "serialize",
    "sweep",
    "sweep_json",
    "theorem_suite",
]
