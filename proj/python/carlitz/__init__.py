"""Exact Carlitz torsion-field computations.

Thin wrapper over the compiled ``_carlitz`` module.  ``run`` returns the same
JSON document the command-line tool writes with ``--json``.
"""

import json

from ._carlitz import (
    ConfigError,
    __version__,
    carlitz_coeffs,
    commands,
    describe,
    omega,
    valuation,
)
from . import _carlitz

__all__ = [
    "ConfigError",
    "Report",
    "__version__",
    "carlitz_coeffs",
    "commands",
    "describe",
    "omega",
    "run",
    "valuation",
]


class Report:
    """Result of one command: the JSON document, the verdict and text lines."""

    def __init__(self, text, passed, lines):
        self.text = text
        self.data = json.loads(text)
        self.passed = passed
        self.lines = list(lines)

    def checks(self):
        return {c["id"]: c["pass"] for c in self.data["checks"]}

    def __repr__(self):
        cfg = self.data["config"]
        return "Report(%s, q=%s, p=%s, n=%s, pass=%s)" % (
            self.data["command"], cfg["q"], cfg["p"], cfg["n"], self.passed)


def run(command, q, p, n=0, digits=40, series_degree=8, analytic=True):
    """Run ``command`` (see ``commands()``) on the field of level ``n``."""
    text, passed, lines = _carlitz.run_json(command, q, p, n, digits, series_degree, analytic)
    return Report(text, passed, lines)
