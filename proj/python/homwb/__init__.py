"""Homology workbench: Smith forms, relative homology and the workbench DSL."""

import json

from ._homwb import InputError, StructuralError, canonical, digest, homology, random_spec, smith
from ._homwb import run as _run

__all__ = ["InputError", "StructuralError", "canonical", "digest", "homology", "random_spec", "run", "smith"]


def run(text, coeff=None, window=None, flavor=None):
    """Run a workbench spec. Returns (exit_code, report) with the report as a dict."""
    code, report = _run(text, coeff, window, flavor)
    return code, json.loads(report)
