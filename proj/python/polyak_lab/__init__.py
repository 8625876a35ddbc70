"""Python access to the polyak-lab library.

Functions returning structured data hand back parsed JSON.
"""

import json

from . import _polyak_lab as _ext
from ._polyak_lab import PolyakError, diagram_key, enumerate, normalize_gauss_code, version

__all__ = [
    "PolyakError",
    "diagram_key",
    "enumerate",
    "evaluate",
    "gauss_code",
    "invariant_space",
    "normalize_gauss_code",
    "verify",
    "version",
]


def gauss_code(code):
    return json.loads(_ext.gauss_code_json(code))


def invariant_space(order, skeleton, profile="gpv"):
    return json.loads(_ext.invariant_space(order, skeleton, profile))


def evaluate(functional, code):
    """Value of a functional (dict as produced by invariant_space) on a knot, as "p/q"."""
    text = functional if isinstance(functional, str) else json.dumps(functional)
    return _ext.evaluate(text, code)


def verify(claim, order, skeleton="circle", flavor="arrow-signed"):
    return json.loads(_ext.verify(claim, order, skeleton, flavor))
