"""Gauss-code invariants for virtual knots and links."""

import json as _json

from ._vknot import (
    __version__,
    canonical,
    compatible,
    connected_sum,
    defects,
    genus_bounds,
    invariants_json,
    odd_writhe,
    polynomial,
    reduce_null,
    scramble,
    seifert,
    smooth,
    switch_crossing,
    transform,
    verify_trace,
    writhe,
)


def invariants(code, pins=None):
    """Full invariant report as a dict."""
    return _json.loads(invariants_json(code, pins))


__all__ = [
    "__version__",
    "canonical",
    "compatible",
    "connected_sum",
    "defects",
    "genus_bounds",
    "invariants",
    "invariants_json",
    "odd_writhe",
    "polynomial",
    "reduce_null",
    "scramble",
    "seifert",
    "smooth",
    "switch_crossing",
    "transform",
    "verify_trace",
    "writhe",
]
