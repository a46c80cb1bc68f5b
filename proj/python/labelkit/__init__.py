"""Python bindings for labelkit. Node ids are 0-based."""

import json as _json

from ._labelkit import *  # noqa: F401,F403
from ._labelkit import (
    __version__,
    _audit,
    _benchmark,
    _check_gallery,
    _gallery,
)


def audit(claim="all", seed=0, n_max=5, quick=False):
    """Run claim audits; returns a list of result dicts with a 'verdict' key."""
    return _json.loads(_audit(claim, seed, n_max, quick))


def gallery():
    """The verified counterexample gallery as a list of dicts."""
    return _json.loads(_gallery())


def check_gallery(items):
    """Re-verify stored gallery entries; raises ValidationError on mismatch."""
    return _check_gallery(_json.dumps(items))


def benchmark(graph, labelings=("no", "zo", "drnl"), seeds=(0, 1, 2, 3, 4), hops=1, depth=3, epochs=50):
    """Link prediction AUC per labeling; returns the run manifest dict."""
    return _json.loads(_benchmark(graph, list(labelings), list(seeds), hops, depth, epochs))
