"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
bitset implementation. Set GROUPDIFF_PURE=1 to force the fallback (the
benchmark and the cross-checking tests import both backends directly).
"""

import os

from . import pure

if os.environ.get("GROUPDIFF_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities
all_pairs_distances = _impl.all_pairs_distances
find_dominating_set = _impl.find_dominating_set
enumerate_dominating_sets = _impl.enumerate_dominating_sets


def compiled_available() -> bool:
    try:
        from . import _speedups  # noqa: F401
    except ImportError:
        return False
    return True
