"""Exact billiards on triangular-grid polygons."""

try:
    from tribill._tribill import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree build: extension sits next to the package
    from _tribill import *  # noqa: F401,F403
