"""Exact spin Kerov polynomial computations (C++ core)."""

try:
    from ._spinkerov import *  # noqa: F401,F403
    from ._spinkerov import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree test runs find the module top-level
    from _spinkerov import *  # noqa: F401,F403
    from _spinkerov import __version__  # noqa: F401
