"""Kernel backend selection: numba JIT by default, pure NumPy/Python on demand.

The hot numeric loops in this package (trajectory rollouts, batched margin
checks, big Monte Carlo sweeps) are written twice: once as scalar loops that
numba compiles, and once as vectorized NumPy fallbacks. Which path runs is
decided at import time:

  * ``DUALGATE_NUMBA=0`` (or ``false``/``off``) forces the NumPy fallback.
  * If numba is not importable, the fallback is used automatically.
  * Otherwise the njit path is used (``cache=True``, so compilation cost is
    paid once per environment).

``benchmarks/bench_kernels.py`` times the two paths against each other.
"""

from __future__ import annotations

import os

_FALSY = {"0", "false", "off", "no"}


def _env_wants_numba() -> bool:
    return os.environ.get("DUALGATE_NUMBA", "1").strip().lower() not in _FALSY


NUMBA_ENABLED = False
if _env_wants_numba():
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


def jit_scalar(func):
    """Compile a scalar math function with numba, or return it unchanged."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func


def jit_kernel(func):
    """Compile an array kernel with numba, or return it unchanged."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
