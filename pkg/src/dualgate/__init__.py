"""dualgate: safety-gate bound stack and Lipschitz ball verifier.

Classification gates on overlapping safe/unsafe distributions obey hard
ceilings (per-step Holder bound, counting bound, exact finite-horizon
ceiling); a Lipschitz ball verifier escapes them with zero false accepts.
This package computes every bound, simulates the gate sequences, certifies
the toy controller, and reproduces the validation tables through the
``dualgate`` CLI.
"""

__version__ = "0.1.0"

from ._backend import NUMBA_ENABLED, backend_name

__all__ = ["NUMBA_ENABLED", "backend_name", "__version__"]
