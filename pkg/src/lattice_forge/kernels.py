"""Backend selection for the classification kernels.

The JIT backend is used when numba imports cleanly; setting the environment
variable ``LATTICE_FORGE_DISABLE_NUMBA=1`` (or ``true``/``yes``) forces the
pure-numpy fallback.  Both backends implement identical contracts, so
results (flags and witnesses) do not depend on the choice.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("LATTICE_FORGE_DISABLE_NUMBA", "").strip().lower() in (
    "1",
    "true",
    "yes",
)

if _DISABLED:
    from . import _kernels_numpy as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:  # pragma: no cover - exercised only without numba
        from . import _kernels_numpy as _impl

distributive = _impl.distributive
neutral_median_all = _impl.neutral_median_all
neutral_generated_all = _impl.neutral_generated_all
modular_all = _impl.modular_all
cancellable_all = _impl.cancellable_all
lower_modular_all = _impl.lower_modular_all
cancellable_over_atom_hypothesis = _impl.cancellable_over_atom_hypothesis


def backend_name() -> str:
    return _impl.BACKEND
