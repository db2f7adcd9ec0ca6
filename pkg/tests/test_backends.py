"""The JIT and pure-numpy kernel backends must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from lattice_forge import _kernels_numpy as np_impl
from lattice_forge import corpus

numba_impl = pytest.importorskip("lattice_forge._kernels_numba")


def _sample_lattices(catalog_lattices):
    sample = list(corpus.enumerate_small(6))
    sample += [corpus.random_lattice(9 + s % 10, s) for s in range(12)]
    sample += list(catalog_lattices.values())
    return sample


def test_backends_agree(catalog_lattices):
    for L in _sample_lattices(catalog_lattices):
        for fn in ("neutral_median_all", "cancellable_all"):
            flags_a, wy_a, wz_a = getattr(np_impl, fn)(L.join, L.meet)
            flags_b, wy_b, wz_b = getattr(numba_impl, fn)(L.join, L.meet)
            assert (flags_a == flags_b).all(), fn
            assert (wy_a == wy_b).all() and (wz_a == wz_b).all(), fn
        for fn in ("modular_all", "lower_modular_all"):
            flags_a, wy_a, wz_a = getattr(np_impl, fn)(L.join, L.meet, L.leq)
            flags_b, wy_b, wz_b = getattr(numba_impl, fn)(L.join, L.meet, L.leq)
            assert (flags_a == flags_b).all(), fn
            assert (wy_a == wy_b).all() and (wz_a == wz_b).all(), fn
        assert (
            np_impl.neutral_generated_all(L.join, L.meet)
            == numba_impl.neutral_generated_all(L.join, L.meet)
        ).all()
        assert np_impl.distributive(L.join, L.meet) == numba_impl.distributive(
            L.join, L.meet
        )


def test_hypothesis_kernel_agrees(catalog_lattices):
    for L in (catalog_lattices["boolean3"], catalog_lattices["N5"], catalog_lattices["M3"]):
        for a in L.atoms():
            for x in range(L.n):
                assert np_impl.cancellable_over_atom_hypothesis(
                    L.join, L.meet, x, a
                ) == numba_impl.cancellable_over_atom_hypothesis(L.join, L.meet, x, a)


def test_env_flag_selects_numpy_backend():
    code = "from lattice_forge import kernels; print(kernels.backend_name())"
    env = dict(os.environ, LATTICE_FORGE_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numpy"
    env.pop("LATTICE_FORGE_DISABLE_NUMBA")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numba"
