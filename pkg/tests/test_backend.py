"""Backend equivalence: the NumPy fallback reproduces the numba path bitwise."""

import os
import subprocess
import sys
import textwrap

from kpzlab import backend

_PROBE = textwrap.dedent("""
    import json
    import numpy as np
    from kpzlab import backend, s6v
    from kpzlab.asep import kinetic

    occ = kinetic.step_current_samples(0.4, 3.0, 4, 11)
    bc = s6v.BoundaryCondition.packed(3)
    field = s6v.sample(bc, 0.5, 0.4, 3, master_seed=7, replica=2)
    ring = kinetic.ring_stationary_sample({1: 4, 2: 2}, 10, 12.0, 5)
    print(json.dumps({
        "backend": backend.BACKEND,
        "h": occ.tolist(),
        "grid": field.grid.tolist(),
        "ring": list(ring.colors),
    }))
""")


def _probe(env_backend):
    env = dict(os.environ, KPZLAB_BACKEND=env_backend)
    out = subprocess.run([sys.executable, "-c", _PROBE], env=env,
                         capture_output=True, text=True, check=True)
    import json

    return json.loads(out.stdout.splitlines()[-1])


def test_backend_selected():
    assert backend.BACKEND in ("numba", "numpy")


def test_numpy_fallback_bit_identical():
    a = _probe("numpy")
    assert a["backend"] == "numpy"
    b = _probe("auto")
    assert a["h"] == b["h"]
    assert a["grid"] == b["grid"]
    assert a["ring"] == b["ring"]


def test_invalid_backend_rejected():
    env = dict(os.environ, KPZLAB_BACKEND="cuda")
    r = subprocess.run([sys.executable, "-c", "import kpzlab"], env=env,
                       capture_output=True, text=True)
    assert r.returncode != 0
