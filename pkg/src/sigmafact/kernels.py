"""Backend selection for the Cayley-table kernels.

``closure(tab, seed, gens, start)``
    ``seed`` is an int bitmask of a set closed under right multiplication by
    ``gens[:start]`` (usually a subgroup with its generators).  Returns the
    bitmask of its closure under right multiplication by all of ``gens``.

``set_product(tab, left, right)``
    Bitmask of ``{a*b : a in left, b in right}`` for index sequences.

``tab`` is whatever ``prepare(table)`` returned for an ``n x n`` int table.
The compiled backend is used when importable; set ``SIGMAFACT_PURE_PYTHON=1``
to force the fallback.
"""
import os

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("SIGMAFACT_PURE_PYTHON"):
    backend = compiled
    BACKEND = "cython"
else:
    backend = python
    BACKEND = "python"

prepare = backend.prepare
closure = backend.closure
set_product = backend.set_product
