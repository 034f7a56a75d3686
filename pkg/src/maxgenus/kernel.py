"""Selects the enumeration backend: compiled extension or pure Python.

The compiled kernel (maxgenus._speedups, built from _speedups.pyx) is used
when importable; otherwise the pure-Python reference (maxgenus._pykernel)
takes over with identical semantics.  Set MAXGENUS_PURE_PYTHON=1 to force the
fallback, e.g. for the benchmark in benchmarks/bench_kernel.py or to rule the
extension out while debugging.
"""

from __future__ import annotations

import os

from . import _pykernel

if os.environ.get("MAXGENUS_PURE_PYTHON", "0") not in ("", "0"):
    _backend = _pykernel
else:
    try:
        from . import _speedups as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _pykernel

COMPILED: bool = bool(_backend.COMPILED)

#: Hot loop: minimum odd co-tree component count over all spanning trees.
scan_deficiency = _backend.scan_deficiency

#: Lazy tree stream; always pure Python (generators stay cheap to suspend).
iter_trees = _pykernel.iter_trees


def backend_name() -> str:
    return "compiled" if COMPILED else "pure-python"
