"""Kernel backend selection.

The compiled extension is optional: if ``catpark._fastcore`` was built it is
used, otherwise the pure-Python kernels take over with identical behaviour.
``BACKEND`` reports which one is active; benchmarks/bench_kernels.py times
the two side by side.
"""

from catpark import _purecore

try:
    from catpark import _fastcore as _impl
except ImportError:  # extension not built; pure fallback
    _impl = _purecore

BACKEND = _impl.BACKEND

iter_bounded = _impl.iter_bounded
luck_histogram = _impl.luck_histogram
stat_quad_histogram = _impl.stat_quad_histogram
