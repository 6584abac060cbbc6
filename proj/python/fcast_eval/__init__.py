"""Multi-horizon point forecast evaluation.

Thin wrapper around the compiled _fcast extension: calendar-aware panels,
random-walk / rolling-AR benchmarks, forecast-error summary statistics, and
Diebold-Mariano equal-predictive-accuracy tests with fixed-b critical values.
"""

try:
    from . import _fcast as _ext  # installed layout
except ImportError:
    import _fcast as _ext  # build-tree layout

globals().update(
    {name: getattr(_ext, name) for name in dir(_ext) if not name.startswith("_")}
)
__all__ = sorted(name for name in dir(_ext) if not name.startswith("_"))
