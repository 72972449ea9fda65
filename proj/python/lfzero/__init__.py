"""Zero sums, explicit-formula closures, and Li coefficients.

The compiled core lives in ``_lfzero``.  Installed wheels place it inside
this package; the development build tree leaves it next to the package on
``PYTHONPATH``, so fall back to a flat import there.
"""

try:
    from ._lfzero import *  # noqa: F401,F403
    from ._lfzero import __doc__ as _core_doc
except ImportError:
    from _lfzero import *  # noqa: F401,F403
    from _lfzero import __doc__ as _core_doc

__doc__ += "\n\n" + (_core_doc or "")
__version__ = "0.1.0"
