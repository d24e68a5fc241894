"""Hamiltonian expressibility estimation and VQE correlation analysis."""

try:
    from ._vqx import *  # noqa: F401,F403  (installed package layout)
    from ._vqx import __doc__ as _doc
except ImportError:  # in-tree builds put _vqx next to the package on sys.path
    from _vqx import *  # noqa: F401,F403
    from _vqx import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
