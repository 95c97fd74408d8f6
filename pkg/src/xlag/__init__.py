"""Exact and numerical tools for generalized and exceptional Laguerre polynomials."""
from .exactalg import ExactPoly, QuasiPoly, parse_rational, wronskian
from .glp import omega, omega_general, reduce
from .laguerre import laguerre
from .maya import MayaDiagram
from .partition import Partition, degree_set
from .xlp import laguerre_basis_expansion, xlp
from .zeros import ZeroSet, classify, roots, xlp_zeros

__version__ = "0.1.0"
