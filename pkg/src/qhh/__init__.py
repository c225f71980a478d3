"""Exact Hochschild cohomology of finite-dimensional quiver algebras.

Pipeline: relations → minimal generators → Groebner basis → nontip basis of
Λ = KQ/I → f^0..f^3 and the maps g, A1, A2, A3 of the minimal bimodule
resolution → ranks of the induced cochain maps.  A reduced bar complex
gives an independent check.
"""

from .field import GF, QQ, PrimeField, Rationals, parse_field
from .quiver import Path, Quiver, compose, CompositionError
from .free import FreeElement
from .groebner import (GroebnerBasis, RewriteRule, complete, minimize_generators,
                       expand_cofactor, IncompleteBasisError, DimensionCapError)
from .algebra import AlgebraBasis
from .parser import Presentation, parse_algebra, parse_element, format_algebra, ParseError, SemanticError
from .resolution import (GeneratorSet, BimoduleMap, Resolution, build_resolution, compute_f3,
                         verify_f3, compose_check, map_A1, map_A2, map_A3, map_g)
from .cohomology import Cochains, HHReport, cochain_basis, induce_matrix, hh_dim
from .linalg import SparseMatrix, rank, rank_and_kernel
from .bar import RelativeBarComplex, hh_via_bar, OracleTooLargeError
from . import corpus

__version__ = "0.1.0"
