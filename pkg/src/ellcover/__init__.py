"""p-ranks of cyclic prime-degree covers of the projective line.

Two independent p-rank computations (Cartier operator matrix and a
zeta-function point-counting oracle), the moduli combinatorics of inertia
and signature types, and reproducible desk-scale searches for witness
curves.
"""

__version__ = "0.1.0"

from .errors import ConsistencyError, DomainError
from .field import FieldDesc, FieldElement, frobenius, lth_power_count, make_field
from .poly import Polynomial, is_squarefree, poly_gcd, roots_in_field

__all__ = [
    "ConsistencyError",
    "DomainError",
    "FieldDesc",
    "FieldElement",
    "frobenius",
    "lth_power_count",
    "make_field",
    "Polynomial",
    "is_squarefree",
    "poly_gcd",
    "roots_in_field",
    "__version__",
]
