"""Exact combinatorics of parabolic Tamari lattices and their relatives.

Everything is computed exactly over a chosen integer composition: the
pattern-avoiding quotient permutations under weak order, the adapted
noncrossing partitions under refinement, the core label order, the root
poset with its antichains, and the bivariate count polynomials tying them
together.
"""

from .noncrossing import AlphaPartition, enumerate_nc, nc_meet, nc_poset, phi, phi_inverse
from .posets import FinitePoset
from .symgroup import Composition, weak_order_poset
from .tamari import TamariLattice, canonical_ji_order, ji_count, tamari_lattice, wab
from .triangles import f_triangle, h_triangle, m_triangle, mbar_triangle, root_poset

__version__ = "0.1.0"

__all__ = [
    "AlphaPartition",
    "Composition",
    "FinitePoset",
    "TamariLattice",
    "canonical_ji_order",
    "enumerate_nc",
    "f_triangle",
    "h_triangle",
    "ji_count",
    "m_triangle",
    "mbar_triangle",
    "nc_meet",
    "nc_poset",
    "phi",
    "phi_inverse",
    "root_poset",
    "tamari_lattice",
    "wab",
    "weak_order_poset",
    "__version__",
]
