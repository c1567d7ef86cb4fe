"""Cyclotomic Brauer algebras, degenerate cyclotomic Hecke algebras and
their realization on tensor products of parabolic Verma modules.

Modules:

- ``combinat``: multipartitions, tableaux, permutations and coset data
- ``hecke``: degenerate cyclotomic Hecke algebras and their cellular bases
- ``brauer``: cyclotomic Brauer algebras, ω-admissibility, weakly cellular basis
- ``repanalysis``: radicals, composition factors, decomposition matrices
- ``weights``: root data, weight dictionaries, linkage and saturation scans
- ``tensor_o``: the tensor module M^p(λ) ⊗ V^{⊗r} and its singular vectors
- ``cli``: the command line driver
"""
from .brauer import BrauerAlgebra, admissible_omega
from .hecke import HeckeAlgebra
from .weights import RootDatum

__all__ = ["BrauerAlgebra", "HeckeAlgebra", "RootDatum", "admissible_omega"]
__version__ = "0.1.0"
