"""Exact GF(2) computations for the mod-2 cohomology of SL_3(Z[1/2, i]).

Covers the inverse limit over the Quillen category, the F2[S_3]-module
decompositions behind it, the Poincare series identities and the
leading-sequence membership test for the stable class subalgebra.
"""

__version__ = "0.1.0"
