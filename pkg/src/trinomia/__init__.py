"""Exact computation and verification for generalized central trinomial coefficients.

``T_n(b, c)`` is the coefficient of ``x^n`` in ``(x^2 + b x + c)^n``.  The
package computes these numbers (symbolically in ``b, c`` or at rational
points) together with the triangles, Riordan arrays, recursive matrices and
Hankel determinants built from them, and checks their structural
properties in exact arithmetic.
"""

from .kernel import BiPoly, UniPoly, UVPoly, basis_change_uv, symbols
from .seqgen import (
    TriangleMatrix,
    laurent_entry,
    motzkin_number,
    tbc_number,
    tbc_number_direct,
    tbc_sequence,
    tnk_coeff,
    tu_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "UniPoly",
    "UVPoly",
    "TriangleMatrix",
    "basis_change_uv",
    "laurent_entry",
    "motzkin_number",
    "symbols",
    "tbc_number",
    "tbc_number_direct",
    "tbc_sequence",
    "tnk_coeff",
    "tu_matrix",
]
