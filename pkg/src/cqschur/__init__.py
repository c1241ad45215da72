"""Exact computations in cyclotomic q-Schur algebras: Gram matrices of the
cellular form on standard modules, decomposition numbers and blocks."""

from .decomp import (DecompMatrix, GramMatrix, blocks, decomposition_matrix,
                     gram, simple_dims, to_latex)
from .errors import CQSError
from .presented_engine import (CustomProvider, CyclotomicProvider, FMonomial,
                               TypeAProvider, ZeroProvider, enumerate_xi, pair,
                               select_basis)
from .ring import FieldConfig

__all__ = [
    "CQSError", "CustomProvider", "CyclotomicProvider", "DecompMatrix",
    "FMonomial", "FieldConfig", "GramMatrix", "TypeAProvider", "ZeroProvider",
    "blocks", "decomposition_matrix", "enumerate_xi", "gram", "pair",
    "select_basis", "simple_dims", "to_latex",
]
