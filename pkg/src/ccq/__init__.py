"""Connectivity queries on real algebraic curves.

Given a one-dimensional rational parametrization of an algebraic curve in
R^n and a zero-dimensional parametrization of query points on it, ccq
partitions the query points by connected component of the real curve and
counts the components, using exact rational arithmetic throughout.
"""

from .params import OneDimParam, ZeroDimParam
from .polynomials import BiPoly, UniPoly

__all__ = ["OneDimParam", "ZeroDimParam", "BiPoly", "UniPoly"]
__version__ = "0.1.0"
