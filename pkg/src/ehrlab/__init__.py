"""
ehrlab: exact Ehrhart polynomials and lattice-point counts for order
polytopes, Gelfand-Tsetlin polytopes and partition polytopes.
"""
from .errors import EhrlabError
from .exactcore import UniPolynomial, interpolate_polynomial, power_sum_polynomial
from .gt import GTPattern, Partition, RowSums, ehrhart_gt, enumerate_gt, verify_counterexample_36
from .hull import VPolytope, contains, idp_check, partition_polytope
from .poset import Poset, RootedTree, YoungShape, ehrhart_order_polytope, linear_extensions

__version__ = "1.0.0"

__all__ = [
    "EhrlabError",
    "GTPattern",
    "Partition",
    "Poset",
    "RootedTree",
    "RowSums",
    "UniPolynomial",
    "VPolytope",
    "YoungShape",
    "contains",
    "ehrhart_gt",
    "ehrhart_order_polytope",
    "enumerate_gt",
    "idp_check",
    "interpolate_polynomial",
    "linear_extensions",
    "partition_polytope",
    "power_sum_polynomial",
    "verify_counterexample_36",
]
