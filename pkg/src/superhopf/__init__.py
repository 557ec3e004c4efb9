"""Finite-dimensional Hopf super-algebras: integrals, bosonization, torsors
and PBW computations in enveloping super-algebras."""

from .scalars import QQ, GF, Field
from .spaces import SuperSpace, GradedMap, tensor_space, braiding, tensor_map
from .hopf import (
    SuperAlgebra,
    HopfSuperAlgebra,
    NoAntipode,
    verify,
    exterior_hopf,
    group_hopf,
    tensor_hopf,
    dual_hopf,
    quotient_hopf,
    purely_even_quotient,
    antipode_solve,
    grouplikes,
    odd_primitive_functionals,
)

__all__ = [
    "QQ", "GF", "Field",
    "SuperSpace", "GradedMap", "tensor_space", "braiding", "tensor_map",
    "SuperAlgebra", "HopfSuperAlgebra", "NoAntipode", "verify",
    "exterior_hopf", "group_hopf", "tensor_hopf", "dual_hopf", "quotient_hopf",
    "purely_even_quotient", "antipode_solve", "grouplikes", "odd_primitive_functionals",
]

__version__ = "0.1.0"
