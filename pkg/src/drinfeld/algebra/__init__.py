from .field import FiniteField, finite_field
from .poly import (Pol, parse_pol, monics_of_degree, polys_below_degree,
                   monics_up_to_degree, factor_squarefree_monic,
                   is_irreducible, irreducible_monics)
from .ratfunc import RF
from .quotient import QuotientRing, REl
from .binom import lucas_binomial

__all__ = [
    "FiniteField", "finite_field", "Pol", "parse_pol", "monics_of_degree",
    "polys_below_degree", "monics_up_to_degree", "factor_squarefree_monic",
    "is_irreducible", "irreducible_monics",
    "RF", "QuotientRing", "REl", "lucas_binomial",
]
