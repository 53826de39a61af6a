"""Classical reciprocity-law symbols over Q, Q(i) and Q(w), with exhaustive checkers."""

from .arith import INFINITY, DomainError, Factorization, Place, factor, support, vp_decompose
from .characters import lambda4, lambda8, lambda48, legendre, legendre_via_reciprocity
from .hilbert import (
    LocalSymbolReport,
    ProductReport,
    product_check,
    real_symbol,
    rousseau_check,
    symbol_at,
    t_value,
)
from .padic import (
    IsotropyWitness,
    PadicApprox,
    arith,
    from_rational,
    hensel_sqrt,
    is_square,
    isotropy_oracle,
    norm_test,
)
from .residue import (
    QuadInt,
    RootOfUnity,
    primary_associate,
    qdivmod,
    qnorm,
    reciprocity_check,
    residue_symbol,
)

__version__ = "0.1.0"
