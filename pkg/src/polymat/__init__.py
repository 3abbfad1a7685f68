"""Monomial ideals, polymatroidal structure, and stability of associated
primes and depth along powers."""

from .decomposition import (
    AssociatedPrimesSet,
    IrreducibleComponent,
    ass_colon_oracle,
    ass_polymatroidal_fast,
    associated_primes,
    irreducible_decomposition,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    NotPolymatroidalError,
    ParseError,
    PolymatError,
    UnitIdealError,
    ZeroIdealError,
)
from .families import (
    VeroneseSpec,
    almost_squarefree_veronese,
    enumerate_matroidal,
    product_of_primes,
    squarefree_veronese,
    veronese_type,
)
from .homology import BettiTable, betti_table, depth_oracle
from .monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon,
    localize,
    minimalize,
    multiply,
    power,
    saturate,
    support_and_gcd,
)
from .stability import StabilityReport, astab, dstab, power_trace, stability_report
from .structure import (
    analytic_spread,
    depth_polymatroidal,
    is_matroidal,
    is_polymatroidal,
    linear_quotients_q,
    linear_relation_graph,
)
from .textio import format_ideal, parse_ideal, parse_ideals

__version__ = "0.1.0"
