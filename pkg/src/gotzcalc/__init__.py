"""gotzcalc: exact Gotzmann/Macaulay calculus.

Binomial representations of Hilbert polynomials, Hilbert functions of
monomial quotient modules, experimental verification of the Gotzmann
regularity bound for globally generated sheaves, Quot-scheme dimension
formulas on the projective line, and Chern-class bounds for rank-2 globally
generated sheaves on projective 3-space.  All arithmetic is exact; there is
no floating point anywhere.
"""
from .chern import (
    C1Report,
    ChernData,
    P3Decomposition,
    c1_nonneg_check,
    c2_upper_bound,
    chern_from_hp,
    chi12_bound,
    decompose_p3_rank2,
    hp_from_chern,
)
from .errors import (
    GotzcalcError,
    InconsistencyError,
    InfeasibleEmbedding,
    NoGotzmannRepresentation,
    NonIntegralChern,
    NotIntegerValued,
    NotStronglyStable,
    WrongShape,
)
from .gotzmann import (
    GotzmannRep,
    gotzmann_hilbert_function,
    gotzmann_number,
    gotzmann_rep,
    gotzmann_sum,
    lemma3_rep,
    regularity_bound,
    regularity_bound_twisted,
    rep_to_poly,
)
from .macaulay import (
    MacaulayRep,
    binom_int,
    gasharov_bound_ok,
    macaulay_growth_ok,
    macaulay_rep,
    macaulay_transform,
    scheme_hf_criterion,
)
from .monomial import (
    Component,
    Monomial,
    MonomialIdeal,
    MonomialModule,
    PersistenceReport,
    RegularityReport,
    check_gotzmann_regularity,
    check_persistence,
    colon_by_variable,
    hf_enumerate,
    hilbert_polynomial,
    hilbert_polynomial_by_interpolation,
    hilbert_series_numerator,
    intersect,
    is_strongly_stable,
    lexify,
    lexify_ideal,
    monomials_of_degree,
    saturate,
    series_hf,
    stable_regularity,
)
from .polys import BinomialTerm, Rational, RationalPoly, binom_poly, interpolate
from .quotdim import (
    MinAutDim,
    QuotEmbedding,
    SplittingType,
    aut_dim,
    expected_dim,
    gotzmann_number_p1,
    hom_mod_aut_dim,
    min_aut_dim,
    porteous_codim,
    quot_embedding,
)

__version__ = "0.1.0"
