"""Exact real-root isolation for integer polynomials, and the statistics of
real roots of random polynomials: expected counts, separation laws, and the
Bernstein-basis root-count experiments."""

__version__ = "0.1.0"

from .dyadic import DyadicInterval, dyadic, format_dyadic, parse_dyadic
from .polynomial import (
    BernsteinPolynomial,
    IntPolynomial,
    RationalPolynomial,
    bernstein_to_power,
    clear_denominators,
    dyadic_of_float,
)
from .sturm import (
    EndpointRootError,
    SturmSequence,
    count_all_real,
    count_in,
    poly_gcd,
    sign_variations,
    squarefree_part,
    sturm_sequence,
    variations_at,
    variations_at_infinity,
)
from .isolator import (
    BERNSTEIN,
    DESCARTES,
    METHODS,
    STURM,
    IsolationStats,
    NonSquarefreeError,
    RootInterval,
    bernstein_coefficients,
    count_bernstein,
    count_descartes,
    de_casteljau_split,
    eq1_rhs,
    gap_lower_bounds,
    hong_root_bound,
    is_squarefree,
    isolate,
    isolate_all,
    min_separation,
    refine,
    root_magnitude_bounds,
)
from .randgen import (
    BERNSTEIN_SK,
    BERNSTEIN_STD,
    KAC,
    MODELS,
    RNG_ALGORITHM,
    SO2,
    WEYL,
    exactify,
    sample_polynomial,
    standard_normals,
    variance_vector,
)
from .theory import (
    bernstein_even_variances,
    bernstein_root_integral,
    binomial_sum_identity,
    correlation_slope,
    ek_density,
    ek_expected_count,
    expected_sep_lower_bound,
    sep_probability,
    sep_quantile,
    sk_sandwich_holds,
    stirling_binomial_ratio,
    straighten,
    wallis,
    wallis_float,
    weyl_density,
    weyl_expected_count,
)
from .fileio import format_polynomial, parse_polynomial, read_polynomial, write_polynomial
