"""Exact cyclotomic arithmetic, CRT exponent maps and integral-basis tests."""

from .bosma import (
    BosmaBasis,
    DeltaReport,
    bosma_basis,
    check_four_regular,
    delta_integrality,
    delta_report,
    half_cosine_sum_is_integral,
    is_algebraic_integer,
    q_linear_independent,
    to_bosma_conductor,
)
from .exponents import (
    ExponentDecomposition,
    UndefinedAtTwoError,
    crt_compose,
    crt_decompose,
    negation_reduction,
)
from .field import (
    MAX_DEGREE,
    ConductorMismatchError,
    CycloElem,
    DegreeCapError,
    cyclotomic_polynomial,
    epsilon_map,
    factorize,
    lift_common,
    reduced_denominator,
    totient,
)
