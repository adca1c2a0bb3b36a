"""quadring: arithmetic, prime enumeration, counting asymptotics, and
prime-quotient density searches in quadratic number rings."""

from .angles import Angle
from .asymptotics import CountReport, convergence_report, predicted_main_term
from .enumeration import (
    associates_in_window,
    count_ratio,
    count_sector,
    count_sector_congruence,
    prime_stream,
    stream_csv_lines,
    totally_positive_check,
)
from .errors import CapExceededError, DomainError, QuadringError
from .gaussian import euler_phi_gaussian, residue_system
from .invariants import class_number, reduced_forms, ring_invariants
from .primality import (
    PrimeElement,
    factor_gaussian,
    is_prime_element,
    solve_norm_equation,
    splitting_type,
)
from .regions import AnnularSector, RealInterval
from .rings import (
    CongruenceClass,
    QuadInt,
    RingDescriptor,
    congruent_mod,
    format_element,
    gaussian_gcd,
    make_ring,
    parse_element,
    try_divide,
)
from .search import (
    DEFAULT_CAP,
    QuotientWitness,
    approximate,
    canonicalize_target,
    find_quotient_interval,
    find_quotient_sector,
    find_quotient_sector_congruent,
    inert_rational_fallback,
    verify_witness,
    witness_json,
)
from .units import fundamental_unit, unit_count

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "AnnularSector",
    "CapExceededError",
    "CongruenceClass",
    "CountReport",
    "DEFAULT_CAP",
    "DomainError",
    "PrimeElement",
    "QuadInt",
    "QuadringError",
    "QuotientWitness",
    "RealInterval",
    "RingDescriptor",
    "approximate",
    "associates_in_window",
    "canonicalize_target",
    "class_number",
    "congruent_mod",
    "convergence_report",
    "count_ratio",
    "count_sector",
    "count_sector_congruence",
    "euler_phi_gaussian",
    "factor_gaussian",
    "find_quotient_interval",
    "find_quotient_sector",
    "find_quotient_sector_congruent",
    "format_element",
    "fundamental_unit",
    "gaussian_gcd",
    "inert_rational_fallback",
    "is_prime_element",
    "make_ring",
    "parse_element",
    "predicted_main_term",
    "prime_stream",
    "reduced_forms",
    "residue_system",
    "ring_invariants",
    "solve_norm_equation",
    "splitting_type",
    "stream_csv_lines",
    "totally_positive_check",
    "try_divide",
    "unit_count",
    "verify_witness",
    "witness_json",
]
