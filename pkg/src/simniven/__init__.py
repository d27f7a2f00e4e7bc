"""Simultaneous Niven numbers in power-related bases, built as sparse repunits."""

from .construction import (
    DEFAULT_SIZE_CAP,
    AdmissibleS,
    Claim,
    ConstructionParams,
    ConstructionResult,
    NivenCertificate,
    admissible,
    admissible_stream,
    construct,
    construct_coprime_single_base,
    construct_tower,
    sparse_repunit,
    spacing,
    validate,
    witno_repunit,
)
from .digits import BaseExpansion, block_digit_sum_check, digit_sum, is_niven, render, to_base
from .errors import (
    DomainError,
    InadmissibleError,
    NivenError,
    NotInvertibleError,
    ResourceLimitError,
    ValidationError,
)
from .numtheory import Modulus, ResidueClass, crt_pair, gcd, mod_pow, multiplicative_order, radical
from .oracle import ScanReport, brute_force_order, scan_simultaneous, verify_certificate, verify_claims

__version__ = "0.1.0"
