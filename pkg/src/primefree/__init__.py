"""Certificates for integer sequences floor(n**t / d) that are eventually prime-free."""

from .arith import (divisors, floor_pow_div, int_kth_root, is_probable_prime, legendre,
                    mod_pow)
from .certificate import (Certificate, CertificationFailure, Pair, PowerFactor, Uncovered,
                          Witness)
from .certify import (certify_pair, divisibility_witness, find_exceptions, power_evidence,
                      residue_set)
from .checker import Verdict, verify_certificate
from .config import Config
from .errors import (CertificateFormatError, DigitBudgetExceeded, DomainError,
                     InvariantViolation, ResourceLimitError)
from .families import (FamilyInstance, FamilyKind, fermat_pair, q2plus1_pairs,
                       q6q3plus1_pairs, wilson_params, wilson_term_factor)
from .scan import ScanReport, composite_crosscheck, reproduce_table1, scan_primes

__version__ = "0.1.0"
