"""Linear codes, evaluation codes and locally recoverable codes over finite fields."""

from .code import (
    DEFAULT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    LinearCode,
    from_generator,
    from_parity_check,
    from_parity_check_span,
    from_span,
    linear_code,
    random_code,
    repetition_code,
    universe_code,
    zero_code,
    zero_sum_code,
)
from .decode import SyndromeTable, UncorrectableError, build_syndrome_table, syndrome_decode
from .evalcode import (
    EvaluationCode,
    cartesian_code,
    ev_code_graph,
    evaluation_code,
    rm_code,
    rs_code,
    toric_code,
)
from .families import cyclic_code, hamming_code, quasi_cyclic_code, rand_ldpc
from .galois import GF, FieldElement, field, field_of_order
from .lrc import LRCode, LRCSpec, build_lrc, is_good_polynomial, local_recover
from .matgf import Matrix
from .multipoly import GRLEX, LEX, MonomialOrder, MultiPoly, VanishingIdeal, parse_poly, reduce, vanishing_ideal

__all__ = [name for name in dir() if not name.startswith("_")]
