"""Exact arithmetic for differentially recursive sequences over Q and Q(z)."""

from .drs import (DRSeq, act, divisibility_inclusion, drs_sum, embed_as_drs, find_linear_recurrence,
                  from_initial, fundamental_matrix, materialize, min_annihilator, product)
from .errors import DiffRecError, ParseError
from .field import QQ, QZ, RatFunc
from .hopf import antipode, comult, counit, run_hopf_suite
from .hurwitz import Seq, hmul, shift, source, target
from .ore import OrePoly, ore_mul, ore_right_divrem
from .parse import parse_field_expr, parse_inits, parse_ore_expr

__version__ = "0.1.0"
