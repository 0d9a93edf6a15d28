"""Exact verification toolkit for Boros-Moll coefficient inequalities."""

from .coefficients import BorosMollRow, RowTable, ratio, row, row_double_sum, row_next, row_single_sum
from .exactnum import Rational, SurdExpr, binomial, surd_compare, surd_sign
from .logconcavity import check_2lc, is_log_concave, klc_depth, l_operator, moll_min
from .realroots import UniPoly, count_real_roots
from .report import VerificationError, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BorosMollRow",
    "RowTable",
    "ratio",
    "row",
    "row_double_sum",
    "row_next",
    "row_single_sum",
    "Rational",
    "SurdExpr",
    "binomial",
    "surd_compare",
    "surd_sign",
    "check_2lc",
    "is_log_concave",
    "klc_depth",
    "l_operator",
    "moll_min",
    "UniPoly",
    "count_real_roots",
    "VerificationError",
    "VerificationReport",
]
