"""Totally reflexive modules over short local rings with cube-zero maximal ideal."""

from ._core import (
    BudgetExceeded,
    Error,
    Ring,
    ValidationError,
    check_totally_reflexive,
    check_upper_triangular,
    classify_ut2,
    coker_length,
    ext1,
    filtrate,
    find_ut_form,
    gamma,
    is_equivalent,
    mb_matrix,
    minimize,
    pushout_middle,
    syzygy,
)

__version__ = "0.1.0"


def standard(p):
    """The ring k[x,y,z]/(x^2, y^2, z^2, yz) over F_p."""
    return Ring(f"S:{p}")
