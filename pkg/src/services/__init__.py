"""
Services package initialization.
All computation services.
"""

from .numtheory import PrimeTable, GroupStructure, sieve, factorize, euler_phi, group_structure
from .characters import Character, CharacterGroup, build_group, evaluate, conductor, gauss_sum
from .specfun import ComplexApprox, hurwitz_zeta, log_gamma, gamma
from .lfunc import (
    ShiftTuple,
    LValueGrid,
    l_value,
    l_value_grid,
    l_values_all_chars,
    central_moment,
    shifted_moment,
    large_value_counts,
    grh_majorant,
    majorant_diagnostic,
    prime_moment_check,
)
from .theta import (
    ThetaRequest,
    truncation_length,
    theta_value,
    theta_all_chars,
    theta_moment,
    theta_scan,
    ratio_trend,
    mellin_check,
    mellin_check_all,
)
from .bounds import (
    f_term,
    e_term,
    w_quantity,
    a_quantity,
    large_value_bound,
    shifted_moment_bound,
    max_value_shape,
    bound_profile,
    cos_sum_check,
)
from .randmodel import SteinhausSample, sample, model_theta, model_moment, model_scan
from .report_service import ReportService, report_service

__all__ = [
    # Number theory
    "PrimeTable",
    "GroupStructure",
    "sieve",
    "factorize",
    "euler_phi",
    "group_structure",

    # Characters
    "Character",
    "CharacterGroup",
    "build_group",
    "evaluate",
    "conductor",
    "gauss_sum",

    # Special functions
    "ComplexApprox",
    "hurwitz_zeta",
    "log_gamma",
    "gamma",

    # L-functions
    "ShiftTuple",
    "LValueGrid",
    "l_value",
    "l_value_grid",
    "l_values_all_chars",
    "central_moment",
    "shifted_moment",
    "large_value_counts",
    "grh_majorant",
    "majorant_diagnostic",
    "prime_moment_check",

    # Theta functions
    "ThetaRequest",
    "truncation_length",
    "theta_value",
    "theta_all_chars",
    "theta_moment",
    "theta_scan",
    "ratio_trend",
    "mellin_check",
    "mellin_check_all",

    # Bounds
    "f_term",
    "e_term",
    "w_quantity",
    "a_quantity",
    "large_value_bound",
    "shifted_moment_bound",
    "max_value_shape",
    "bound_profile",
    "cos_sum_check",

    # Random model
    "SteinhausSample",
    "sample",
    "model_theta",
    "model_moment",
    "model_scan",

    # Reports
    "ReportService",
    "report_service",
]
