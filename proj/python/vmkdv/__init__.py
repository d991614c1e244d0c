"""Vector mKdV hierarchy workbench.

Exact hierarchy flows and Lax pairs, closed-form soliton and breather
solutions, and the numeric verification suite, backed by the C++ core.
"""

from ._vmkdv import (
    ConfigError,
    NotExactError,
    breather_dress,
    derive_flow,
    euler_is_zero,
    flow_weight,
    lax_v,
    one_soliton,
    rank1_breather,
    scalar_breather_closed_form,
    soliton_flow_residual,
    verify_all,
    zero_curvature_is_zero,
)

__all__ = [
    "ConfigError",
    "NotExactError",
    "breather_dress",
    "derive_flow",
    "euler_is_zero",
    "flow_weight",
    "lax_v",
    "one_soliton",
    "rank1_breather",
    "scalar_breather_closed_form",
    "soliton_flow_residual",
    "verify_all",
    "zero_curvature_is_zero",
]

__version__ = "0.1.0"
