from .numeric import (
    as_point_array,
    check_domain_parameter,
    check_unit_parameter,
    format_number,
    require_finite,
    round_list,
)

__all__ = [
    "as_point_array",
    "check_domain_parameter",
    "check_unit_parameter",
    "format_number",
    "require_finite",
    "round_list",
]
