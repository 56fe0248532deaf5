from tenj.scalar.codec import encode_scalar, format_approx, format_exact, parse_scalar
from tenj.scalar.cyclotomic import (
    ONE,
    ZERO,
    Cyclotomic,
    as_cyclotomic,
    cyc_add,
    cyc_div,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyc_pow,
    cyc_sub,
    cyc_to_complex,
    product,
)
from tenj.scalar.linalg import invert_matrix

__all__ = [
    "ONE",
    "ZERO",
    "Cyclotomic",
    "as_cyclotomic",
    "cyc_add",
    "cyc_div",
    "cyc_inv",
    "cyc_mul",
    "cyc_neg",
    "cyc_pow",
    "cyc_sub",
    "cyc_to_complex",
    "encode_scalar",
    "format_approx",
    "format_exact",
    "invert_matrix",
    "parse_scalar",
    "product",
]
