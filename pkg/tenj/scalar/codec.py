"""Text encodings of cyclotomic scalars.

Data files use ``"q/p"`` strings for rationals, ``{"zeta": [N, k]}`` for roots of
unity and ``{"conductor": N, "coeffs": [["num", "den"], ...]}`` in general.
Generator-reference files may also write ``"zeta(N,k)"`` or ``"-zeta(N,k)"``.
"""

import re
from fractions import Fraction
from typing import Any

from tenj.errors import ParseError
from tenj.scalar.cyclotomic import Cyclotomic, as_cyclotomic

_ZETA_RE = re.compile(r"^([+-]?)\s*zeta\(\s*(\d+)\s*,\s*(-?\d+)\s*\)$")
APPROX_DIGITS = 15


def parse_scalar(obj: Any, location: str = "") -> Cyclotomic:
    if isinstance(obj, Cyclotomic):
        return obj
    if isinstance(obj, bool):
        raise ParseError(f"expected a scalar, got {obj!r}", location)
    if isinstance(obj, int):
        return Cyclotomic.from_rational(obj)
    if isinstance(obj, str):
        text = obj.strip()
        match = _ZETA_RE.match(text)
        if match:
            sign, n, k = match.groups()
            value = Cyclotomic.zeta(int(n), int(k))
            return -value if sign == "-" else value
        try:
            return Cyclotomic.from_rational(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot parse scalar {obj!r}", location) from None
    if isinstance(obj, dict):
        if "zeta" in obj:
            try:
                n, k = obj["zeta"]
                return Cyclotomic.zeta(int(n), int(k))
            except (TypeError, ValueError):
                raise ParseError(f"bad zeta shorthand {obj['zeta']!r}", location) from None
        if "conductor" in obj and "coeffs" in obj:
            coeffs = []
            for i, c in enumerate(obj["coeffs"]):
                try:
                    if isinstance(c, (list, tuple)):
                        num, den = c
                        coeffs.append(Fraction(int(num), int(den)))
                    else:
                        coeffs.append(Fraction(str(c)))
                except (TypeError, ValueError, ZeroDivisionError):
                    raise ParseError(f"bad coefficient {c!r}", f"{location}.coeffs[{i}]") from None
            try:
                return Cyclotomic(int(obj["conductor"]), coeffs)
            except ValueError as e:
                raise ParseError(str(e), location) from None
    raise ParseError(f"expected a scalar, got {obj!r}", location)


def encode_scalar(value) -> Any:
    value = as_cyclotomic(value)
    if value.is_rational:
        return str(value.to_fraction())
    return {
        "conductor": value.conductor,
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in value.coeffs],
    }


def format_exact(value) -> str:
    """Polynomial in z<N> with rational coefficients, e.g. ``1/2 + 1/2*z4``."""
    value = as_cyclotomic(value)
    n = value.conductor
    terms = []
    for k, c in enumerate(value.coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        z = f"z{n}" if k == 1 else f"z{n}^{k}"
        if c == 1:
            terms.append(z)
        elif c == -1:
            terms.append(f"-{z}")
        else:
            terms.append(f"{c}*{z}")
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def format_approx(value, digits: int = APPROX_DIGITS) -> str:
    re_part, im_part = as_cyclotomic(value).to_complex()
    if abs(re_part) < 1e-12:
        re_part = 0.0
    if abs(im_part) < 1e-12:
        return f"{re_part:.{digits}g}"
    sign = "-" if im_part < 0 else "+"
    return f"{re_part:.{digits}g} {sign} {abs(im_part):.{digits}g}i"
