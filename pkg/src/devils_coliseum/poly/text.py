"""Text format for polynomials: comma-separated ascending coefficients.

Each coefficient is ``re`` or ``re+imi`` / ``re-imi`` (for example ``1,0,-2,0,1``
is 1 - 2z^2 + z^4). Formatting uses 17 significant digits, which round-trips
every double exactly.
"""

import re

from devils_coliseum.poly.types import Polynomial

_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COEFF_RE = re.compile(rf"^(?P<re>{_NUMBER})?(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$")
_IMAG_ONLY_RE = re.compile(rf"^(?P<im>{_NUMBER})i$")


def parse_coefficient(token: str) -> complex:
    token = token.strip().replace(" ", "")
    if not token:
        raise ValueError("empty coefficient")

    imag_only = _IMAG_ONLY_RE.match(token)
    if imag_only:
        return complex(0.0, float(imag_only.group("im")))

    match = _COEFF_RE.match(token)
    if match is None or match.group("re") is None:
        raise ValueError(f"malformed coefficient {token!r}")
    real = float(match.group("re"))
    imag = float(match.group("im")) if match.group("im") else 0.0
    return complex(real, imag)


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``c0,c1,...,cd`` into a Polynomial."""
    if not text.strip():
        raise ValueError("polynomial text has no coefficients")
    return Polynomial.from_coeffs(parse_coefficient(t) for t in text.split(","))


def format_coefficient(c: complex) -> str:
    real = f"{c.real:.17g}"
    if c.imag == 0:
        return real
    sign = "-" if c.imag < 0 else "+"
    return f"{real}{sign}{abs(c.imag):.17g}i"


def format_polynomial(g: Polynomial) -> str:
    return ",".join(format_coefficient(c) for c in g.coeffs)
