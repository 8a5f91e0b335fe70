"""Checking the closed-form generating functions of Omega(n) by exact series arithmetic.

Both checks clear the denominator: with F(z) = sum Omega(n) z^n the identity
F * D = N is verified coefficient by coefficient, so no series division over
Z[x] is ever needed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .algebra import RATIONAL, IntPolynomial, TruncatedSeries, sqrt_series
from .counting import omega_odd, omega_two

DEFAULT_ORDER = 30


@dataclass
class GFReport:
    case: str
    order: int
    ok: bool
    first_mismatch_index: Optional[int] = None

    def to_json(self) -> str:
        d = asdict(self)
        if d["first_mismatch_index"] is None:
            del d["first_mismatch_index"]
        return json.dumps(d)


def _z(order: int, coeffs) -> TruncatedSeries:
    return TruncatedSeries(coeffs, order, RATIONAL)


def sqrt_one_minus_4z(order: int) -> TruncatedSeries:
    return sqrt_series(_z(order, [1, -4]))


def sqrt_one_minus_6z_plus_z2(order: int) -> TruncatedSeries:
    return sqrt_series(_z(order, [1, -6, 1]))


def expand_catalan_gf(order: int) -> TruncatedSeries:
    """(1 - sqrt(1-4z)) / (2z), expanded to ``order``."""
    # dividing by z drops a term, so expand one order further
    num = _z(order + 1, [1]) - sqrt_one_minus_4z(order + 1)
    return _z(order, [c / 2 for c in num.coeffs[1:]])


def expand_schroder_gf(order: int) -> TruncatedSeries:
    """(1 - z - sqrt(1-6z+z^2)) / (2z), expanded to ``order``."""
    num = _z(order + 1, [1, -1]) - sqrt_one_minus_6z_plus_z2(order + 1)
    return _z(order, [c / 2 for c in num.coeffs[1:]])


def _compare(case: str, order: int, lhs: TruncatedSeries, rhs: TruncatedSeries) -> GFReport:
    diff = lhs - rhs
    idx = diff.first_nonzero()
    return GFReport(case, order, idx is None, idx)


def verify_gf_odd(order: int = DEFAULT_ORDER,
                  omega: Callable[[int], IntPolynomial] = omega_odd) -> GFReport:
    """F(z) * (-2z^2 + (x-2)z - (x-2) + x(1-z)sqrt(1-4z)) == 2(1-z) over Z[x]."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = IntPolynomial.x()
    F = TruncatedSeries([omega(n) for n in range(order + 1)], order)
    root = sqrt_one_minus_4z(order).lift()
    one_minus_z = _z(order, [1, -1]).lift()
    D = (TruncatedSeries([-(x - 2), x - 2, -2], order) + (one_minus_z * root).scale(x))
    N = one_minus_z.scale(2)
    return _compare("odd", order, F * D, N)


def verify_gf_two(order: int = DEFAULT_ORDER, omega: Callable[[int], int] = omega_two) -> GFReport:
    """F(z) * Den(z) == Num(z) with
    A = 2 - z - sqrt(1-4z) - sqrt(1-6z+z^2),
    Num = A(1-z) + 2(z^2-1),  Den = A(1-z-z^2) + 2(z^3+z^2+z-1)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    A = _z(order, [2, -1]) - sqrt_one_minus_4z(order) - sqrt_one_minus_6z_plus_z2(order)
    num = A * _z(order, [1, -1]) + _z(order, [-2, 0, 2])
    den = A * _z(order, [1, -1, -1]) + _z(order, [-2, 2, 2, 2])
    F = _z(order, [omega(n) for n in range(order + 1)])
    return _compare("two", order, F * den, num)
