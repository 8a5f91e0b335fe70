"""Counting Schur rings over Z_{p^n}.

For odd p every count is a polynomial in ``x = d(p-1)`` (number of divisors
of p-1); per-prime values are evaluations.  For p = 2 the counts are plain
integers.  Each case has two routes:

* layer route: Omega(n) assembled from the per-field counts Omega(n, k)
  (and, for p = 2, the counts Omega_s(n, k) for the real subfields);
* direct route: a single recurrence in Omega(j), j < n, whose coefficients
  are Catalan (and Schroeder) numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .algebra import IntPolynomial
from .sequences import catalan, fibonacci, schroder

X = IntPolynomial.x()
ONE = IntPolynomial.constant(1)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def num_divisors(m: int) -> int:
    if m < 1:
        raise ValueError("num_divisors needs a positive integer")
    count = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            count += 1 if d * d == m else 2
        d += 1
    return count


@dataclass(frozen=True)
class PrimeSpec:
    p: int
    n: int
    x: int = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"{self.p} is not an odd prime")
        if self.n < 0:
            raise ValueError("exponent must be non-negative")
        expected = num_divisors(self.p - 1)
        if self.x is None:
            object.__setattr__(self, "x", expected)
        elif self.x != expected:
            raise ValueError(f"x={self.x} but d({self.p - 1}) = {expected}")


class OmegaTable:
    """Memoized Omega(n) and Omega(n, k) for odd p, as polynomials in x,
    computed through the layer recurrences only."""

    def __init__(self, n_max: int = 0):
        self._omega: dict[int, IntPolynomial] = {0: ONE, 1: X}
        self._layer: dict[tuple[int, int], IntPolynomial] = {}
        for n in range(n_max + 1):
            self.omega(n)

    @property
    def n_max(self) -> int:
        return max(self._omega)

    def layer(self, n: int, k: int) -> IntPolynomial:
        if n < 0 or k < 0 or k > n:
            raise ValueError(f"layer index out of range: Omega({n},{k})")
        key = (n, k)
        if key in self._layer:
            return self._layer[key]
        if k == n:
            val = ONE
        elif k == 0:
            val = sum((self.omega(j) for j in range(n)), IntPolynomial())
        elif k == 1:
            val = self.omega(n - 1)
        else:
            val = sum((self.layer(n - 1, j) for j in range(k - 1, n)), IntPolynomial())
        self._layer[key] = val
        return val

    def omega(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative exponent")
        if n in self._omega:
            return self._omega[n]
        # ensure lower values exist first; keeps recursion depth linear
        for m in range(self.n_max + 1, n):
            self.omega(m)
        upper = sum((self.layer(n, k) for k in range(2, n + 1)), IntPolynomial())
        val = self.layer(n, 0) + (X - 1) * self.layer(n, 1) + X * upper
        self._omega[n] = val
        return val

    def entries(self, n: int) -> list[IntPolynomial]:
        return [self.layer(n, k) for k in range(n + 1)]


_ODD = OmegaTable()


def omega_layer_odd(n: int, k: int) -> IntPolynomial:
    return _ODD.layer(n, k)


def omega_odd_layers(n: int) -> IntPolynomial:
    """Omega(n) summed over the fields of the subfield lattice."""
    return _ODD.omega(n)


@lru_cache(maxsize=None)
def omega_odd_recursive(n: int) -> IntPolynomial:
    """Omega(n) = x Omega(n-1) + sum_{k=2}^n (c_{k-1} x + 1) Omega(n-k)."""
    if n < 0:
        raise ValueError("negative exponent")
    if n == 0:
        return ONE
    if n == 1:
        return X
    for m in range(2, n):
        omega_odd_recursive(m)
    total = X * omega_odd_recursive(n - 1)
    for k in range(2, n + 1):
        total = total + (catalan(k - 1) * X + 1) * omega_odd_recursive(n - k)
    return total


def omega_odd(n: int, method: str = "recursive") -> IntPolynomial:
    if method == "recursive":
        return omega_odd_recursive(n)
    if method == "layers":
        return omega_odd_layers(n)
    raise ValueError(f"unknown method {method!r}")


def omega_layer_closed_forms(n: int) -> dict[int, IntPolynomial]:
    """Closed forms for Omega(n, n-1), Omega(n, n-2), Omega(n, n-3) where valid."""
    if n < 2:
        raise ValueError("closed forms need n >= 2")
    out = {n - 1: X + (n - 2)}
    if n >= 3:
        out[n - 2] = X**2 + (n - 2) * X + comb(n - 1, 2)
    if n >= 4:
        out[n - 3] = X**3 + (n - 2) * X**2 + (comb(n - 1, 2) + 1) * X + (comb(n, 3) - 3)
    return out


def omega_odd_eval(spec: PrimeSpec) -> int:
    return omega_odd(spec.n)(spec.x)


def count_odd(p: int, n: int) -> int:
    return omega_odd_eval(PrimeSpec(p, n))


def constant_term_check(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n >= 1 required")
    return omega_odd(n).coeff(0), fibonacci(n - 1)


class OmegaTwoTable:
    """Memoized counts for p = 2 via the layer route.

    ``layer(n, k)`` counts rings mapping onto Q (k=0), Q(i) (k=2) or the full
    cyclotomic field Q(zeta_{2^k}) (k>=3); ``real(n, k)`` counts rings mapping
    onto Q(zeta_{2^k} + zeta_{2^k}^{-1}), equal to the count for
    Q(zeta_{2^k} - zeta_{2^k}^{-1}).
    """

    def __init__(self, n_max: int = 0):
        self._omega: dict[int, int] = {0: 1, 1: 1}
        self._layer: dict[tuple[int, int], int] = {}
        self._real: dict[tuple[int, int], int] = {}
        for n in range(n_max + 1):
            self.omega(n)

    @property
    def n_max(self) -> int:
        return max(self._omega)

    def layer(self, n: int, k: int) -> int:
        if k == 1:
            raise ValueError("there is no first layer for p = 2")
        if n < 0 or k < 0 or k > n:
            raise ValueError(f"layer index out of range: Omega({n},{k})")
        key = (n, k)
        if key in self._layer:
            return self._layer[key]
        if k == n:
            val = 1
        elif k == 0:
            val = sum(self.omega(j) for j in range(n))
        elif k == 2:
            val = self.omega(n - 1) - self.layer(n - 2, 0)
        else:
            val = sum(self.layer(n - 1, j) for j in range(k - 1, n))
        self._layer[key] = val
        return val

    def real(self, n: int, k: int) -> int:
        if not 3 <= k <= n:
            raise ValueError(f"Omega_s({n},{k}) needs 3 <= k <= n")
        key = (n, k)
        if key in self._real:
            return self._real[key]
        if k == n:
            val = 1
        elif k == 3:
            val = self.layer(n - 1, 2) + 2 * sum(self.real(n - 1, j) for j in range(3, n))
        else:
            val = self.real(n - 1, k - 1) + 2 * sum(self.real(n - 1, j) for j in range(k, n))
        self._real[key] = val
        return val

    def omega(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        if n in self._omega:
            return self._omega[n]
        for m in range(self.n_max + 1, n):
            self.omega(m)
        val = self.layer(n, 0) + self.layer(n, 2)
        for k in range(3, n + 1):
            val += self.layer(n, k) + 2 * self.real(n, k)
        self._omega[n] = val
        return val


_TWO = OmegaTwoTable()


def omega_two_layer(n: int, k: int) -> int:
    if n < 2 and k != 0:
        raise ValueError("p = 2 layer counts need n >= 2")
    return _TWO.layer(n, k)


def omega_two_s(n: int, k: int) -> int:
    return _TWO.real(n, k)


def omega_two_layers(n: int) -> int:
    return _TWO.omega(n)


@lru_cache(maxsize=None)
def omega_two_recursive(n: int) -> int:
    """Direct recurrence with Catalan and Schroeder coefficients, valid for n >= 2."""
    if n == -1:
        return 0
    if n < -1:
        raise ValueError("negative exponent")
    if n in (0, 1):
        return 1
    for m in range(2, n):
        omega_two_recursive(m)
    cs = [catalan(j) + schroder(j) for j in range(n)]
    total = sum(2**k * omega_two_recursive(n - k) for k in (1, 2, 3)) - cs[n - 1]
    for k in range(4, n + 1):
        total += (cs[k - 1] - sum(cs[1 : k - 2])) * omega_two_recursive(n - k)
    return total


def omega_two(n: int, method: str = "recursive") -> int:
    if method == "recursive":
        if n < 0:
            raise ValueError("negative exponent")
        return omega_two_recursive(n)
    if method == "layers":
        return omega_two_layers(n)
    raise ValueError(f"unknown method {method!r}")


def count_schur_rings(p: int, n: int) -> int:
    """Number of Schur rings over Z_{p^n}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("exponent must be non-negative")
    return omega_two(n) if p == 2 else count_odd(p, n)
