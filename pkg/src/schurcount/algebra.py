"""Exact arithmetic: integer polynomials in x and truncated power series in z.

Rationals are :class:`fractions.Fraction`.  A :class:`TruncatedSeries` carries
its coefficient domain explicitly (``"rational"`` or ``"poly"``) together with
its truncation order, and refuses to mix domains silently.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence, Union


class IntPolynomial:
    """Dense polynomial in ``x`` with Python-int coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed so
    the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, Fraction):
            if other.denominator != 1:
                raise TypeError(f"cannot coerce non-integral {other} into IntPolynomial")
            return IntPolynomial((other.numerator,))
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, IntPolynomial) else other
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __call__(self, point):
        """Evaluate at ``point`` by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    evaluate = __call__

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse the canonical text form produced by ``str`` (also accepts
        spaces and TeX braces such as ``x^{10}``)."""
        s = text.replace(" ", "").replace("{", "").replace("}", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            i += 1
            j = i
            while j < len(s) and s[j] not in "+-":
                j += 1
            term = s[i:j]
            i = j
            if "x" in term:
                c_txt, _, e_txt = term.partition("x")
                c = int(c_txt) if c_txt else 1
                e = int(e_txt[1:]) if e_txt.startswith("^") else 1
                if e_txt and not e_txt.startswith("^"):
                    raise ValueError(f"bad term {term!r}")
            else:
                c, e = int(term), 0
            coeffs[e] = coeffs.get(e, 0) + sign * c
        top = max(coeffs)
        return cls(coeffs.get(k, 0) for k in range(top + 1))


Coefficient = Union[Fraction, IntPolynomial]

RATIONAL = "rational"
POLY = "poly"


class DomainMismatch(TypeError):
    pass


def _domain_of(c) -> str:
    if isinstance(c, IntPolynomial):
        return POLY
    if isinstance(c, (Fraction, int)):
        return RATIONAL
    raise TypeError(f"unsupported series coefficient {c!r}")


def _zero(domain: str):
    return IntPolynomial() if domain == POLY else Fraction(0)


def _one(domain: str):
    return IntPolynomial((1,)) if domain == POLY else Fraction(1)


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, IntPolynomial) else c == 0


class TruncatedSeries:
    """Power series ``sum c_i z^i`` known exactly for ``i <= order``."""

    __slots__ = ("order", "coeffs", "domain")

    def __init__(self, coeffs: Sequence, order: int | None = None, domain: str | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if domain is None:
            # bare ints fit either domain
            domains = {_domain_of(c) for c in coeffs if not isinstance(c, int)}
            if len(domains) > 1:
                raise DomainMismatch("mixed coefficient domains")
            domain = domains.pop() if domains else RATIONAL
        if domain == RATIONAL:
            coeffs = [Fraction(c) for c in coeffs]
        elif any(not isinstance(c, IntPolynomial) for c in coeffs):
            coeffs = [c if isinstance(c, IntPolynomial) else IntPolynomial._coerce(c) for c in coeffs]
        coeffs = coeffs[: order + 1] + [_zero(domain)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int, domain: str = RATIONAL) -> "TruncatedSeries":
        return cls(coeffs, order, domain)

    @classmethod
    def one(cls, order: int, domain: str = RATIONAL) -> "TruncatedSeries":
        return cls([_one(domain)], order, domain)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order, self.domain)

    def lift(self) -> "TruncatedSeries":
        """Rational series with integral coefficients -> series over Z[x]."""
        if self.domain == POLY:
            return self
        return TruncatedSeries([IntPolynomial._coerce(c) for c in self.coeffs], self.order, POLY)

    def _check(self, other: "TruncatedSeries") -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.domain != self.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order, self.domain)
        n = self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.domain)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order, self.domain)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = _zero(self.domain)
            for i in range(k + 1):
                if not _is_zero(a[i]) and not _is_zero(b[k - i]):
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out, n, self.domain)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TruncatedSeries":
        if self.domain == RATIONAL and isinstance(c, IntPolynomial):
            raise DomainMismatch("polynomial scalar on a rational series")
        return TruncatedSeries([c * a for a in self.coeffs], self.order, self.domain)

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**k``; the order is unchanged."""
        zero = _zero(self.domain)
        return TruncatedSeries([zero] * k + list(self.coeffs), self.order, self.domain)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order, self.domain, self.coeffs) == (other.order, other.domain, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.domain, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order}, domain={self.domain!r})"

    def first_nonzero(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    return a.scale(c)


def geometric_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([1] * (order + 1), order)


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """``num / den`` over the rationals; ``den`` needs a nonzero constant term."""
    n = num._check(den)
    if num.domain != RATIONAL:
        raise DomainMismatch("series division is only defined over the rationals")
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator series has zero constant term")
    q: list[Fraction] = []
    for k in range(n + 1):
        acc = num[k] - sum((den[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
        q.append(acc / d0)
    return TruncatedSeries(q, n, RATIONAL)


def sqrt_series(s: TruncatedSeries) -> TruncatedSeries:
    """The square root with constant term 1 of a rational series with constant term 1.

    Solves t*t = s one coefficient at a time: 2*t_k = s_k - sum_{0<i<k} t_i t_{k-i}.
    """
    if s.domain != RATIONAL:
        raise DomainMismatch("sqrt_series works over the rationals")
    if s[0] != 1:
        raise ValueError(f"constant term must be 1, got {s[0]}")
    t = [Fraction(1)]
    for k in range(1, s.order + 1):
        acc = s[k] - sum((t[i] * t[k - i] for i in range(1, k)), Fraction(0))
        t.append(acc / 2)
    return TruncatedSeries(t, s.order, RATIONAL)
