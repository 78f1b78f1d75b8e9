"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored constant term first. Integer coefficients stay plain
``int``; anything else is a :class:`fractions.Fraction`.  Objects are
immutable and hashable.

Also provides rational functions (:class:`RatFunction`), polynomials whose
coefficients are affine in a parameter ``Y`` (:class:`AffinePoly`), and the
resultant / interpolation primitives the rest of the package is built on.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence


def _canon(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _canon(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


class Polynomial:
    """Polynomial over Q, ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # construction helpers
    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def linear(cls, alpha, beta) -> "Polynomial":
        """``alpha*x - beta``."""
        return cls([-beta, alpha])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        return prod_polys(cls([-r, 1]) for r in roots)

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    # arithmetic
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            q, r = self.divmod(c)
            if not r.is_zero():
                raise ArithmeticError("inexact polynomial division")
            return q
        c = Fraction(c)
        return Polynomial(Fraction(x) / c for x in self.coeffs)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        dg = other.degree
        lead = Fraction(other.lc)
        if len(r) - 1 < dg:
            return Polynomial(), self
        q = [Fraction(0)] * (len(r) - dg)
        for k in range(len(r) - 1 - dg, -1, -1):
            coef = r[k + dg] / lead
            q[k] = coef
            if coef:
                for j, oc in enumerate(other.coeffs):
                    r[k + j] -= coef * oc
        return Polynomial(q), Polynomial(r[:dg])

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _canon(acc) if isinstance(acc, (int, Fraction)) else acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, other: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, c) -> "Polynomial":
        """``P(x + c)``."""
        return self.compose(Polynomial([c, 1]))

    def reverse(self, n: int | None = None) -> "Polynomial":
        """``x**n * P(1/x)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Polynomial(reversed(cs[: n + 1]))

    def homogenize(self, num: "Polynomial", den: "Polynomial", n: int | None = None) -> "Polynomial":
        """``den**n * P(num/den)``; ``n`` defaults to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("homogenizing degree below polynomial degree")
        acc = Polynomial()
        num_pows = [Polynomial([1])]
        for _ in range(n):
            num_pows.append(num_pows[-1] * num)
        den_pows = [Polynomial([1])]
        for _ in range(n):
            den_pows.append(den_pows[-1] * den)
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + num_pows[i] * den_pows[n - i] * c
        return acc

    # content and normal forms
    def denominator(self) -> int:
        return reduce(lcm, (Fraction(c).denominator for c in self.coeffs), 1)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive integral."""
        if self.is_zero():
            return Fraction(0)
        d = self.denominator()
        ints = [int(c * d) for c in self.coeffs]
        return Fraction(reduce(gcd, ints, 0), d)

    def primitive(self) -> "Polynomial":
        """Content-1 integer polynomial with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Polynomial(int(Fraction(x) / c) for x in self.coeffs)

    def monic(self) -> "Polynomial":
        return self / self.lc

    def pseudo_rem(self, other: "Polynomial") -> "Polynomial":
        """``lc(other)**(deg self - deg other + 1) * self mod other`` over Z."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = other.degree
        lead = other.lc
        if len(r) - 1 < dg:
            return self
        delta = len(r) - 1 - dg
        for k in range(delta, -1, -1):
            coef = r[k + dg]
            r = [c * lead for c in r]
            if coef:
                for j, oc in enumerate(other.coeffs):
                    r[k + j] -= coef * oc
            r.pop()
        return Polynomial(r)


def prod_polys(polys: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial([1])
    for p in polys:
        out = out * p
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def is_squarefree(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


def resultant(f: Polynomial, g: Polynomial):
    """Sylvester resultant ``lc(f)**deg(g) * prod g(roots of f)``."""
    if f.is_zero() or g.is_zero():
        return 0
    m, n = f.degree, g.degree
    if m == 0:
        return _canon(Fraction(f.lc) ** n)
    if n == 0:
        return _canon(Fraction(g.lc) ** m)
    sign = 1
    if m < n:
        f, g, m, n = g, f, n, m
        if m * n % 2:
            sign = -sign
    # Res(f, g) = (-1)^{mn} Res(g, f) and Res(g, f) = lc(g)^{m - deg r} Res(g, r)
    acc = Fraction(sign)
    while True:
        r = f % g
        if r.is_zero():
            return 0 if n > 0 else _canon(acc * Fraction(g.lc) ** m)
        if (m * n) % 2:
            acc = -acc
        acc *= Fraction(g.lc) ** (m - r.degree)
        f, g, m, n = g, r, n, r.degree
        if n == 0:
            return _canon(acc * Fraction(g.lc) ** m)


def norm_resultant(p: Polynomial, q: Polynomial):
    """``prod q(x_k)`` over the roots of ``p`` (monic convention)."""
    return _canon(Fraction(resultant(p, q)) / Fraction(p.lc) ** q.degree) if q.degree > 0 \
        else _canon(Fraction(q.lc if not q.is_zero() else 0) ** p.degree)


def interpolate(xs: Sequence, ys: Sequence) -> Polynomial:
    """Lagrange interpolation through ``(xs[i], ys[i])`` over Q."""
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = Polynomial()
    for i, xi in enumerate(xs):
        if ys[i] == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= Fraction(xi) - xj
        out = out + basis * (Fraction(ys[i]) / denom)
    return out


def format_poly(p: Polynomial, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class RatFunction:
    """Reduced quotient of polynomials.

    Stored with integer coefficients, ``gcd(num, den) = 1``, joint content
    1 across numerator and denominator, and a positive leading coefficient
    on the denominator.  The value is exact; no scalar is dropped.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Polynomial._coerce(num)
        den = Polynomial([1]) if den is None else Polynomial._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        scale = lcm(num.denominator(), den.denominator())
        num, den = num * scale, den * scale
        c = gcd(reduce(gcd, num.coeffs, 0), reduce(gcd, den.coeffs, 0))
        if den.lc < 0:
            c = -c
        self.num = Polynomial(x // c for x in num.coeffs)
        self.den = Polynomial(x // c for x in den.coeffs)

    @classmethod
    def x(cls) -> "RatFunction":
        return cls(Polynomial.x())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunction):
            try:
                other = RatFunction(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self) -> str:
        if self.den == 1:
            return f"{self.num}"
        return f"({self.num}) / ({self.den})"

    @staticmethod
    def _lift(other) -> "RatFunction":
        if isinstance(other, RatFunction):
            return other
        return RatFunction(other)

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RatFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __add__(self, other):
        other = self._lift(other)
        return RatFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunction(self.den ** (-k), self.num ** (-k))
        return RatFunction(self.num ** k, self.den ** k)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return _canon(Fraction(self.num[0]) / self.den[0])

    @property
    def degree(self) -> int:
        """Degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole")
        return _canon(Fraction(self.num(x)) / d)

    def compose_mobius(self, p, q, r, s) -> "RatFunction":
        """``self((p x + q) / (r x + s))`` as a reduced rational function."""
        top, bot = Polynomial([q, p]), Polynomial([s, r])
        n = max(self.num.degree, self.den.degree)
        return RatFunction(self.num.homogenize(top, bot, n), self.den.homogenize(top, bot, n))


class AffinePoly:
    """``const(x) + Y * slope(x)``: polynomial in x, affine in a parameter Y."""

    __slots__ = ("const", "slope")

    def __init__(self, const: Polynomial, slope: Polynomial):
        self.const = Polynomial._coerce(const)
        self.slope = Polynomial._coerce(slope)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffinePoly):
            return NotImplemented
        return self.const == other.const and self.slope == other.slope

    def __hash__(self):
        return hash((self.const, self.slope))

    def __repr__(self) -> str:
        return f"AffinePoly({list(self.const.coeffs)}, {list(self.slope.coeffs)})"

    def __add__(self, other: "AffinePoly") -> "AffinePoly":
        return AffinePoly(self.const + other.const, self.slope + other.slope)

    def __sub__(self, other: "AffinePoly") -> "AffinePoly":
        return AffinePoly(self.const - other.const, self.slope - other.slope)

    def __mul__(self, c) -> "AffinePoly":
        return AffinePoly(self.const * c, self.slope * c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "AffinePoly":
        return AffinePoly(self.const / c, self.slope / c)

    @property
    def degree(self) -> int:
        return max(self.const.degree, self.slope.degree)

    def coefficient(self, i: int) -> tuple:
        """Coefficient of ``x**i`` as the pair ``(c0, c1)`` meaning ``c0 + c1*Y``."""
        return self.const[i], self.slope[i]

    def coefficients(self) -> list[tuple]:
        return [self.coefficient(i) for i in range(self.degree + 1)]

    def specialize(self, value) -> Polynomial:
        return self.const + self.slope * value

    def substitute_y(self, a, b) -> "AffinePoly":
        """Replace Y by ``a + b*Y``."""
        return AffinePoly(self.const + self.slope * a, self.slope * b)
