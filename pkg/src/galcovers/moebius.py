"""Exact arithmetic on P^1(Q) and PGL2(Q).

Points are reduced integer pairs, homographies are primitive integer
matrices in a canonical sign convention, so equality of objects is equality
of the underlying projective classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    pass


class OrderExceedsCap(ValueError):
    """Element order or group closure went past the requested cap."""


@dataclass(frozen=True, order=False)
class ProjPoint:
    """A point ``num/den`` of P^1(Q); infinity is ``(1, 0)``."""

    num: int
    den: int

    def __post_init__(self):
        n, d = self.num, self.den
        if n == 0 and d == 0:
            raise ValueError("(0, 0) is not a projective point")
        g = gcd(n, d)
        n, d = n // g, d // g
        if d < 0 or (d == 0 and n < 0):
            n, d = -n, -d
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def of(cls, value) -> "ProjPoint":
        """Build from an int, Fraction, ``"p/q"`` string, ``"inf"`` or a ProjPoint."""
        if isinstance(value, ProjPoint):
            return value
        if isinstance(value, str) and value.strip().lower() in ("inf", "oo", "infinity", "∞"):
            return INFINITY
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def value(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("infinity has no rational value")
        return Fraction(self.num, self.den)

    def sort_key(self):
        return (1, Fraction(0)) if self.is_infinity else (0, Fraction(self.num, self.den))

    def __lt__(self, other: "ProjPoint") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


INFINITY = ProjPoint(1, 0)
ZERO = ProjPoint(0, 1)


@dataclass(frozen=True)
class Homography:
    """``z -> (p z + q) / (r z + s)`` in canonical form (see :func:`normalize`)."""

    p: int
    q: int
    r: int
    s: int

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    def __call__(self, point) -> ProjPoint:
        return apply(self, ProjPoint.of(point))

    def __matmul__(self, other: "Homography") -> "Homography":
        return compose(self, other)

    def __pow__(self, k: int) -> "Homography":
        return power(self, k)

    def __str__(self) -> str:
        def lin(a, b, var="z"):
            if a == 0:
                return str(b)
            head = var if a == 1 else ("-" + var if a == -1 else f"{a}{var}")
            if b == 0:
                return head
            return f"{head}{'+' if b > 0 else '-'}{abs(b)}"

        top, bot = lin(self.p, self.q), lin(self.r, self.s)
        if bot == "1":
            return f"z -> {top}"
        return f"z -> ({top})/({bot})"

    def __repr__(self) -> str:
        return f"Homography{self.entries}"


def normalize(p: int, q: int, r: int, s: int) -> Homography:
    """Canonical PGL2(Q) representative of the integer matrix ``(p q; r s)``.

    Entries are divided by their gcd and the sign is fixed so that the first
    nonzero entry in row-major order is positive.

    >>> normalize(-2, 1, -1, -1)
    Homography(2, -1, 1, 1)
    >>> normalize(4, -2, 2, 2)
    Homography(2, -1, 1, 1)
    """
    if p * s - q * r == 0:
        raise SingularMatrixError(f"singular matrix ({p}, {q}; {r}, {s})")
    g = reduce(gcd, (p, q, r, s))
    p, q, r, s = p // g, q // g, r // g, s // g
    first = next(e for e in (p, q, r, s) if e != 0)
    if first < 0:
        p, q, r, s = -p, -q, -r, -s
    return Homography(p, q, r, s)


def from_fraction_matrix(p, q, r, s) -> Homography:
    """Normalize a matrix with rational entries."""
    fr = [Fraction(e) for e in (p, q, r, s)]
    den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
    return normalize(*(int(f * den) for f in fr))


IDENTITY = Homography(1, 0, 0, 1)


def apply(h: Homography, pt: ProjPoint) -> ProjPoint:
    return ProjPoint(h.p * pt.num + h.q * pt.den, h.r * pt.num + h.s * pt.den)


def compose(h1: Homography, h2: Homography) -> Homography:
    """``h1 o h2`` (apply ``h2`` first)."""
    p1, q1, r1, s1 = h1.entries
    p2, q2, r2, s2 = h2.entries
    return normalize(p1 * p2 + q1 * r2, p1 * q2 + q1 * s2, r1 * p2 + s1 * r2, r1 * q2 + s1 * s2)


def inverse(h: Homography) -> Homography:
    return normalize(h.s, -h.q, -h.r, h.p)


def power(h: Homography, k: int) -> Homography:
    if k < 0:
        h, k = inverse(h), -k
    out = IDENTITY
    for _ in range(k):
        out = compose(out, h)
    return out


def element_order(h: Homography, cap: int = 24) -> int:
    """Least ``k <= cap`` with ``h**k`` the identity."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    acc = h
    for k in range(1, cap + 1):
        if acc == IDENTITY:
            return k
        acc = compose(acc, h)
    raise OrderExceedsCap(f"{h} has order > {cap}")


@dataclass(frozen=True)
class FiniteSubgroup:
    """A finite subgroup of PGL2(Q) with its generators."""

    elements: tuple[Homography, ...]
    generators: tuple[Homography, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, h) -> bool:
        return h in self.elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_closed(self) -> bool:
        els = set(self.elements)
        return IDENTITY in els and all(compose(a, b) in els for a in els for b in els) \
            and all(inverse(a) in els for a in els)

    def is_cyclic(self) -> bool:
        return any(element_order(h, len(self)) == len(self) for h in self.elements)


def _element_key(h: Homography):
    return (h != IDENTITY, h.entries)


def generate_group(gens: Sequence[Homography], cap: int = 24) -> FiniteSubgroup:
    """Closure of ``gens`` under composition.

    Elements come back identity first, then in lexicographic order of the
    canonical matrix entries.
    """
    gens = tuple(gens)
    for g in gens:
        element_order(g, cap)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = compose(h, g)
                if e not in seen:
                    seen.add(e)
                    if len(seen) > cap:
                        raise OrderExceedsCap(f"group closure exceeds {cap} elements")
                    nxt.append(e)
        frontier = nxt
    return FiniteSubgroup(tuple(sorted(seen, key=_element_key)), gens)


def orbit(group: Iterable[Homography], pt) -> list[ProjPoint]:
    """Distinct images of ``pt``, finite points by value then infinity."""
    pt = ProjPoint.of(pt)
    return sorted({apply(h, pt) for h in group}, key=ProjPoint.sort_key)


def stabilizer_order(group: FiniteSubgroup, pt) -> int:
    return len(group) // len(orbit(group, pt))


def stabilizer(group: FiniteSubgroup, pt) -> list[Homography]:
    pt = ProjPoint.of(pt)
    return [h for h in group if apply(h, pt) == pt]


def reduces_mod(h: Homography, m: int) -> bool:
    """True when the matrix of ``h`` stays invertible modulo ``m``."""
    return gcd(h.det, m) == 1
