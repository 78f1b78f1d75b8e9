"""Exact real-root counting, signatures, discriminants and the unit-rank bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import AffinePoly, Polynomial, interpolate, is_squarefree, resultant

INF = float("inf")
Bound = Union[int, Fraction, float]


class NotSquarefreeError(ValueError):
    pass


class GaloisDichotomyError(AssertionError):
    """A Galois polynomial with some but not all roots real."""


@dataclass(frozen=True)
class Signature:
    r1: int
    r2: int

    @property
    def degree(self) -> int:
        return self.r1 + 2 * self.r2

    @property
    def unit_rank(self) -> int:
        return self.r1 + self.r2 - 1

    @property
    def kind(self) -> str:
        if self.r2 == 0:
            return "real"
        if self.r1 == 0:
            return "imaginary"
        return "mixed"

    def __iter__(self):
        return iter((self.r1, self.r2))


def _integral(P: Polynomial) -> Polynomial:
    return P if P.is_integral() and not P.is_zero() else P.primitive()


def sturm_sequence(P: Polynomial) -> list[Polynomial]:
    """Sturm chain via primitive pseudo-remainders.

    Each step keeps the sign of ``-rem(p_{i-1}, p_i)`` and strips the
    content, so coefficients stay close to the size of the input.
    """
    P = _integral(P)
    seq = [P.primitive() if P.lc > 0 else -(P.primitive()), P.derivative()]
    if seq[1].is_zero():
        return seq[:1]
    seq[1] = _pos_scale(seq[1])
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = a.pseudo_rem(b)
        if r.is_zero():
            break
        if b.lc < 0 and (a.degree - b.degree + 1) % 2:
            r = -r
        seq.append(_pos_scale(-r))
    return seq


def _pos_scale(p: Polynomial) -> Polynomial:
    """Divide by the positive content (sign preserved)."""
    q = p.primitive()
    return q if (q.lc > 0) == (p.lc > 0) else -q


def _sign_at(p: Polynomial, x: Bound) -> int:
    if x == INF:
        v = p.lc
    elif x == -INF:
        v = p.lc * (-1) ** p.degree
    else:
        v = p(Fraction(x))
    return (v > 0) - (v < 0)


def _variations(seq: list[Polynomial], x: Bound) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(P: Polynomial, lo: Bound = -INF, hi: Bound = INF, check: bool = True) -> int:
    """Number of distinct real roots of squarefree ``P`` in ``(lo, hi]``."""
    if check and not is_squarefree(P):
        raise NotSquarefreeError("polynomial is not squarefree")
    if P.degree < 1:
        return 0
    if lo >= hi:
        return 0
    seq = sturm_sequence(P)
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(P: Polynomial) -> int:
    """Integer Cauchy bound: every real root lies in ``[-B, B]``."""
    lc = abs(Fraction(P.lc))
    m = max(abs(Fraction(c)) for c in P.coeffs[:-1]) if P.degree > 0 else 0
    return int(1 + m / lc) + 1


def integer_roots(P: Polynomial) -> list[int]:
    """All integer roots, located by Sturm bisection on integer intervals."""
    P = _integral(P)
    if P.degree < 1:
        return []
    sq = P
    if not is_squarefree(P):
        from .poly import poly_gcd

        sq = (P // poly_gcd(P, P.derivative())).primitive()
    seq = sturm_sequence(sq)
    B = root_bound(sq)
    out = []
    stack = [(-B - 1, B)]
    while stack:
        lo, hi = stack.pop()
        k = _variations(seq, lo) - _variations(seq, hi)
        if k == 0:
            continue
        if hi - lo == 1:
            if sq(hi) == 0:
                out.append(hi)
            continue
        mid = (lo + hi) // 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def rational_roots(P: Polynomial) -> list[Fraction]:
    """Rational roots: ``lc * r`` is an integer root of the monic transform."""
    P = _integral(P)
    if P.degree < 1:
        return []
    lc = P.lc
    d = P.degree
    # Q(z) = lc^(d-1) P(z / lc), monic with integer coefficients
    Q = Polynomial([c * lc ** (d - 1 - i) if i < d else 1 for i, c in enumerate(P.coeffs)])
    return sorted({Fraction(z, lc) for z in integer_roots(Q)})


def signature_of(P: Polynomial, galois: bool = False) -> Signature:
    """``(r1, r2)`` of the field defined by irreducible ``P``.

    With ``galois=True`` the polynomial is a specialization of a Galois
    family, so either all or none of its roots are real.
    """
    if not is_squarefree(P):
        raise NotSquarefreeError("polynomial is not squarefree")
    r1 = sturm_count(P, check=False)
    sig = Signature(r1, (P.degree - r1) // 2)
    if galois and r1 not in (0, P.degree):
        raise GaloisDichotomyError(f"{r1} real roots out of {P.degree}")
    return sig


def discriminant(P: Polynomial):
    """``(-1)**(d(d-1)/2) * Res(P, P') / lc(P)``."""
    d = P.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    val = Fraction(resultant(P, P.derivative())) / Fraction(P.lc)
    if (d * (d - 1) // 2) % 2:
        val = -val
    return val.numerator if val.denominator == 1 else val


def family_discriminant(F: AffinePoly) -> Polynomial:
    """Discriminant of ``F(x, v)`` as an exact polynomial in ``v``.

    Its degree in v is at most ``2d - 2``, so interpolation through
    ``2d - 1`` nodes is an identity; two more nodes are checked anyway.
    """
    d = F.degree
    nodes = list(range(2 * d + 1))
    vals = []
    for v in nodes:
        P = F.specialize(v)
        vals.append(discriminant(P) if P.degree == d else None)
    good = [(v, D) for v, D in zip(nodes, vals) if D is not None]
    if len(good) < 2 * d:
        raise ValueError("leading coefficient vanishes at too many nodes")
    D = interpolate([v for v, _ in good[: 2 * d - 1]], [D for _, D in good[: 2 * d - 1]])
    if any(D(v) != val for v, val in good[2 * d - 1:]):
        raise AssertionError("discriminant interpolation is inconsistent")
    return D


def disc_bits(P: Polynomial) -> int:
    D = Fraction(discriminant(P))
    return abs(D.numerator).bit_length()


def rank_bound(s: int, sig: Signature) -> int:
    """Lower bound ``s - rank O^x`` on the n-rank, floored at 0."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return max(0, s - (sig.r1 + sig.r2 - 1))
