"""Galois covers of P^1 built from two orbits, and the curve families over them.

For a finite ``G <= PGL2(Q)`` and points ``a, b`` in distinct orbits,

    h(x) = prod_{sigma in G} (x - sigma(a)) / (x - sigma(b))

is G-invariant of degree #G, with ``x - inf`` read as the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .catalog import GroupCase, get_case
from .moebius import FiniteSubgroup, ProjPoint, apply, orbit, stabilizer_order
from .poly import AffinePoly, Polynomial, RatFunction, prod_polys


class SameOrbitError(ValueError):
    pass


class IdentityFailure(AssertionError):
    """An identity that must hold exactly did not."""


def _linear_factor(pt: ProjPoint) -> Polynomial:
    """``x - pt`` scaled to ``den*x - num``; infinity gives the constant 1."""
    if pt.is_infinity:
        return Polynomial([1])
    return Polynomial.linear(pt.den, pt.num)


def orbit_product(group: Iterable, pt) -> Polynomial:
    """``prod_{sigma in G} (x - sigma(pt))`` over Q (monic unless inf occurs)."""
    pt = ProjPoint.of(pt)
    out = Polynomial([1])
    for h in group:
        img = apply(h, pt)
        if not img.is_infinity:
            out = out * Polynomial([-img.value(), 1])
    return out


def integral_orbit_product(group: FiniteSubgroup, pt) -> Polynomial:
    """``prod_i (alpha_i x - beta_i)**stab`` over the distinct orbit points."""
    pt = ProjPoint.of(pt)
    mult = stabilizer_order(group, pt)
    return prod_polys(_linear_factor(c) for c in orbit(group, pt)) ** mult


def _check_orbits(group, a, b):
    if set(orbit(group, a)) & set(orbit(group, b)):
        raise SameOrbitError(f"{a} and {b} lie in the same orbit")


def build_h(group: FiniteSubgroup, a, b) -> RatFunction:
    """The invariant function ``prod (x - sigma(a)) / (x - sigma(b))``."""
    a, b = ProjPoint.of(a), ProjPoint.of(b)
    _check_orbits(group, a, b)
    return RatFunction(orbit_product(group, a), orbit_product(group, b))


def build_rt(group: FiniteSubgroup, a, b) -> AffinePoly:
    """``R_t = prod (x - sigma(a)) - t prod (x - sigma(b))`` as const + t*slope."""
    a, b = ProjPoint.of(a), ProjPoint.of(b)
    _check_orbits(group, a, b)
    return AffinePoly(orbit_product(group, a), -orbit_product(group, b))


def compute_lambda(group: FiniteSubgroup, a, b=0) -> Fraction:
    """Scalar making the curve equation integral with content 1.

    ``lambda = -(prod gamma_j)**omega / prod alpha_i`` where ``beta_i/alpha_i``
    runs over orb(a) and ``delta_j/gamma_j`` over orb(b) minus infinity.
    """
    a, b = ProjPoint.of(a), ProjPoint.of(b)
    orb_b = orbit(group, b)
    if ProjPoint(1, 0) not in orb_b:
        raise ValueError(f"orbit of {b} does not contain infinity")
    omega = stabilizer_order(group, b)
    omega_a = stabilizer_order(group, a)
    alpha = 1
    for c in orbit(group, a):
        alpha *= c.den if not c.is_infinity else 1
    gamma = 1
    for c in orb_b:
        gamma *= c.den if not c.is_infinity else 1
    return -Fraction(gamma ** omega, alpha ** omega_a)


@dataclass(frozen=True)
class CurveFamily:
    """``A(x) + Y*B(x)`` with ``Y`` standing for ``y**n``."""

    case_id: str
    A: Polynomial
    B: Polynomial
    omega: int
    lam: Fraction

    @property
    def alpha_product(self) -> int:
        return self.A.lc

    @property
    def family(self) -> AffinePoly:
        return AffinePoly(self.A, self.B)

    def monic_family(self) -> AffinePoly:
        """The monic polynomial in x, affine in Y, that specializes to Q(P_y)."""
        return self.family / self.alpha_product

    def specialize(self, yn: int) -> Polynomial:
        return self.monic_family().specialize(yn)

    def integral_at(self, yn: int) -> bool:
        return self.specialize(yn).is_integral()


def build_curve(case: GroupCase | str) -> CurveFamily:
    if isinstance(case, str):
        case = get_case(case)
    g = case.group
    A = integral_orbit_product(g, case.a)
    B = integral_orbit_product(g, case.b)
    omega = stabilizer_order(g, case.b)
    lam = compute_lambda(g, case.a, case.b)
    # consistency with the scalar form prod(x - sigma(a)) - lam*Y*prod(x - sigma(b))
    scalar = AffinePoly(orbit_product(g, case.a), -orbit_product(g, case.b) * lam)
    if scalar * A.lc != AffinePoly(A, B):
        raise IdentityFailure(f"{case.case_id}: integral curve does not rescale the lambda form")
    return CurveFamily(case.case_id, A, B, omega, lam)


def verify_orbit_identities(group: FiniteSubgroup):
    """Check ``prod sigma(z) = 1`` and that ``prod (sigma(z) + 1)`` is constant.

    Returns the constant ``prod (sigma(z) + 1)``.
    """
    prod_sigma = RatFunction(1)
    prod_shift = RatFunction(1)
    for h in group:
        sz = RatFunction(Polynomial([h.q, h.p]), Polynomial([h.s, h.r]))
        prod_sigma = prod_sigma * sz
        prod_shift = prod_shift * (sz + 1)
    if prod_sigma != RatFunction(1):
        raise IdentityFailure(f"prod sigma(z) = {prod_sigma}, expected 1")
    if not prod_shift.is_constant():
        raise IdentityFailure(f"prod (sigma(z)+1) = {prod_shift} is not constant")
    return prod_shift.constant_value()


def verify_cover_invariance(group: FiniteSubgroup, a, b) -> bool:
    h = build_h(group, a, b)
    return all(h.compose_mobius(*tau.entries) == h for tau in group)


def _factor_str(pt: ProjPoint) -> str:
    a, b = pt.den, pt.num
    head = "x" if a == 1 else f"{a}x"
    return head if b == 0 else f"({head}{'-' if b > 0 else '+'}{abs(b)})"


def factored_layout(case: GroupCase | str, yn=None) -> str:
    """``1/k*(prod (alpha x - beta) + Y*prod (gamma x - delta)^omega)`` as text."""
    case = get_case(case) if isinstance(case, str) else case
    curve = build_curve(case)
    A = "".join(_factor_str(p) for p in orbit(case.group, case.a))
    omega = curve.omega
    parts = [_factor_str(p) + (f"^{omega}" if omega > 1 else "")
             for p in orbit(case.group, case.b) if not p.is_infinity]
    Y = "y^n" if yn is None else str(yn)
    inner = f"{A} + {Y}*{''.join(parts)}"
    k = curve.alpha_product
    return inner if k == 1 else f"1/{k}*({inner})"
