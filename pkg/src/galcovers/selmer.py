"""Arithmetic side conditions and the necessary Selmer checks.

The congruence tables and function lists come verbatim from the catalog.
Everything derivable (integrality residues, coprimality primes, the
function recipe, the multiplicative relation) is recomputed here and used
as a cross-check against those tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from .catalog import GroupCase, get_case
from .cover import build_curve
from .moebius import ProjPoint, orbit
from .numtheory import factorize, is_nth_power, nth_root_residue, solve_power_congruence
from .poly import Polynomial, RatFunction, interpolate, is_squarefree, norm_resultant


class ConditionError(ValueError):
    """``y`` or ``n`` violates the congruence table of a case."""

    def __init__(self, case_id: str, failed: list[str], detail: str):
        self.case_id = case_id
        self.failed = failed
        super().__init__(f"{case_id}: condition {', '.join(failed)} fails ({detail})")


@dataclass(frozen=True)
class SelmerFunction:
    """``(alpha x - beta) / (x - pole)**eps``, or ``(x - pole)**2 / scale`` if special."""

    alpha: int = 1
    beta: int = 0
    eps: int = 0
    pole: int = -1
    special: bool = False
    scale: int = 1

    def __post_init__(self):
        if not self.special and gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"gcd(alpha, beta) must be 1, got ({self.alpha}, {self.beta})")
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    def to_ratfunc(self) -> RatFunction:
        lin_pole = Polynomial([-self.pole, 1])
        if self.special:
            return RatFunction(lin_pole**2, Polynomial([self.scale]))
        return RatFunction(Polynomial.linear(self.alpha, self.beta), lin_pole**self.eps)

    def __str__(self) -> str:
        def lin(a, b):
            head = "x" if a == 1 else f"{a}x"
            return head if b == 0 else f"{head}{'-' if b > 0 else '+'}{abs(b)}"

        pole = lin(1, self.pole)
        if self.special:
            return f"({pole})^2/{self.scale}"
        if self.eps:
            return f"({lin(self.alpha, self.beta)})/({pole})"
        return lin(self.alpha, self.beta)


@dataclass(frozen=True)
class CongruenceCondition:
    case_id: str
    n_coprime_to: int
    modulus: int
    coprime_set: tuple[int, ...]
    y_residues: dict = field(default_factory=dict)
    n_modulus: int = 1
    power_residue: int | None = None
    labels: tuple = ("(i)", "(ii)", "(iii)")

    def n_ok(self, n: int) -> bool:
        return n >= 1 and gcd(n, self.n_coprime_to) == 1

    def t0(self, n: int) -> int:
        """The required residue of ``y**n`` mod ``modulus``."""
        if self.power_residue is not None:
            return self.power_residue % self.modulus
        return pow(self.y_residue(n), n, self.modulus)

    def y_residue(self, n: int) -> int:
        """The explicit residue of y (one solution for power conditions)."""
        if self.power_residue is not None:
            return nth_root_residue(self.power_residue, n, self.modulus)
        key = None if None in self.y_residues else n % self.n_modulus
        try:
            return self.y_residues[key]
        except KeyError:
            raise ConditionError(self.case_id, [self.labels[0] or self.labels[1]],
                                 f"no residue listed for n={n}") from None

    def residues(self, n: int) -> list[int]:
        """Every residue of y mod ``modulus`` meeting the y-condition."""
        if self.power_residue is not None:
            return solve_power_congruence(self.power_residue, n, self.modulus)
        return [self.y_residue(n)]

    def failures(self, y: int, n: int) -> list[tuple[str, str]]:
        out = []
        if not self.n_ok(n):
            out.append((self.labels[0] or "(n)", f"n={n} not coprime to {self.n_coprime_to}"))
            return out
        if self.power_residue is not None:
            if pow(y, n, self.modulus) != self.power_residue % self.modulus:
                out.append((self.labels[1], f"y^n != {self.power_residue} mod {self.modulus}"))
        elif y % self.modulus != self.y_residue(n):
            out.append((self.labels[1], f"y != {self.y_residue(n)} mod {self.modulus}"))
        bad = [p for p in self.coprime_set if y % p == 0]
        if bad:
            out.append((self.labels[2], f"y divisible by {', '.join(map(str, bad))}"))
        return out

    def admissible(self, y: int, n: int) -> bool:
        return not self.failures(y, n)

    def check(self, y: int, n: int) -> None:
        fails = self.failures(y, n)
        if fails:
            labels = sorted({f[0] for f in fails})
            raise ConditionError(self.case_id, labels, "; ".join(f[1] for f in fails))


def case_conditions(case: GroupCase | str) -> CongruenceCondition:
    case = get_case(case) if isinstance(case, str) else case
    t = case.conditions
    return CongruenceCondition(
        case.case_id, t.n_coprime_to, t.modulus, tuple(t.coprime_primes), dict(t.y_residues),
        t.n_modulus, t.power_residue, t.labels,
    )


def admissible_ys(case: GroupCase | str, n: int, start: int = 1, stop: int | None = None) -> Iterator[int]:
    """Admissible y in increasing order from ``start`` (exclusive ``stop``)."""
    cond = case_conditions(case)
    if not cond.n_ok(n):
        raise ConditionError(cond.case_id, [cond.labels[0] or "(n)"], f"n={n} not allowed")
    m = cond.modulus
    res = cond.residues(n)
    if not res:
        return
    base = (max(start, 1) // m) * m
    while True:
        for r in res:
            y = base + r
            if y < max(start, 1):
                continue
            if stop is not None and y >= stop:
                return
            if all(y % p for p in cond.coprime_set):
                yield y
        base += m


def base_congruence(case: GroupCase | str) -> tuple[int, list[int]]:
    """Residues t mod prod(alpha_i) with ``A + t*B = 0`` coefficientwise.

    These are exactly the values of y^n for which the monic specialization
    has integer coefficients.
    """
    case = get_case(case) if isinstance(case, str) else case
    curve = build_curve(case)
    m = curve.alpha_product
    A = [c % m for c in curve.A.coeffs]
    B = [c % m for c in curve.B.coeffs]
    B += [0] * (len(A) - len(B))
    out = [t for t in range(m) if all((a + t * b) % m == 0 for a, b in zip(A, B))]
    if not out:
        raise ValueError(f"{case.case_id}: no residue makes the family integral")
    return m, out


def lemma_congruence(case: GroupCase | str) -> int | None:
    """Residue predicted by the closed-form congruence (sum of orbit terms).

    Cyclic: ``lam^-1 * sum sigma(a)``; dihedral: ``-lam^-1 * sum_{sigma != tau}
    sigma(a) tau(a)`` over ordered pairs.  Returns None when the value is not
    a unit-denominator rational modulo ``prod alpha_i``.
    """
    case = get_case(case) if isinstance(case, str) else case
    g = case.group
    m = build_curve(case).alpha_product
    pts = [h(case.a).value() for h in g]
    inv_lam = 1 / Fraction(case.lam)
    if case.is_dihedral:
        val = -inv_lam * sum(pts[i] * pts[j] for i in range(len(pts)) for j in range(len(pts)) if i != j)
    else:
        val = inv_lam * sum(pts)
    if gcd(val.denominator, m) != 1:
        return None
    return val.numerator * pow(val.denominator, -1, m) % m


def pairwise_gcd_bound(points: Sequence) -> tuple[int, set[int]]:
    """``|prod_{i<j} (alpha_i beta_j - beta_i alpha_j) / gcd(alpha_i, alpha_j)|``.

    Returns the product together with its prime support.
    """
    pts = [ProjPoint.of(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("orbit contains duplicate points")
    if any(p.is_infinity for p in pts):
        raise ValueError("points must be finite")
    total = 1
    primes: set[int] = set()
    for p1, p2 in combinations(pts, 2):
        v = abs(p1.den * p2.num - p1.num * p2.den) // gcd(p1.den, p2.den)
        total *= v
        primes |= set(factorize(v))
    return total, primes


def selmer_functions(case: GroupCase | str) -> list[SelmerFunction]:
    case = get_case(case) if isinstance(case, str) else case
    pole = case.pole if case.pole is not None else -1
    out = []
    for entry in case.selmer_list:
        if entry[0] == "special":
            out.append(SelmerFunction(pole=pole, special=True, scale=case.unit_scale))
        else:
            _, alpha, beta, eps = entry
            out.append(SelmerFunction(alpha, beta, eps, pole))
    return out


def _recipe_function(pt: ProjPoint, case: GroupCase) -> SelmerFunction:
    alpha, beta = pt.den, pt.num
    if case.pole is None:
        return SelmerFunction(alpha, beta, 0, -1)
    eps = 1 if (alpha * case.pole - beta) % case.unit_scale == 0 else 0
    return SelmerFunction(alpha, beta, eps, case.pole)


def recipe_functions(case: GroupCase | str) -> tuple[list[SelmerFunction], list[SelmerFunction]]:
    """Unit functions (from orb(0)) and the functions attached to orb(a).

    A factor ``alpha x - beta`` is divided by ``x - pole`` exactly when the
    unit scale divides its value ``alpha*pole - beta`` at the pole.  Without a
    pole nothing is divided and the pole factor itself stays a unit function.
    """
    case = get_case(case) if isinstance(case, str) else case
    g = case.group
    skip = {ProjPoint(1, 0)}
    if case.pole is not None:
        skip.add(ProjPoint.of(case.pole))
    units = [_recipe_function(c, case) for c in orbit(g, case.b) if c not in skip]
    psis = [_recipe_function(c, case) for c in orbit(g, case.a)]
    return units, psis


@dataclass
class RelationReport:
    case_id: str
    holds: bool
    eps_sum: int
    dropped: list[SelmerFunction]
    listed_from_recipe: bool
    length_ok: bool

    @property
    def ok(self) -> bool:
        return self.holds and self.listed_from_recipe and self.length_ok


def verify_function_relation(case: GroupCase | str) -> RelationReport:
    """Check ``prod psi_i = -Y prod phi_j**omega`` on the curve ``A + Y B = 0``.

    On the curve ``A = -Y B``, so the relation is equivalent to the two exact
    identities ``prod psi_i * (x - c)**E = A`` and ``B / (x - c)**E =
    prod phi_j**omega`` where ``E`` is the total number of divisions.
    Also checks that the published list is the recipe list minus one
    function, plus the last function when a pole is used.
    """
    case = get_case(case) if isinstance(case, str) else case
    curve = build_curve(case)
    units, psis = recipe_functions(case)
    eps_sum = sum(f.eps for f in psis)
    pole = Polynomial([-(case.pole if case.pole is not None else -1), 1])
    prod_psi = RatFunction(1)
    for f in psis:
        prod_psi = prod_psi * f.to_ratfunc()
    prod_phi = RatFunction(1)
    for f in units:
        prod_phi = prod_phi * f.to_ratfunc() ** curve.omega
    holds = (prod_psi * RatFunction(pole) ** eps_sum == RatFunction(curve.A)
             and RatFunction(curve.B) / RatFunction(pole) ** eps_sum == prod_phi)
    if case.pole is not None:
        holds = holds and 2 * eps_sum == case.order

    listed = selmer_functions(case)
    plain = [f for f in listed if not f.special]
    recipe = units + psis
    dropped = [f for f in recipe if f not in plain]
    from_recipe = all(f in recipe for f in plain) and len(dropped) == 1
    has_special = any(f.special for f in listed)
    from_recipe = from_recipe and has_special == (case.pole is not None)
    return RelationReport(case.case_id, holds, eps_sum, dropped, from_recipe, len(listed) == case.s)


def norm_of_function(P: Polynomial, g) -> Fraction | int:
    """Field norm of ``g(x)`` at a root ``x`` of the monic polynomial ``P``."""
    if not P.is_monic():
        raise ValueError("P must be monic")
    rf = g.to_ratfunc() if isinstance(g, SelmerFunction) else RatFunction._lift(g)
    den = norm_resultant(P, rf.den)
    if den == 0:
        raise ZeroDivisionError("function has a pole at a root of P")
    val = Fraction(norm_resultant(P, rf.num)) / den
    return val.numerator if val.denominator == 1 else val


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial of ``g(x)`` in ``Q[x]/(P)``."""

    poly: Polynomial
    separates: bool

    @property
    def is_integral(self) -> bool:
        return self.poly.is_integral()

    @property
    def constant_is_unit(self) -> bool:
        return self.poly[0] in (1, -1)


def minimal_polynomial(P: Polynomial, g) -> CharPoly:
    """Monic characteristic polynomial of ``g`` evaluated at a root of ``P``.

    Computed by eliminating x: ``Res_x(P, den*T - num) / Res_x(P, den)``,
    evaluated at ``deg P + 1`` values of T and interpolated.  When the result
    is squarefree it is the minimal polynomial; otherwise it is a power of it
    and ``separates`` is False.
    """
    if not P.is_monic():
        raise ValueError("P must be monic")
    rf = g.to_ratfunc() if isinstance(g, SelmerFunction) else RatFunction._lift(g)
    den_norm = norm_resultant(P, rf.den)
    if den_norm == 0:
        raise ZeroDivisionError("function has a pole at a root of P")
    d = P.degree
    ts = list(range(d + 1))
    vals = [Fraction(norm_resultant(P, rf.den * t - rf.num)) / den_norm for t in ts]
    cp = interpolate(ts, vals)
    return CharPoly(cp, is_squarefree(cp))


@dataclass
class SelmerReport:
    case_id: str
    y: int
    n: int
    norms: list[tuple[str, object, bool]]
    special_minpoly: CharPoly | None = None

    @property
    def ok(self) -> bool:
        special_ok = self.special_minpoly is None or (
            self.special_minpoly.is_integral and self.special_minpoly.constant_is_unit)
        return all(v for _, _, v in self.norms) and special_ok


def check_selmer_necessary(case: GroupCase | str, y: int, n: int) -> SelmerReport:
    """Norms of every listed function must be +-(n-th powers) at P_y."""
    case = get_case(case) if isinstance(case, str) else case
    case_conditions(case).check(y, n)
    P = build_curve(case).specialize(y**n)
    if not P.is_integral():
        raise ConditionError(case.case_id, ["(A1)"], "specialization is not integral")
    norms = []
    special = None
    for f in selmer_functions(case):
        v = norm_of_function(P, f)
        norms.append((str(f), v, is_nth_power(v, n)))
        if f.special:
            special = minimal_polynomial(P, f)
    return SelmerReport(case.case_id, y, n, norms, special)
