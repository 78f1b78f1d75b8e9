"""Family engine: specialize, certify, check, export, and query the CAS."""

from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .cas import CasConfig, CasError, class_group, is_irreducible
from .catalog import GroupCase, get_case
from .cover import build_curve, build_rt
from .moebius import ProjPoint
from .tables import SUBFIELDS
from .poly import AffinePoly, Polynomial, is_squarefree, poly_gcd
from .realroots import GaloisDichotomyError, Signature, disc_bits, rank_bound, rational_roots, signature_of
from .selmer import ConditionError, admissible_ys, case_conditions, check_selmer_necessary

log = logging.getLogger(__name__)

# checks whose failure means the construction itself is wrong; irreducibility
# failures are data (the exceptional set of the specialization theorem)
STRUCTURAL_CHECKS = ("integral", "two_paths", "selmer_norms", "special_unit", "signature_claim")


@dataclass
class FieldCandidate:
    case_id: str
    y: int
    n: int
    poly: Polynomial
    signature: Signature | None
    disc_bits: int
    # name -> True / False, or None when not applicable or inconclusive
    checks: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def all_checks_pass(self) -> bool:
        return all(v is not False for v in self.checks.values())

    @property
    def structural_ok(self) -> bool:
        return all(self.checks.get(k) is not False for k in STRUCTURAL_CHECKS)

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "y": self.y,
            "n": self.n,
            "poly": [int(c) for c in self.poly.coeffs],
            "signature": None if self.signature is None else {"r1": self.signature.r1, "r2": self.signature.r2},
            "disc_bits": self.disc_bits,
            "checks": dict(self.checks),
        }


# ---------------------------------------------------------------- irreducibility

@dataclass
class Irreducibility:
    verdict: str  # "yes", "no" or "inconclusive"
    factor: Polynomial | None = None
    primes: list[int] = field(default_factory=list)
    possible_degrees: list[int] = field(default_factory=list)

    def __bool__(self):
        return self.verdict == "yes"


def _small_primes() -> Iterator[int]:
    p = 2
    while True:
        if all(p % q for q in range(2, int(p**0.5) + 1)):
            yield p
        p += 1


def degree_patterns(P: Polynomial, count: int = 25, use_numba: bool | None = None) -> list[tuple[int, list[int]]]:
    """Factor-degree patterns of P mod the first ``count`` good primes.

    A prime is good when it does not divide the leading coefficient and P
    stays squarefree mod p, i.e. p does not divide lc * disc.
    """
    P = P.primitive()
    out = []
    for p in _small_primes():
        if len(out) >= count:
            break
        if P.lc % p == 0:
            continue
        f = _kernels.reduce_mod(P.coeffs, p)
        inv = pow(int(f[-1]), -1, p)
        f = f * inv % p
        df = _kernels.reduce_mod(Polynomial([int(c) for c in f]).derivative().coeffs, p)
        if df.size == 0 or _kernels.gcd_mod(f, df, p, use_numba).shape[0] > 1:
            continue
        out.append((p, _kernels.ddf_degrees(f, p, use_numba)))
    return out


def _subset_sums(degs: Sequence[int]) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def irreducible(P: Polynomial, primes: int = 25, cas: CasConfig | None = None,
                use_numba: bool | None = None) -> Irreducibility:
    """Certify irreducibility over Q of an integer polynomial.

    "no" comes with a factor (rational root or repeated factor); "yes" comes
    from a degree-pattern certificate: the degrees a rational factor could
    have, intersected over several primes, leave only 0 and deg P.
    """
    P = P.primitive()
    d = P.degree
    if d <= 0:
        return Irreducibility("no", P)
    if d == 1:
        return Irreducibility("yes")
    if not is_squarefree(P):
        g = poly_gcd(P, P.derivative()).primitive()
        return Irreducibility("no", g)
    roots = rational_roots(P)
    if roots:
        r = roots[0]
        return Irreducibility("no", Polynomial.linear(r.denominator, r.numerator))
    if d <= 3:
        return Irreducibility("yes")
    possible = set(range(d + 1))
    used = []
    for p, degs in degree_patterns(P, primes, use_numba):
        possible &= _subset_sums(degs)
        used.append(p)
        if possible == {0, d}:
            return Irreducibility("yes", primes=used, possible_degrees=sorted(possible))
    if cas is not None:
        try:
            if is_irreducible(P.coeffs, cas):
                return Irreducibility("yes", primes=used, possible_degrees=sorted(possible))
        except CasError as e:
            log.warning("CAS irreducibility query failed: %s", e)
    return Irreducibility("inconclusive", primes=used, possible_degrees=sorted(possible))


# ---------------------------------------------------------------- specialization

def specialize(case: GroupCase | str, y: int, n: int, checks: bool = True,
               cas: CasConfig | None = None) -> FieldCandidate:
    """Monic integral polynomial of the family at ``y**n`` with all checks recorded."""
    case = get_case(case) if isinstance(case, str) else case
    case_conditions(case).check(y, n)
    curve = build_curve(case)
    v = y**n
    P = curve.specialize(v)
    res: dict = {}
    res["integral"] = P.is_integral() and P.is_monic()
    if not res["integral"]:
        raise ConditionError(case.case_id, ["(A1)"], "specialization is not integral")
    P = Polynomial([int(c) for c in P.coeffs])
    if not checks:
        sig = signature_of(P, galois=False) if is_squarefree(P) else None
        return FieldCandidate(case.case_id, y, n, P, sig, disc_bits(P), res)

    # scalar form prod(x - sigma(a)) - lam*v*prod(x - sigma(0)) built independently
    rt = build_rt(case.group, case.a, ProjPoint(0, 1))
    res["two_paths"] = rt.specialize(Fraction(case.lam) * v) == P

    sel = check_selmer_necessary(case, y, n)
    res["selmer_norms"] = all(ok for _, _, ok in sel.norms)
    if sel.special_minpoly is not None:
        sp = sel.special_minpoly
        res["special_unit"] = sp.is_integral and sp.constant_is_unit
    else:
        res["special_unit"] = None

    sig = None
    if is_squarefree(P):
        try:
            sig = signature_of(P, galois=True)
            res["galois_dichotomy"] = True
        except GaloisDichotomyError:
            sig = signature_of(P)
            res["galois_dichotomy"] = False
    else:
        res["galois_dichotomy"] = None
    if v > case.signature_threshold and sig is not None:
        res["signature_claim"] = sig.kind == ("real" if case.totally_real else "imaginary")
    else:
        res["signature_claim"] = None

    irr = irreducible(P, cas=cas)
    res["irreducible"] = {"yes": True, "no": False}.get(irr.verdict)
    return FieldCandidate(case.case_id, y, n, P, sig, disc_bits(P), res)


def family(case: GroupCase | str, n: int, count: int | None = None, start_y: int = 1,
           stop_y: int | None = None, parallel: int = 1, cas: CasConfig | None = None) -> Iterator[FieldCandidate]:
    """Candidates for admissible y in increasing order."""
    ys = admissible_ys(case, n, start_y, stop_y)
    if count is not None:
        ys = islice(ys, count)
    if parallel <= 1:
        for y in ys:
            yield specialize(case, y, n, cas=cas)
        return
    with ThreadPoolExecutor(parallel) as pool:
        # map preserves input order, so the stream stays deterministic
        yield from pool.map(lambda y: specialize(case, y, n, cas=cas), ys)


# ---------------------------------------------------------------- subfields

@dataclass(frozen=True)
class SubfieldPolynomial:
    expanded: AffinePoly
    factored: AffinePoly

    @property
    def identity_holds(self) -> bool:
        return self.expanded == self.factored

    def specialize(self, v) -> Polynomial:
        return self.expanded.specialize(v)


def _affine_from_pairs(pairs) -> AffinePoly:
    return AffinePoly(Polynomial([c0 for c0, _ in pairs]), Polynomial([c1 for _, c1 in pairs]))


def subfield_families(case_id: str) -> list[SubfieldPolynomial]:
    if case_id not in SUBFIELDS:
        raise ValueError(f"subfield polynomials are only tabulated for {', '.join(SUBFIELDS)}")
    out = []
    for entry in SUBFIELDS[case_id]:
        base = Polynomial([1])
        for alpha, beta in entry["factors"]:
            base = base * Polynomial.linear(alpha, beta)
        fact = AffinePoly(base, Polynomial(entry["y_part"])) * entry["prefactor"]
        out.append(SubfieldPolynomial(_affine_from_pairs(entry["expanded"]), fact))
    return out


def subfield_polynomials(case_id: str, y: int, n: int) -> list[Polynomial]:
    """Specialized subfield polynomials after checking their factored identities."""
    case_conditions(case_id).check(y, n)
    fams = subfield_families(case_id)
    bad = [i for i, f in enumerate(fams) if not f.identity_holds]
    if bad:
        raise AssertionError(f"{case_id}: subfield identity {bad} fails")
    return [f.specialize(y**n) for f in fams]


def generic_family(case_id: str, a) -> AffinePoly:
    """``R_t`` of a catalog group for an arbitrary base point ``a`` (b = 0)."""
    case = get_case(case_id)
    return build_rt(case.group, ProjPoint.of(a), ProjPoint(0, 1))


# ---------------------------------------------------------------- class groups

@dataclass
class CasReport:
    class_group_invariants: list[int]
    computed_rank_n: int | None
    tool_version: str
    certified: bool
    n: int | None = None
    transcript: str | None = None

    def rank(self, n: int) -> int:
        return n_rank(self.class_group_invariants, n)

    @property
    def consistent(self) -> bool:
        return self.n is None or self.computed_rank_n == self.rank(self.n)


def n_rank(invariants: Iterable[int], n: int) -> int:
    return sum(1 for d in invariants if d % n == 0)


def cas_classgroup(P: Polynomial | Sequence[int], cas: CasConfig, n: int | None = None,
                   rigor: bool = False, timeout: float | None = None) -> CasReport:
    coeffs = P.coeffs if isinstance(P, Polynomial) else list(P)
    reply = class_group(coeffs, cas, rigor=rigor, timeout=timeout)
    rank = n_rank(reply.cyc, n) if n is not None else None
    return CasReport(reply.cyc, rank, reply.version, reply.certified, n,
                     str(reply.transcript) if reply.transcript else None)


@dataclass
class RankClaim:
    case_id: str
    y: int
    n: int
    computed: int | None
    bound: int
    passed: bool | None
    error: str | None = None
    report: CasReport | None = None


def verify_rank_claim(case: GroupCase | str, y: int, n: int, cas: CasConfig,
                      timeout: float | None = None, raise_errors: bool = True) -> RankClaim:
    case = get_case(case) if isinstance(case, str) else case
    cand = specialize(case, y, n, checks=False)
    if cand.signature is None:
        raise ValueError(f"{case.case_id} at y={y}: polynomial is not squarefree")
    bound = rank_bound(case.s, cand.signature)
    try:
        rep = cas_classgroup(cand.poly, cas, n, timeout=timeout)
    except CasError as e:
        if raise_errors:
            raise
        return RankClaim(case.case_id, y, n, None, bound, None, f"{type(e).__name__}: {e}")
    return RankClaim(case.case_id, y, n, rep.computed_rank_n, bound, rep.computed_rank_n >= bound, report=rep)


@dataclass
class BatchResult:
    claims: list[RankClaim]

    @property
    def answered(self) -> list[RankClaim]:
        return [c for c in self.claims if c.passed is not None]

    @property
    def pass_rate(self) -> float:
        ans = self.answered
        return sum(c.passed for c in ans) / len(ans) if ans else 0.0

    @property
    def ok(self) -> bool:
        """At least 20 answered candidates and at least half pass."""
        return len(self.answered) >= 20 and self.pass_rate >= 0.5


def batch_rank_claims(case: GroupCase | str, n: int, count: int, cas: CasConfig, start_y: int = 2,
                      parallel: int = 1, timeout: float | None = None) -> BatchResult:
    """Rank claims over the first ``count`` admissible y whose polynomial is irreducible.

    Individual failures and CAS errors are kept as data.
    """
    case = get_case(case) if isinstance(case, str) else case
    ys = []
    for y in admissible_ys(case, n, start_y):
        P = specialize(case, y, n, checks=False).poly
        if irreducible(P).verdict != "no":
            ys.append(y)
        if len(ys) >= count:
            break
    with ThreadPoolExecutor(max(1, parallel)) as pool:
        claims = list(pool.map(
            lambda y: verify_rank_claim(case, y, n, cas, timeout=timeout, raise_errors=False), ys))
    return BatchResult(claims)


# ---------------------------------------------------------------- export

CSV_COLUMNS = ("case", "y", "n", "degree", "r1", "r2", "disc_bits", "all_checks_pass")


def write_jsonl(cands: Iterable[FieldCandidate], fh) -> int:
    k = 0
    for c in cands:
        fh.write(json.dumps(c.to_dict(), sort_keys=False) + "\n")
        k += 1
    return k


def write_csv(cands: Iterable[FieldCandidate], fh) -> int:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    k = 0
    for c in cands:
        sig = c.signature
        w.writerow([c.case_id, c.y, c.n, c.degree, "" if sig is None else sig.r1,
                    "" if sig is None else sig.r2, c.disc_bits, str(c.all_checks_pass).lower()])
        k += 1
    return k

