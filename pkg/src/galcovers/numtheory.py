"""Integer helpers: factoring small integers, perfect powers, power congruences."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import gmpy2


def factorize(n: int, bound: int = 10**7) -> dict[int, int]:
    """Trial-division factorization of ``|n|``.

    Raises ``ValueError`` if a cofactor above ``bound**2`` survives and is not
    a probable prime; the callers only factor products of small numbers.
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        if p > bound:
            if gmpy2.is_prime(n):
                break
            raise ValueError(f"cofactor {n} too large for trial division")
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_support(n: int) -> set[int]:
    return set(factorize(n)) if n else set()


def is_nth_power(v, n: int) -> bool:
    """``v = s * w**n`` with ``s = +-1`` and ``w`` rational; ``s = +1`` when n is even."""
    if n < 1:
        raise ValueError("n must be positive")
    v = Fraction(v)
    if v == 0:
        return True
    if n == 1:
        return True
    if v < 0 and n % 2 == 0:
        return False
    num, den = abs(v.numerator), v.denominator
    return bool(gmpy2.iroot(num, n)[1]) and bool(gmpy2.iroot(den, n)[1])


def crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g = gcd(m, mi)
        if (r - x) % g:
            raise ValueError("incompatible congruences")
        l = m // g * mi
        t = ((r - x) // g * int(gmpy2.invert(m // g, mi // g))) % (mi // g) if mi // g > 1 else 0
        x = (x + m * t) % l
        m = l
    return x, m


def multiplicative_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    if m == 1:
        return 1
    fac = factorize(m)
    lam = 1
    for p, k in fac.items():
        phi = (p - 1) * p ** (k - 1)
        lam = lam * phi // gcd(lam, phi)
    order = lam
    for p in factorize(lam):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def solve_power_congruence(t0: int, n: int, m: int) -> list[int]:
    """All ``y mod m`` with ``y**n = t0 (mod m)``, sorted."""
    if m == 1:
        return [0]
    parts = []
    for p, k in factorize(m).items():
        q = p**k
        sols = [y for y in range(q) if pow(y, n, q) == t0 % q]
        if not sols:
            return []
        parts.append((sols, q))
    out = [0]
    mod = 1
    for sols, q in parts:
        out = [crt([x, s], [mod, q])[0] for x in out for s in sols]
        mod *= q
    return sorted(out)


def nth_root_residue(t0: int, n: int, m: int) -> int:
    """``t0**(n^-1 mod ord(t0))`` mod m: the n-th root of t0 inside <t0>."""
    d = multiplicative_order(t0, m)
    if gcd(n, d) != 1:
        raise ValueError(f"n={n} is not invertible modulo the order {d} of {t0} mod {m}")
    return pow(t0, int(gmpy2.invert(n, d)), m) if d > 1 else t0 % m

