"""Polynomial arithmetic over F_p on int64 coefficient arrays.

Arrays are constant-term first and trimmed (no trailing zeros, except the
zero polynomial which is the empty array).  The prime must satisfy
``p * p * deg < 2**63``; the irreducibility test only uses small primes.

Two interchangeable backends: numba-compiled loops, and a plain numpy
version used when numba is missing or ``GALCOVERS_DISABLE_NUMBA=1``.
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "GALCOVERS_DISABLE_NUMBA"

try:
    if os.environ.get(DISABLE_ENV, "") not in ("", "0"):
        raise ImportError("disabled by environment")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


# ---------------------------------------------------------------- numba

def _trim(a):
    n = a.shape[0]
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _inv(a, p):
    # a^(p-2) mod p
    r = 1
    b = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def _rem(a, f, p):
    r = a.copy()
    df = f.shape[0] - 1
    inv = _inv(f[df], p)
    for k in range(r.shape[0] - 1, df - 1, -1):
        c = r[k] * inv % p
        if c:
            for j in range(df + 1):
                r[k - df + j] = (r[k - df + j] - c * f[j]) % p
    n = min(r.shape[0], df)
    return _trim(r[:n])


def _mulmod(a, b, f, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = a[i]
        if ai:
            for j in range(b.shape[0]):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    return _rem(out, f, p)


def _powx(e, f, p):
    """x**e mod f."""
    result = np.ones(1, dtype=np.int64)
    base = _rem(np.array([0, 1], dtype=np.int64), f, p)
    while e > 0:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _powpoly(g, e, f, p):
    """g**e mod f."""
    result = np.ones(1, dtype=np.int64)
    base = _rem(g, f, p)
    while e > 0:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _gcd(a, b, p):
    a = _trim(a.copy())
    b = _trim(b.copy())
    while b.shape[0] > 0:
        r = _rem(a, b, p)
        a = b
        b = r
    if a.shape[0] == 0:
        return a
    inv = _inv(a[a.shape[0] - 1], p)
    return a * inv % p


def _divexact(a, b, p):
    da = a.shape[0] - 1
    db = b.shape[0] - 1
    q = np.zeros(da - db + 1, dtype=np.int64)
    r = a.copy()
    inv = _inv(b[db], p)
    for k in range(da - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return q


def _sub_x(h, p):
    n = max(h.shape[0], 2)
    out = np.zeros(n, dtype=np.int64)
    out[: h.shape[0]] = h
    out[1] = (out[1] - 1) % p
    return _trim(out)


def _ddf_degrees(f, p):
    """Degrees of the irreducible factors of squarefree monic f mod p."""
    degs = np.zeros(f.shape[0], dtype=np.int64)
    nd = 0
    g = f.copy()
    h = _rem(np.array([0, 1], dtype=np.int64), g, p)
    i = 0
    while True:
        i += 1
        dg = g.shape[0] - 1
        if 2 * i > dg:
            break
        h = _powpoly(h, p, g, p)
        c = _gcd(g, _sub_x(h, p), p)
        dc = c.shape[0] - 1
        if dc > 0:
            for _ in range(dc // i):
                degs[nd] = i
                nd += 1
            g = _divexact(g, c, p)
            h = _rem(h, g, p)
    dg = g.shape[0] - 1
    if dg > 0:
        degs[nd] = dg
        nd += 1
    return degs[:nd]


if HAVE_NUMBA:
    _trim = njit(cache=True)(_trim)
    _inv = njit(cache=True)(_inv)
    _rem = njit(cache=True)(_rem)
    _mulmod = njit(cache=True)(_mulmod)
    _powx = njit(cache=True)(_powx)
    _powpoly = njit(cache=True)(_powpoly)
    _gcd = njit(cache=True)(_gcd)
    _divexact = njit(cache=True)(_divexact)
    _sub_x = njit(cache=True)(_sub_x)
    _ddf_degrees = njit(cache=True)(_ddf_degrees)


# ---------------------------------------------------------------- numpy

def _np_trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _np_rem(a, f, p):
    r = a.copy()
    df = f.shape[0] - 1
    inv = pow(int(f[-1]), p - 2, p)
    for k in range(r.shape[0] - 1, df - 1, -1):
        c = r[k] * inv % p
        if c:
            r[k - df: k + 1] = (r[k - df: k + 1] - c * f) % p
    return _np_trim(r[:df])


def _np_mulmod(a, b, f, p):
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    return _np_rem(np.convolve(a, b) % p, f, p)


def _np_powpoly(g, e, f, p):
    result = np.ones(1, dtype=np.int64)
    base = _np_rem(g, f, p)
    while e > 0:
        if e & 1:
            result = _np_mulmod(result, base, f, p)
        base = _np_mulmod(base, base, f, p)
        e >>= 1
    return result


def _np_gcd(a, b, p):
    a, b = _np_trim(a.copy()), _np_trim(b.copy())
    while b.size:
        a, b = b, _np_rem(a, b, p)
    if a.size == 0:
        return a
    return a * pow(int(a[-1]), p - 2, p) % p


def _np_divexact(a, b, p):
    db = b.shape[0] - 1
    q = np.zeros(a.shape[0] - db, dtype=np.int64)
    r = a.copy()
    inv = pow(int(b[-1]), p - 2, p)
    for k in range(q.shape[0] - 1, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            r[k: k + db + 1] = (r[k: k + db + 1] - c * b) % p
    return q


def _np_sub_x(h, p):
    out = np.zeros(max(h.shape[0], 2), dtype=np.int64)
    out[: h.shape[0]] = h
    out[1] = (out[1] - 1) % p
    return _np_trim(out)


def _np_ddf_degrees(f, p):
    degs = []
    g = f.copy()
    h = _np_rem(np.array([0, 1], dtype=np.int64), g, p)
    i = 0
    while 2 * (i + 1) <= g.shape[0] - 1:
        i += 1
        h = _np_powpoly(h, p, g, p)
        c = _np_gcd(g, _np_sub_x(h, p), p)
        if c.shape[0] > 1:
            degs += [i] * ((c.shape[0] - 1) // i)
            g = _np_divexact(g, c, p)
            h = _np_rem(h, g, p)
    if g.shape[0] > 1:
        degs.append(g.shape[0] - 1)
    return np.array(degs, dtype=np.int64)


# ---------------------------------------------------------------- dispatch

def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def reduce_mod(coeffs, p: int) -> np.ndarray:
    """Integer coefficients (any size) to a trimmed int64 array mod p."""
    return _np_trim(np.array([int(c) % p for c in coeffs], dtype=np.int64))


def ddf_degrees(f: np.ndarray, p: int, use_numba: bool | None = None) -> list[int]:
    """Factor degrees of a squarefree monic polynomial mod p, sorted."""
    use = HAVE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    f = np.ascontiguousarray(f, dtype=np.int64)
    degs = _ddf_degrees(f, p) if use else _np_ddf_degrees(f, p)
    return sorted(int(d) for d in degs)


def mulmod(a, b, f, p: int, use_numba: bool | None = None) -> np.ndarray:
    use = HAVE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    args = [np.ascontiguousarray(v, dtype=np.int64) for v in (a, b, f)]
    return (_mulmod if use else _np_mulmod)(*args, p)


def powmod(g, e: int, f, p: int, use_numba: bool | None = None) -> np.ndarray:
    use = HAVE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    g = np.ascontiguousarray(g, dtype=np.int64)
    f = np.ascontiguousarray(f, dtype=np.int64)
    return (_powpoly if use else _np_powpoly)(g, e, f, p)


def gcd_mod(a, b, p: int, use_numba: bool | None = None) -> np.ndarray:
    use = HAVE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    return (_gcd if use else _np_gcd)(a, b, p)
