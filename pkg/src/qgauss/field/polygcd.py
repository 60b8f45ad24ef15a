"""Greatest common divisors in Q(i)[s].

Two routes compute the same monic gcd:

* :func:`euclid_gcd` -- the Euclidean algorithm with monic remainders and exact
  Q(i) inversion.  Used whenever one operand has small degree, where it is cheap.
* :func:`modular_gcd` -- images modulo the two prime ideals above primes
  p = 1 (mod 4), Chinese remaindering and rational reconstruction.  The
  reconstructed candidate is only accepted after exact trial division of both
  inputs, so the answer is always certified over Q(i).

Degree-0 modular images certify coprimality on their own: for a prime that does
not kill either leading coefficient the image gcd has degree at least the true
degree.
"""

from __future__ import annotations

import math
from functools import lru_cache

from gmpy2 import invert, mpq, mpz, next_prime

from .spoly import ONE_POLY, SPoly

EUCLID_DEGREE = 12
_MAX_PRIMES = 400


def euclid_gcd(f: SPoly, g: SPoly) -> SPoly:
    """Monic gcd of two ordinary polynomials by the Euclidean algorithm."""
    if not f.is_ordinary() or not g.is_ordinary():
        raise ValueError("gcd expects ordinary polynomials")
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.width < g.width:
        f, g = g, f
    f, g = f.monic(), g.monic()
    while g:
        _, r = f.divmod(g)
        f, g = g, r.monic()
    return f


# -- arithmetic modulo p ------------------------------------------------------

@lru_cache(maxsize=None)
def _prime_table(count: int) -> tuple[tuple[int, int], ...]:
    """Primes p = 1 (mod 4) just above 2**62, paired with a square root of -1."""
    out = []
    p = mpz(2) ** 62
    while len(out) < count:
        p = next_prime(p)
        if p % 4 != 1:
            continue
        for a in range(2, 200):
            if pow(a, (p - 1) // 2, p) == p - 1:
                r = int(pow(a, (p - 1) // 4, p))
                break
        assert r * r % p == p - 1
        out.append((int(p), r))
    return tuple(out)


def _primes():
    k = 16
    i = 0
    while True:
        table = _prime_table(k)
        while i < len(table):
            yield table[i]
            i += 1
        k *= 2


def _gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of dense coefficient lists (low -> high) over F_p."""
    a = a[:]
    b = b[:]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if len(a) < len(b):
        a, b = b, a
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) > db:
            c = a[-1] * inv % p
            if c:
                sh = len(a) - 1 - db
                for j in range(db + 1):
                    a[sh + j] = (a[sh + j] - c * b[j]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _integerize(poly: SPoly) -> tuple[list[int], list[int]]:
    """Scale an ordinary polynomial by the lcm of its denominators (dense, low -> high)."""
    re = [mpq(0)] * poly.low + list(poly._re)
    im = [mpq(0)] * poly.low + list(poly._im)
    den = 1
    for x in re:
        den = math.lcm(den, int(x.denominator))
    for x in im:
        den = math.lcm(den, int(x.denominator))
    return ([int(x * den) for x in re], [int(x * den) for x in im])


def _image(ints: tuple[list[int], list[int]], r: int, p: int) -> list[int]:
    re, im = ints
    return [(a + b * r) % p for a, b in zip(re, im)]


def _ratrecon(a: int, m: int) -> mpq | None:
    """Rational n/d = a (mod m) with |n|, d <= sqrt(m/2), if any."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        t0, t1 = t1, t0 - qt * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if math.gcd(r1, abs(t1)) != 1:
        return None
    return mpq(r1, t1)


def _exact_quotient(f: SPoly, h: SPoly) -> SPoly | None:
    q, r = f.divmod(h)
    return None if r else q


def modular_gcd(f: SPoly, g: SPoly) -> SPoly | None:
    """Monic gcd certified by trial division; None if no certificate was found."""
    if not f or not g:
        return euclid_gcd(f, g)
    fi, gi = _integerize(f), _integerize(g)
    mindeg = None
    modulus = 1
    acc_re: list[int] = []
    acc_im: list[int] = []
    previous = None
    for count, (p, r) in enumerate(_primes()):
        if count >= _MAX_PRIMES:
            return None
        if (fi[0][-1] + fi[1][-1] * r) % p == 0 or (fi[0][-1] - fi[1][-1] * r) % p == 0:
            continue
        if (gi[0][-1] + gi[1][-1] * r) % p == 0 or (gi[0][-1] - gi[1][-1] * r) % p == 0:
            continue
        h1 = _gcd_mod(_image(fi, r, p), _image(gi, r, p), p)
        h2 = _gcd_mod(_image(fi, p - r, p), _image(gi, p - r, p), p)
        if len(h1) != len(h2):
            continue
        d = len(h1) - 1
        if d == 0:
            return ONE_POLY
        if mindeg is not None and d > mindeg:
            continue
        inv2 = int(invert(2, p))
        inv2r = int(invert(2 * r, p))
        res_re = [(x + y) * inv2 % p for x, y in zip(h1, h2)]
        res_im = [(x - y) * inv2r % p for x, y in zip(h1, h2)]
        if mindeg is None or d < mindeg:
            mindeg = d
            modulus, acc_re, acc_im = p, res_re, res_im
            previous = None
        else:
            inv_m = int(invert(modulus % p, p))
            new_mod = modulus * p
            acc_re = [_crt(a, modulus, b, p, inv_m, new_mod) for a, b in zip(acc_re, res_re)]
            acc_im = [_crt(a, modulus, b, p, inv_m, new_mod) for a, b in zip(acc_im, res_im)]
            modulus = new_mod
        cand = _reconstruct(acc_re, acc_im, modulus)
        if cand is None:
            continue
        if cand == previous:
            if _exact_quotient(f, cand) is not None and _exact_quotient(g, cand) is not None:
                return cand
        previous = cand
    return None


def _crt(a: int, m: int, b: int, p: int, inv_m: int, mp: int) -> int:
    t = (b - a) * inv_m % p
    return (a + m * t) % mp


def _reconstruct(acc_re, acc_im, modulus) -> SPoly | None:
    re = []
    im = []
    for a, b in zip(acc_re, acc_im):
        x = _ratrecon(a, modulus)
        y = _ratrecon(b, modulus)
        if x is None or y is None:
            return None
        re.append(x)
        im.append(y)
    return SPoly._dense(0, re, im)


def poly_gcd(f: SPoly, g: SPoly) -> SPoly:
    """Monic gcd in Q(i)[s] of two Laurent polynomials, as an ordinary polynomial.

    Powers of s are units in the Laurent ring and are stripped first, so the
    result has nonzero constant term.
    """
    if not f:
        return g.strip_monomial()[1].monic() if g else ONE_POLY
    if not g:
        return f.strip_monomial()[1].monic()
    f = f.strip_monomial()[1]
    g = g.strip_monomial()[1]
    if f.width == 0 or g.width == 0:
        return ONE_POLY
    if f == g:
        return f.monic()
    if min(f.width, g.width) <= EUCLID_DEGREE:
        return euclid_gcd(f, g)
    h = modular_gcd(f, g)
    if h is None:
        h = euclid_gcd(f, g)
    return h


def poly_gcd_many(polys) -> SPoly:
    polys = sorted((p for p in polys if p), key=lambda p: p.width)
    if not polys:
        return ONE_POLY
    h = polys[0].strip_monomial()[1].monic()
    for p in polys[1:]:
        if h.width == 0:
            break
        h = poly_gcd(h, p)
    return h


def poly_gcd_ordinary(f: SPoly, g: SPoly) -> SPoly:
    """Monic gcd in the ordinary ring Q(i)[s] (factors of s are kept)."""
    if not f or not g:
        return euclid_gcd(f, g)
    k = min(f.low, g.low)
    return poly_gcd(f, g).shift(k)


def squarefree_decomposition(f: SPoly) -> list[tuple[SPoly, int]]:
    """Yun's algorithm on an ordinary polynomial (characteristic 0).

    Returns ``[(a_k, k), ...]`` with monic square-free, pairwise coprime a_k
    such that ``f = lc(f) * prod a_k**k``; factors equal to 1 are omitted.
    """
    if not f.is_ordinary():
        raise ValueError("square-free decomposition expects an ordinary polynomial")
    f = f.monic()
    if f.is_const():
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd_ordinary(f, fp)
    b = f.exact_div(a)
    d = fp.exact_div(a) - b.derivative()
    k = 1
    while not b.is_const():
        a = poly_gcd_ordinary(b, d)
        if not a.is_const():
            out.append((a, k))
        b = b.exact_div(a)
        d = d.exact_div(a) - b.derivative()
        k += 1
    return out


__all__ = ["poly_gcd", "poly_gcd_many", "euclid_gcd", "modular_gcd",
           "poly_gcd_ordinary", "squarefree_decomposition"]
