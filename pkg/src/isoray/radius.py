"""Certified enclosures for the maximum root modulus of an integer polynomial.

The enclosure is produced in two stages.  A few Graeffe root-squaring steps
(coefficients stay exact integers) give a coarse two-sided bracket read off
from coefficient bit lengths: if c_j is the coefficient of x^(n-j) in the
k-fold squared polynomial, then

    max_j (|c_j| / C(n,j))^(1/j)  <=  delta^(2^k)  <=  2 * max_j |c_j|^(1/j)

by Vieta's formulas and Fujiwara's bound.  Coefficient doubling makes Graeffe
alone too expensive for tight tolerances, so the bracket is then verified and
refined by bisection with an exact real-root count.  The bisection target is
the composed polynomial whose roots are all pairwise products z_i * z_j of
the roots of p; it is the resultant Res_x(p(x), x^n p(t/x)) and is computed
here through Newton's identities from the squared power sums of p.  Its
largest real root is exactly delta^2, and Sturm chains decide "a root above
t" with no rounding anywhere, so the final bracket is a certificate.

Polynomials are lists of ints, ascending degree.
"""

from fractions import Fraction
from math import comb, gcd, isqrt

_GRAEFFE_MAX_STEPS = 8
_GRAEFFE_BIT_BUDGET = 200_000


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _primitive(p):
    g = _content(p)
    return [c // g for c in p] if g > 1 else list(p)


def _eval_fraction(p, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def graeffe_step(p):
    """Monic integer polynomial whose roots are the squares of the roots of p."""
    n = len(p) - 1
    flipped = [c if i % 2 == 0 else -c for i, c in enumerate(p)]
    prod = _poly_mul(list(p), flipped)
    q = prod[0::2]
    if q[-1] < 0:
        q = [-c for c in q]
    return q


def _graeffe_bracket(q, k):
    """Advisory float bracket (lo, hi) for delta, where delta^(2^k) is the
    max root modulus of q.  Exactness is restored later by Sturm checks."""
    n = len(q) - 1
    log_up = None
    log_lo = None
    for j in range(1, n + 1):
        c = abs(q[n - j])
        if c == 0:
            continue
        bl = c.bit_length()
        u = Fraction(bl, j)
        l = Fraction(bl - 1 - comb(n, j).bit_length(), j)
        log_up = u if log_up is None else max(log_up, u)
        log_lo = l if log_lo is None else max(log_lo, l)
    if log_up is None:                      # q = x^n, all roots zero
        return 0.0, 0.0
    scale = 1 << k
    hi_exp = float(1 + log_up) / scale
    lo_exp = float(log_lo) / scale
    hi = 2.0 ** min(hi_exp, 1000.0)
    lo = 2.0 ** max(min(lo_exp, 1000.0), -1000.0)
    return lo, hi


def power_sums(p, count):
    """Power sums s_1..s_count of the roots of a monic integer polynomial,
    by Newton's identities (all integers)."""
    n = len(p) - 1
    e = [0] * (n + 1)
    for i in range(1, n + 1):
        e[i] = (-1 if i % 2 else 1) * p[n - i]
    s = [0] * (count + 1)
    for k in range(1, count + 1):
        acc = (-1 if k % 2 == 0 else 1) * k * e[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            acc += (-1 if i % 2 == 0 else 1) * e[i] * s[k - i]
        s[k] = acc
    return s[1:]


def modulus_polynomial(p):
    """Monic integer polynomial of degree n^2 whose roots are the pairwise
    products z_i * z_j of the roots of p.  Its largest real root is the
    squared maximum root modulus of p."""
    n = len(p) - 1
    big_n = n * n
    t = [v * v for v in power_sums(p, big_n)]
    e = [0] * (big_n + 1)
    e[0] = 1
    for k in range(1, big_n + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1 if i % 2 == 0 else 1) * e[k - i] * t[i - 1]
        q, rem = divmod(acc, k)
        if rem:
            raise ArithmeticError("composed polynomial is not integral")
        e[k] = q
    m = [0] * (big_n + 1)
    for k in range(big_n + 1):
        m[big_n - k] = (-1 if k % 2 else 1) * e[k]
    return m


def _signed_rem(f, g):
    """Remainder of f by g, correct up to a positive rational factor."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    steps = 0
    while len(r) - 1 >= dg and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - 1 - dg
        lead = r[-1]
        r = [lg * a for a in r]
        for i, b in enumerate(g):
            r[shift + i] -= lead * b
        r.pop()
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    if steps % 2 == 1 and lg < 0:
        r = [-a for a in r]
    return r


def sturm_chain(p):
    """Canonical Sturm chain (primitive parts, signs preserved).  Valid for
    non-squarefree input too: variation differences count distinct roots."""
    chain = [_primitive(p)]
    d = _derivative(chain[0])
    if any(d):
        chain.append(_primitive(d))
    while len(chain[-1]) > 1:
        r = _signed_rem(chain[-2], chain[-1])
        if not r or not any(r):
            break
        chain.append(_primitive([-a for a in r]))
    return chain


def _variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain, t: Fraction) -> int:
    return _variations([_sign(_eval_fraction(f, t)) for f in chain])


def _variations_at_inf(chain) -> int:
    return _variations([_sign(f[-1]) for f in chain])


def count_roots_above(p, chain, t: Fraction) -> int:
    """Number of distinct real roots of p strictly greater than t."""
    if _eval_fraction(p, t) != 0:
        return _variations_at(chain, t) - _variations_at_inf(chain)
    # t is a root; a monic integer polynomial only has integer rational roots,
    # so deflate by (x - t) exactly and recount on the quotient.
    ti = int(t)
    q = list(p)
    while q and _eval_fraction(q, Fraction(ti)) == 0 and len(q) > 1:
        out = []
        acc = 0
        for c in reversed(q):
            acc = acc * ti + c
            out.append(acc)
        # synthetic division: out[:-1] reversed are quotient coefficients
        q = list(reversed(out[:-1]))
    if len(q) <= 1:
        return 0
    return count_roots_above(q, sturm_chain(q), t)


def max_root_modulus_bounds(coeffs, tol, lower_floor=Fraction(0)):
    """Certified rational enclosure (lo, hi) of the maximum root modulus of a
    monic integer polynomial, with hi - lo <= tol.

    lower_floor is a caller-supplied lower bound on the true value (pass 1
    for matrices of determinant +-1); it shortcuts the search when the
    maximum modulus equals the floor exactly.
    """
    p = [int(c) for c in coeffs]
    if p[-1] < 0:
        p = [-c for c in p]
    if p[-1] != 1:
        raise ValueError("polynomial must be monic")
    while p and p[0] == 0:
        p = p[1:]  # strip zero roots; they never carry the max modulus
        if len(p) == 1:
            return lower_floor, lower_floor
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = len(p) - 1
    if n == 0:
        return lower_floor, lower_floor

    q = list(p)
    k = 0
    lo_f, hi_f = _graeffe_bracket(q, k)
    while k < _GRAEFFE_MAX_STEPS and sum(abs(c).bit_length() for c in q) < _GRAEFFE_BIT_BUDGET:
        q = graeffe_step(q)
        k += 1
        lo_f, hi_f = _graeffe_bracket(q, k)

    m = modulus_polynomial(p)
    chain = sturm_chain(m)
    cauchy = Fraction(2 + max(abs(c) for c in m[:-1]))
    floor_sq = lower_floor * lower_floor

    b = Fraction(hi_f).limit_denominator(1 << 64) ** 2 if hi_f > 0 else cauchy
    b = min(max(b, floor_sq), cauchy)
    a = max(Fraction(lo_f).limit_denominator(1 << 64) ** 2, floor_sq)
    if a > b:
        a, b = floor_sq, cauchy

    while count_roots_above(m, chain, b) > 0:
        if b >= cauchy:
            raise ArithmeticError("root above the Cauchy bound; bad input")
        b = min(b * 2 + 1, cauchy)
    while count_roots_above(m, chain, a) == 0:
        if a <= floor_sq:
            # no root above floor^2: the max modulus is exactly the floor
            return lower_floor, lower_floor
        a = max(floor_sq, a / 2)

    bits = max(32, _frac_bits(tol) + 8)
    while True:
        lo_s = _sqrt_lower(a, bits)
        hi_s = _sqrt_upper(b, bits)
        if hi_s - lo_s <= tol:
            return max(lo_s, lower_floor), hi_s
        mid = (a + b) / 2
        if count_roots_above(m, chain, mid) > 0:
            a = mid
        else:
            b = mid


def _frac_bits(tol: Fraction) -> int:
    b = 0
    t = tol
    while t < 1:
        t *= 2
        b += 1
    return b


def _sqrt_lower(x: Fraction, bits: int) -> Fraction:
    num = x.numerator << (2 * bits)
    return Fraction(isqrt(num // x.denominator), 1 << bits)


def _sqrt_upper(x: Fraction, bits: int) -> Fraction:
    num = x.numerator << (2 * bits)
    quo = -(-num // x.denominator)
    root = isqrt(quo)
    if root * root < quo:
        root += 1
    return Fraction(root, 1 << bits)
