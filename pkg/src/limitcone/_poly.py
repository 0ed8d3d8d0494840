"""Dense univariate polynomials over Q.

Polynomials are lists of ``Fraction`` in ascending degree with no trailing
zeros (the zero polynomial is ``[]``).
"""
from fractions import Fraction
from math import gcd, isqrt, lcm


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def as_poly(coeffs):
    return trim(Fraction(c) for c in coeffs)


def degree(p):
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim(a * c for a in p)


def divmod_poly(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        c = p[-1] / lead
        shift = len(p) - 1 - dq
        quot[shift] = c
        for j, b in enumerate(q):
            p[shift + j] -= c * b
        p = trim(p)
    return trim(quot), p


def monic(p):
    return scale(p, 1 / p[-1]) if p else []


def gcd_poly(p, q):
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def xgcd_poly(p, q):
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = p, q
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def derivative(p):
    return trim(i * p[i] for i in range(1, len(p)))


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p):
    g = gcd_poly(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def integer_coeffs(p):
    """Scale ``p`` by the lcm of its denominators; returns a list of ints."""
    d = 1
    for c in p:
        d = lcm(d, c.denominator)
    return [int(c * d) for c in p]


def sturm_sequence(p):
    seq = [p, derivative(p)]
    while seq[-1] and len(seq[-1]) > 1:
        rem = divmod_poly(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append(scale(rem, -1))
    return [s for s in seq if s]


def sign_changes(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p):
    """Power of two strictly larger than the absolute value of every root."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) / lead if len(p) > 1 else 0
    b = 1
    while b <= 1 + m:
        b *= 2
    return b


def count_roots(seq, a, b):
    """Distinct real roots in (a, b] for a Sturm sequence ``seq``."""
    return sign_changes([evaluate(s, a) for s in seq]) - sign_changes([evaluate(s, b) for s in seq])


def isolate_real_roots(p):
    """Isolate the real roots of the squarefree polynomial ``p``.

    Returns ascending tuples ``(lo, hi)`` of Fractions with dyadic endpoints,
    each containing exactly one root; ``lo == hi`` marks a rational root hit
    exactly by bisection.
    """
    seq = sturm_sequence(p)
    b = Fraction(cauchy_bound(p))
    stack = [(-b, b)]
    out = []
    while stack:
        lo, hi = stack.pop()
        k = count_roots(seq, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            out.append((mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    # a root sitting exactly on a bisection point is counted in (lo, mid]
    cleaned = []
    for lo, hi in sorted(out):
        if lo != hi and evaluate(p, hi) == 0:
            lo = hi
        if lo == hi and cleaned and cleaned[-1] == (lo, hi):
            continue
        cleaned.append((lo, hi))
    return cleaned


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def integral_monic(p):
    """Integer monic polynomial D^n p(x/D) with the same factorization pattern."""
    p = monic(p)
    d = 1
    for c in p:
        d = lcm(d, c.denominator)
    n = len(p) - 1
    return [int(c * d ** (n - i)) for i, c in enumerate(p)]


def has_rational_root(p):
    f = integral_monic(p)
    if f[0] == 0:
        return True
    for d in _divisors(f[0]):
        for r in (d, -d):
            if sum(c * r ** i for i, c in enumerate(f)) == 0:
                return True
    return False


def has_quadratic_factor(p):
    """Monic quartic test for a factorization into two rational quadratics."""
    f = integral_monic(p)
    if len(f) != 5:
        raise ValueError("quartic expected")
    a0, a1, a2, a3 = f[0], f[1], f[2], f[3]
    if a0 == 0:
        return True
    for c in _divisors(a0):
        for c in (c, -c):
            e = a0 // c
            if e != c:
                num = a1 - c * a3
                if num % (e - c):
                    continue
                b = num // (e - c)
                d = a3 - b
                if c + e + b * d == a2:
                    return True
            elif a1 == c * a3:
                # b + d = a3, b d = a2 - 2c
                disc = a3 * a3 - 4 * (a2 - 2 * c)
                if disc >= 0 and isqrt(disc) ** 2 == disc:
                    return True
    return False


def content_gcd(ints):
    g = 0
    for v in ints:
        g = gcd(g, v)
    return g
