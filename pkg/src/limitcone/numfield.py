"""Exact arithmetic in totally real number fields.

A field is given by a monic minimal polynomial over Q.  Elements are stored
in the power basis ``1, theta, ..., theta^(n-1)`` as an integer numerator
vector over a common positive denominator, which keeps arithmetic in
``Z[theta]`` (the usual case for the builtin groups) on plain Python ints.

Real embeddings are handled through isolating intervals of the roots of the
minimal polynomial.  Intervals have dyadic endpoints and are refined by
bisection on demand, so signs are decided by exact integer arithmetic and
enclosures of ``phi_i(e)`` can be made as tight as requested.

Embedding numbering: index 1 is the designated identity embedding (by
default the largest root); the remaining roots follow in ascending order.
"""
import threading
from fractions import Fraction
from math import gcd

from flint import arb, arf

from . import _poly
from .errors import (
    BadIndex,
    DivisionByZero,
    FieldMismatch,
    NotIrreducible,
    NotSquarefree,
    NotTotallyReal,
)


def _parse_rational(v):
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


class _Root:
    """Refinable isolating interval [lo/2^k, hi/2^k] of one simple root."""

    __slots__ = ("state", "sign_hi")

    def __init__(self, lo, hi, k, sign_hi):
        # (lo, hi, k) is replaced as one tuple so readers never see a mix
        self.state = (lo, hi, k)
        self.sign_hi = sign_hi

    @property
    def k(self):
        return self.state[2]

    @property
    def exact(self):
        return self.state[0] == self.state[1]

    def snapshot(self):
        return self.state


class NumberField:
    """Totally real number field Q[x]/(minpoly).

    ``primary`` selects the root used as the identity embedding: either an
    ascending root index (0-based int) or ``None`` for the largest root.
    """

    def __init__(self, minpoly, primary=None):
        p = _poly.as_poly(_parse_rational(c) for c in minpoly)
        if len(p) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if p[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        n = len(p) - 1
        if len(_poly.gcd_poly(p, _poly.derivative(p))) > 1:
            raise NotSquarefree(f"{p!r} has a repeated factor")
        self.minpoly = tuple(p)
        self.degree = n

        self.irreducibility_verified = True
        if n >= 2 and _poly.has_rational_root(p):
            raise NotIrreducible("minimal polynomial has a rational root")
        if n == 4 and _poly.has_quadratic_factor(p):
            raise NotIrreducible("minimal polynomial splits into quadratics")
        if n >= 5:
            self.irreducibility_verified = False

        intervals = _poly.isolate_real_roots(p)
        if len(intervals) != n:
            raise NotTotallyReal(f"only {len(intervals)} of {n} roots are real")

        self._int_poly = _poly.integer_coeffs(p)
        self._lead = self._int_poly[-1]
        self._lock = threading.Lock()
        self._roots = [self._make_root(lo, hi) for lo, hi in intervals]

        if primary is None:
            primary = n - 1
        if not 0 <= primary < n:
            raise BadIndex(f"primary root index {primary} out of range")
        self.primary = primary
        self._order = [primary] + [j for j in range(n) if j != primary]

    # -- construction helpers -------------------------------------------------

    def _make_root(self, lo, hi):
        k = 0
        while (lo * 2 ** k).denominator != 1 or (hi * 2 ** k).denominator != 1:
            k += 1
        L, H = int(lo * 2 ** k), int(hi * 2 ** k)
        return _Root(L, H, k, self._poly_sign(H, k))

    def _poly_sign(self, m, k):
        """Sign of minpoly at m / 2^k, exactly."""
        n = self.degree
        acc = sum(c * m ** j * (1 << (k * (n - j))) for j, c in enumerate(self._int_poly))
        return (acc > 0) - (acc < 0)

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.minpoly == other.minpoly
            and self.primary == other.primary
        )

    def __hash__(self):
        return hash((self.minpoly, self.primary))

    def __repr__(self):
        return f"NumberField({_poly_str(self.minpoly)}, primary={self.primary})"

    # -- elements -------------------------------------------------------------

    def __call__(self, value):
        """Coerce an int, rational, coordinate list or element into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return self.element(value)
        return self.element([value])

    def element(self, coords):
        coords = [_parse_rational(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        return FieldElement._make(self, [int(c * den) for c in coords], den)

    @property
    def zero(self):
        return FieldElement._make(self, [0] * self.degree, 1)

    @property
    def one(self):
        return self.element([1])

    @property
    def gen(self):
        """The power-basis generator theta."""
        if self.degree == 1:
            return self.element([-self.minpoly[0]])
        return self.element([0, 1])

    # -- embeddings -----------------------------------------------------------

    def _root(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.degree:
            raise BadIndex(f"embedding index {i} not in 1..{self.degree}")
        return self._roots[self._order[i - 1]]

    def _refine(self, root, k):
        with self._lock:
            if root.exact:
                return
            while root.k < k:
                lo, hi, kk = root.state
                lo, hi, kk = 2 * lo, 2 * hi, kk + 1
                mid = (lo + hi) // 2
                s = self._poly_sign(mid, kk)
                if s == 0:
                    lo = hi = mid
                elif s == root.sign_hi:
                    hi = mid
                else:
                    lo = mid
                root.state = (lo, hi, kk)
                if lo == hi:
                    return

    def root_interval(self, i, bits=64):
        """Isolating interval (lo, hi) of Fractions for embedding ``i``."""
        root = self._root(i)
        self._refine(root, bits)
        lo, hi, k = root.snapshot()
        return Fraction(lo, 1 << k), Fraction(hi, 1 << k)

    def _enclose(self, e, i, k):
        """Exact enclosure (lo, hi, scale) with phi_i(e) in [lo/scale, hi/scale]."""
        root = self._root(i)
        if root.k < k:
            self._refine(root, k)
        L, H, kk = root.snapshot()
        n = self.degree
        lo_sum = hi_sum = 0
        for j, c in enumerate(e.num):
            if not c:
                continue
            if j == 0:
                plo = phi = 1
            else:
                a, b = L ** j, H ** j
                if L >= 0 or j % 2 == 1:
                    plo, phi = min(a, b), max(a, b)
                elif H <= 0:
                    plo, phi = min(a, b), max(a, b)
                else:
                    plo, phi = 0, max(a, b)
            w = 1 << (kk * (n - 1 - j))
            if c > 0:
                lo_sum += c * plo * w
                hi_sum += c * phi * w
            else:
                lo_sum += c * phi * w
                hi_sum += c * plo * w
        return lo_sum, hi_sum, e.den << (kk * (n - 1))

    def sign(self, e, i):
        """Exact sign of phi_i(e) in {-1, 0, 1}."""
        e = self(e)
        root = self._root(i)
        if e.is_rational():
            return (e.num[0] > 0) - (e.num[0] < 0)
        k = max(root.k, 64)
        while True:
            lo, hi, _ = self._enclose(e, i, k)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if lo == hi == 0:
                return 0
            if k > 512 and not self.irreducibility_verified and self._vanishes_at(e, i):
                return 0
            k *= 2

    def _vanishes_at(self, e, i):
        g = _poly.gcd_poly(list(self.minpoly), _poly.trim(e.coords))
        if len(g) <= 1:
            return False
        lo, hi = self.root_interval(i)
        seq = _poly.sturm_sequence(g)
        eps = Fraction(1, 1 << 600)
        return _poly.count_roots(seq, lo - eps, hi) > 0

    def embed(self, e, i, bits=96):
        """Ball of width <= 2^-bits containing phi_i(e).

        Balls for increasing ``bits`` are nested: the centre is snapped to a
        dyadic grid from an enclosure of a quarter of the radius.
        """
        e = self(e)
        root = self._root(i)
        g = bits + 4
        k = max(root.k, bits + 8)
        while True:
            lo, hi, scale = self._enclose(e, i, k)
            if (hi - lo) << (bits + 3) <= scale:
                break
            k += max(k // 2, 16)
        # round (lo + hi) / (2 scale) to the grid 2^-g
        num = (lo + hi) << g
        den = 2 * scale
        m = (num + den // 2) // den
        return arb(arf((m, -g)), arf((15, -(bits + 5))))

    def embeddings(self, e, bits=96):
        return [self.embed(e, i, bits) for i in range(1, self.degree + 1)]

    def approx(self, e, i):
        return float(self.embed(e, i, 60).mid())

    def element_degree(self, e):
        """Degree over Q of the minimal polynomial of ``e`` (rank of its powers)."""
        e = self(e)
        rows, p = [], self.one
        for _ in range(self.degree):
            rows.append(list(p.coords))
            p = p * e
        return _rank(rows)

    def conjugate_class(self, e, i, max_bits=4096):
        """Indices k with phi_k(e) == phi_i(e), decided exactly.

        In a field, phi_1(e), ..., phi_n(e) is the root list of the
        characteristic polynomial mu_e^(n/d), d = deg mu_e, and mu_e has simple
        roots: each value is taken by exactly n/d embeddings.  Refining the
        balls until exactly n/d of them overlap phi_i(e) therefore identifies
        the class.  Without verified irreducibility the count is unknown and
        overlap at ``max_bits`` is taken as equality.
        """
        e = self(e)
        n = self.degree
        if e.is_rational():
            return frozenset(range(1, n + 1))
        size = n // self.element_degree(e) if self.irreducibility_verified else None
        bits = 64
        while True:
            centre = self.embed(e, i, bits)
            hits = {k for k in range(1, n + 1) if k == i or self.embed(e, k, bits).overlaps(centre)}
            if len(hits) == size or (size is None and bits >= max_bits):
                return frozenset(hits)
            bits *= 2

    def compare(self, e, i, j):
        """Exact sign of phi_i(e) - phi_j(e)."""
        e = self(e)
        if i == j or e.is_rational():
            return 0
        bits = 64
        for _ in range(3):
            a, b = self.embed(e, i, bits), self.embed(e, j, bits)
            if a < b:
                return -1
            if a > b:
                return 1
            bits *= 2
        if j in self.conjugate_class(e, i):
            return 0
        while True:
            a, b = self.embed(e, i, bits), self.embed(e, j, bits)
            if a < b:
                return -1
            if a > b:
                return 1
            bits *= 2

    # -- serialization --------------------------------------------------------

    def to_json(self):
        return {
            "minpoly": [str(c) for c in self.minpoly],
            "unit": "rational strings, ascending degree",
            "primary": self.primary,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["minpoly"], primary=obj.get("primary"))


def field_create(minpoly, primary=None):
    """Validate ``minpoly`` and build the field (see :class:`NumberField`)."""
    return NumberField(minpoly, primary=primary)


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, field, num, den):
        g = den
        for v in num:
            g = gcd(g, v)
            if g == 1:
                break
        if g != 1:
            num = [v // g for v in num]
            den //= g
        self = object.__new__(cls)
        self.field = field
        self.num = tuple(num)
        self.den = den
        self._hash = None
        return self

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return NotImplemented

    @property
    def coords(self):
        return [Fraction(v, self.den) for v in self.num]

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return FieldElement._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return FieldElement._make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        n = f.degree
        a, b = self.num, other.num
        if n == 1:
            return FieldElement._make(f, [a[0] * b[0]], self.den * other.den)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        den = self.den * other.den
        m, lead = f._int_poly, f._lead
        while len(prod) > n:
            c = prod.pop()
            if lead != 1:
                prod = [lead * v for v in prod]
                den *= lead
            if c:
                shift = len(prod) - n
                for j in range(n):
                    prod[shift + j] -= c * m[j]
        return FieldElement._make(f, prod, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        f = self.field
        if f.degree == 1:
            return f.element([1 / Fraction(self.num[0], self.den)])
        g, s, _ = _poly.xgcd_poly(_poly.trim(self.coords), list(f.minpoly))
        if len(g) != 1:
            raise DivisionByZero("element is a zero divisor (minpoly reducible)")
        return f.element(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sign(self, i=1):
        return self.field.sign(self, i)

    def embed(self, i=1, bits=96):
        return self.field.embed(self, i, bits)

    def __float__(self):
        return self.field.approx(self, 1)

    def __repr__(self):
        return f"FieldElement({_poly_str(self.coords, 'a')})"

    def to_json(self):
        return [str(c) for c in self.coords]


def embed(e, i, bits=96):
    return e.field.embed(e, i, bits)


def chebyshev_trace(l, t):
    """Trace of g^l given t = tr(g): tau_{k+1} = t tau_k - tau_{k-1}.

    Works for any ring element supporting ``*`` and ``-`` with ints
    (field elements, arb balls, ints).
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    prev, cur = 2 + 0 * t, t
    if l == 0:
        return prev
    for _ in range(l - 1):
        prev, cur = cur, t * cur - prev
    return cur


def _poly_str(coeffs, var="x"):
    terms = []
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        mon = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if mon and c == 1:
            terms.append(mon)
        elif mon and c == -1:
            terms.append("-" + mon)
        else:
            terms.append(f"{c}{'*' + mon if mon else ''}")
    return " + ".join(reversed(terms)).replace("+ -", "- ") or "0"


def _rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
