"""Exact Moebius transformations over a totally real field.

Elements of PSL(2, K) are stored as determinant-one matrices with a fixed
sign representative.  Everything that depends on the type of an element
(hyperbolic, parabolic, elliptic) is decided by exact sign computations in
K; floating balls (``flint.arb``) only appear for genuinely real-valued
outputs such as translation lengths and fixed points.
"""
import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from flint import acb, arb, ctx

from .errors import CommonFixedPoint, GeometryDegenerate, NoTranslationDirection, NotFound, NotHyperbolic
from .numfield import FieldElement, NumberField

DEFAULT_ORDER_BOUND = 200

IDENTITY = "Identity"
ELLIPTIC_FINITE = "EllipticFinite"
ELLIPTIC_INFINITE = "EllipticInfinite"
PARABOLIC = "Parabolic"
HYPERBOLIC = "Hyperbolic"
ELLIPTIC = "Elliptic"
MIXED = "Mixed"


class _Infinity:
    """The boundary point at infinity of the upper half-plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


class MoebiusElement:
    """Projective 2x2 matrix [[a, b], [c, d]] over K with ad - bc = 1.

    The stored representative has its first nonzero entry positive under the
    identity embedding, so equal transformations have equal entries.
    """

    __slots__ = ("a", "b", "c", "d", "field", "_key", "_order", "_t2")

    def __init__(self, a, b, c, d, field: Optional[NumberField] = None):
        if field is None:
            field = next(x.field for x in (a, b, c, d) if isinstance(x, FieldElement))
        a, b, c, d = (field(x) for x in (a, b, c, d))
        if a * d - b * c != 1:
            raise ValueError("determinant must be exactly 1")
        self._set(field, a, b, c, d)

    @classmethod
    def _unchecked(cls, field, a, b, c, d):
        self = object.__new__(cls)
        self._set(field, a, b, c, d)
        return self

    def _set(self, field, a, b, c, d):
        for x in (a, b, c, d):
            if not x.is_zero():
                if field.sign(x, 1) < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d
        self._key = None
        self._order = False
        self._t2 = None

    @classmethod
    def identity(cls, field):
        return cls._unchecked(field, field.one, field.zero, field.zero, field.one)

    # -- group operations -----------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, MoebiusElement):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MoebiusElement._unchecked(
            self.field, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
        )

    def inverse(self):
        return MoebiusElement._unchecked(self.field, self.d, -self.b, -self.c, self.a)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = MoebiusElement.identity(self.field)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- invariants -----------------------------------------------------------

    @property
    def trace(self):
        """a + d of the stored representative (sign is representative-dependent)."""
        return self.a + self.d

    @property
    def trace_squared(self):
        if self._t2 is None:
            t = self.a + self.d
            self._t2 = t * t
        return self._t2

    def trace_abs(self, i=1, bits=96):
        """Ball around |phi_i(a + d)|, the projective trace tr(g)."""
        t = self.field.embed(self.trace, i, bits)
        return abs(t)

    def is_identity(self):
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def key(self):
        if self._key is None:
            self._key = tuple((x.num, x.den) for x in (self.a, self.b, self.c, self.d))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, MoebiusElement):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MoebiusElement([[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]])"

    def entries(self):
        return self.a, self.b, self.c, self.d

    def embed(self, i, bits=96):
        """The real matrix phi_i(g) as a tuple (a, b, c, d) of arb balls."""
        return tuple(self.field.embed(x, i, bits) for x in self.entries())

    def to_json(self):
        return [[self.a.to_json(), self.b.to_json()], [self.c.to_json(), self.d.to_json()]]

    @classmethod
    def from_json(cls, field, rows):
        (a, b), (c, d) = rows
        return cls(field(a), field(b), field(c), field(d), field=field)

    # -- finite order ---------------------------------------------------------

    def finite_order(self, order_bound=DEFAULT_ORDER_BOUND):
        """Smallest k <= order_bound with g^k = +-I, or None.

        If some real embedding of tr(g)^2 - 4 is positive, g has infinite order
        (every conjugate of the trace of a torsion element lies in [-2, 2]),
        so the power search is skipped.
        """
        if self._order is not False and self._order[1] >= order_bound:
            k = self._order[0]
            return k if k is None or k <= order_bound else None
        if self.is_identity():
            result = 1
        else:
            disc = self.trace_squared - 4
            if any(self.field.sign(disc, j) >= 0 for j in range(1, self.field.degree + 1)):
                result = None
            else:
                result = _power_search(self, order_bound)
        self._order = (result, order_bound)
        return result


def _power_search(g, bound):
    p = g
    for k in range(1, bound + 1):
        if p.is_identity():
            return k
        p = p * g
    return None


@dataclass(frozen=True)
class ElementClass:
    tag: str
    order: Optional[int] = None
    order_bound: Optional[int] = None

    def __str__(self):
        if self.tag == ELLIPTIC_FINITE:
            return f"EllipticFinite({self.order})"
        if self.tag == ELLIPTIC_INFINITE:
            return f"EllipticInfinite(up to {self.order_bound})"
        return self.tag

    @property
    def is_elliptic(self):
        return self.tag in (ELLIPTIC_FINITE, ELLIPTIC_INFINITE)


def classify(g, i=1, order_bound=DEFAULT_ORDER_BOUND):
    """Exact type of phi_i(g): identity, parabolic, hyperbolic or elliptic."""
    if g.is_identity():
        return ElementClass(IDENTITY)
    s = g.field.sign(g.trace_squared - 4, i)
    if s > 0:
        return ElementClass(HYPERBOLIC)
    if s == 0:
        return ElementClass(PARABOLIC)
    k = g.finite_order(order_bound)
    if k is None:
        return ElementClass(ELLIPTIC_INFINITE, order_bound=order_bound)
    return ElementClass(ELLIPTIC_FINITE, order=k, order_bound=order_bound)


def _length_from_trace(t, bits):
    """2 arcosh(|t|/2) for a ball t with |t| > 2."""
    with ctx.workprec(bits + 64):
        return 2 * (abs(t) / 2).acosh()


def translation_length(g, i=1, bits=96, cls=None):
    """Translation length of phi_i(g); exactly zero unless hyperbolic."""
    cls = cls or classify(g, i)
    if cls.tag != HYPERBOLIC:
        return arb(0)
    tr = g.trace
    extra = 16
    while True:
        ell = _length_from_trace(g.field.embed(tr, i, bits + extra), bits)
        if 2 * ell.rad() <= arb(2) ** -bits:
            return ell
        extra *= 2


@dataclass
class IsometryTuple:
    source: MoebiusElement
    embeddings: tuple
    factors: list
    classes: list
    tuple_class: str
    word: str = ""

    @property
    def r(self):
        return len(self.embeddings)


def _tuple_class(classes):
    tags = [c.tag for c in classes]
    if all(t == IDENTITY for t in tags):
        return IDENTITY
    if all(t in (ELLIPTIC_FINITE, ELLIPTIC_INFINITE) for t in tags):
        return ELLIPTIC
    if all(t == PARABOLIC for t in tags):
        return PARABOLIC
    if all(t == HYPERBOLIC for t in tags):
        return HYPERBOLIC
    return MIXED


def _check_embeddings(field, embeddings):
    from .errors import BadIndex

    embeddings = tuple(embeddings)
    if not embeddings or embeddings[0] != 1:
        raise BadIndex("the identity embedding 1 must come first")
    if len(set(embeddings)) != len(embeddings):
        raise BadIndex("embedding indices must be distinct")
    for i in embeddings:
        if not 1 <= i <= field.degree:
            raise BadIndex(f"embedding index {i} not in 1..{field.degree}")
    return embeddings


def tuple_embed(g, embeddings, bits=96, order_bound=DEFAULT_ORDER_BOUND, with_factors=True, word=""):
    """The isometry tuple g* = (phi_1(g), ..., phi_r(g))."""
    embeddings = _check_embeddings(g.field, embeddings)
    classes = [classify(g, i, order_bound) for i in embeddings]
    factors = [g.embed(i, bits) for i in embeddings] if with_factors else []
    return IsometryTuple(g, embeddings, factors, classes, _tuple_class(classes), word)


# -- fixed points --------------------------------------------------------------


@dataclass
class FixedPoints:
    kind: str
    attractive: object = None
    repulsive: object = None
    point: object = None


def fixed_points(g, i=1, bits=96):
    """Fixed-point data of phi_i(g).

    Hyperbolic: attractive/repulsive boundary points (``INF`` or arb), the
    attractive one being the limit of g^n(z).  Parabolic: ``point`` on the
    boundary.  Elliptic: ``point`` is an acb in the upper half-plane.
    """
    if g.is_identity():
        raise ValueError("the identity fixes everything")
    cls = classify(g, i)
    K = g.field
    with ctx.workprec(bits + 64):
        a, b, c, d = g.embed(i, bits + 32)
        if cls.tag == HYPERBOLIC:
            if g.c.is_zero():
                other = b / (d - a)
                if K.sign(g.a * g.a - 1, i) > 0:
                    return FixedPoints(HYPERBOLIC, attractive=INF, repulsive=other)
                return FixedPoints(HYPERBOLIC, attractive=other, repulsive=INF)
            t = a + d
            s = (t * t - 4).sqrt()
            plus = (a - d + s) / (2 * c)
            minus = (a - d - s) / (2 * c)
            if K.sign(g.trace, i) > 0:
                return FixedPoints(HYPERBOLIC, attractive=plus, repulsive=minus)
            return FixedPoints(HYPERBOLIC, attractive=minus, repulsive=plus)
        if cls.tag == PARABOLIC:
            if g.c.is_zero():
                return FixedPoints(PARABOLIC, point=INF)
            return FixedPoints(PARABOLIC, point=(a - d) / (2 * c))
        t = a + d
        x = (a - d) / (2 * c)
        y = (4 - t * t).sqrt() / (2 * abs(c))
        return FixedPoints(cls.tag, point=acb(x, y))


# -- translation directions ----------------------------------------------------


@dataclass
class Direction:
    """Point (x_1 : ... : x_r) of the positive projective simplex, max = 1."""

    coords: tuple
    lengths: tuple = ()
    word: str = ""
    tag: str = "hyperbolic"
    traces: tuple = ()

    @property
    def r(self):
        return len(self.coords)

    def ratio(self, j=1):
        """x_{j+1} / x_1 as a ball (0-based ``j``)."""
        return self.lengths[j] / self.lengths[0]

    def floats(self):
        return [float(x.mid()) for x in self.coords]


def translation_direction(t: IsometryTuple, bits=96):
    """L(g) = (l(g_1) : ... : l(g_r)) normalized so the largest coordinate is 1."""
    g = t.source
    lengths = [translation_length(g, i, bits, cls) for i, cls in zip(t.embeddings, t.classes)]
    hyp = [k for k, cls in enumerate(t.classes) if cls.tag == HYPERBOLIC]
    if not hyp:
        raise NoTranslationDirection("no factor is hyperbolic")
    tag = "hyperbolic" if len(hyp) == len(lengths) else "mixed"
    if g.trace_squared.is_rational():
        # all conjugates of the trace coincide
        coords = tuple(arb(1) if k in hyp else arb(0) for k in range(len(lengths)))
        return Direction(coords, tuple(lengths), t.word, tag, _traces(t, bits))
    top = _argmax(g, t, lengths, hyp, bits)
    with ctx.workprec(bits + 64):
        coords = []
        for k, ell in enumerate(lengths):
            if k == top:
                coords.append(arb(1))
            elif k in hyp:
                q = ell / lengths[top]
                if not q < 1:
                    q = q.lower().union(arb(1)) if q.lower() < 1 else arb(1)
                coords.append(q)
            else:
                coords.append(arb(0))
    return Direction(tuple(coords), tuple(lengths), t.word, tag, _traces(t, bits))


def _traces(t, bits):
    tr = t.source.trace
    return tuple(t.source.field.embed(tr, i, bits) for i in t.embeddings)


def _argmax(g, t, lengths, hyp, bits):
    best = hyp[0]
    for k in hyp[1:]:
        if lengths[k] > lengths[best]:
            best = k
        elif not lengths[k] < lengths[best]:
            # overlapping balls: compare at higher precision, ties keep the first
            hi = translation_length(g, t.embeddings[k], 4 * bits, t.classes[k])
            hb = translation_length(g, t.embeddings[best], 4 * bits, t.classes[best])
            if hi > hb:
                best = k
    return best


# -- reflections ---------------------------------------------------------------


@dataclass
class ReflectionLine:
    """Geodesic of the upper half-plane: a vertical line x = p or a half-circle."""

    kind: str  # "line" or "circle"
    p: arb
    rho: Optional[arb] = None

    def matrix(self):
        """Real matrix R with reflection z -> R(conj z)."""
        if self.kind == "line":
            return (arb(-1), 2 * self.p, arb(0), arb(1))
        p, rho = self.p, self.rho
        return (p, rho * rho - p * p, arb(1), -p)

    def reflect(self, z):
        a, b, c, d = self.matrix()
        w = z.conjugate()
        return (a * w + b) / (c * w + d)

    def endpoints(self):
        if self.kind == "line":
            return (self.p, INF)
        return (self.p - self.rho, self.p + self.rho)


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def compose_reflections(second, first, bits=96):
    """Matrix of second o first, normalized to determinant 1."""
    with ctx.workprec(bits + 64):
        a, b, c, d = _mat_mul(second.matrix(), first.matrix())
        s = (a * d - b * c).sqrt()
        return (a / s, b / s, c / s, d / s)


def matrix_distance(m, n, bits=96):
    """Max entrywise distance between m and +-n (upper bound as float)."""
    with ctx.workprec(bits + 64):
        plus = max(float(abs(x - y).upper()) for x, y in zip(m, n))
        minus = max(float(abs(x + y).upper()) for x, y in zip(m, n))
    return min(plus, minus)


def _geodesic(x1, x2):
    if x1 is INF:
        return ReflectionLine("line", x2)
    if x2 is INF:
        return ReflectionLine("line", x1)
    return ReflectionLine("circle", (x1 + x2) / 2, abs(x2 - x1) / 2)


def _apply_real(m, x):
    a, b, c, d = m
    if x is INF:
        return INF if c.is_zero() else a / c
    den = c * x + d
    if den.contains(0):
        return INF
    return (a * x + b) / den


def _standard_frame(h, i, bits, anchor=None):
    """Real matrix M with M(0) = repulsive, M(inf) = attractive, M(i) = anchor."""
    fp = fixed_points(h, i, bits)
    att, rep = fp.attractive, fp.repulsive
    one, zero = arb(1), arb(0)
    if att is INF:
        A = (one, rep, zero, one)
    elif rep is INF:
        A = (att, -one, one, zero)
    else:
        sigma = one if att > rep else -one
        s = abs(att - rep).sqrt()
        A = (att / s, rep * sigma / s, one / s, sigma / s)
    if anchor is None:
        y0 = one
    else:
        anchor = acb(anchor)
        a, b, c, d = A
        w = (d * anchor - b) / (-c * anchor + a)
        if not abs(w.real) < arb(2) ** (-bits // 2) * (1 + abs(w.imag)):
            raise ValueError("anchor does not lie on the axis")
        y0 = w.imag
    r = y0.sqrt()
    a, b, c, d = A
    return (a * r, b / r, c * r, d / r)


def _transform_line(M, radius):
    return _geodesic(_apply_real(M, -radius), _apply_real(M, radius))


def axis_reflections(h, i=1, anchor=None, bits=96):
    """Two geodesics orthogonal to the axis of phi_i(h), l/2 apart, with
    reflect(L2) o reflect(L1) = phi_i(h).

    ``anchor`` is a point on the axis (complex number or acb) where L1 crosses
    it; by default the image of i under the standard frame.
    """
    if classify(h, i).tag != HYPERBOLIC:
        raise NotHyperbolic("axis_reflections needs a hyperbolic element")
    with ctx.workprec(bits + 64):
        M = _standard_frame(h, i, bits + 32, anchor)
        ell = translation_length(h, i, bits + 32)
        L1 = _transform_line(M, arb(1))
        L2 = _transform_line(M, (ell / 2).exp())
    return L1, L2


# -- product type prediction ---------------------------------------------------


def _mobius_acb(m, z):
    a, b, c, d = m
    return (a * z + b) / (c * z + d)


def _inverse_real(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def _line_through(p, alpha):
    """Geodesic through p (acb) with tangent direction angle alpha."""
    x, y = p.real, p.imag
    ca = alpha.cos()
    if ca.contains(0):
        return ReflectionLine("line", x)
    return ReflectionLine("circle", x + y * alpha.sin() / ca, y / abs(ca))


def _position(v, rho):
    """+1 outside |x| > rho, -1 inside, 0 unresolved."""
    if v is INF:
        return 1
    av = abs(v)
    if av > rho:
        return 1
    if av < rho:
        return -1
    return 0


def product_type_predict(e, h, i=1, bits=96, max_bits=1024):
    """Predict the type of phi_i(e h) from the reflection decomposition.

    h = s2 s1 with both lines orthogonal to the axis of h, e = s4 s3 with both
    lines through the fixed point of e, and s2 = s3 the line through that
    fixed point orthogonal to the axis; then e h = s4 s1 and its type is read
    off from how L1 and L4 meet.
    """
    ce, ch = classify(e, i), classify(h, i)
    if not ce.is_elliptic:
        raise ValueError("first argument must be elliptic at this embedding")
    if ch.tag != HYPERBOLIC:
        raise NotHyperbolic("second argument must be hyperbolic at this embedding")
    prec = bits
    while True:
        verdict = _predict_at(e, h, i, prec)
        if verdict is not None:
            return verdict
        if prec >= max_bits:
            break
        prec *= 2
    verdict = _predict_at(e, h, i, prec, final=True)
    if verdict is None:
        raise GeometryDegenerate("line configuration unresolved at maximal precision")
    return verdict


def _predict_at(e, h, i, bits, final=False):
    with ctx.workprec(bits + 64):
        M = _standard_frame(h, i, bits)
        Minv = _inverse_real(M)
        p = _mobius_acb(Minv, fixed_points(e, i, bits).point)
        ell = translation_length(h, i, bits)
        rho2 = abs(p)
        rho1 = rho2 * (-ell / 2).exp()
        E = _mat_mul(_mat_mul(Minv, e.embed(i, bits)), M)
        t = abs(E[0] + E[3])
        phi = (t / 2).acos()
        alpha3 = p.arg() + arb.pi() / 2
        L3 = _line_through(p, alpha3)
        best = None
        for cand in (alpha3 + phi, alpha3 - phi):
            L4 = _line_through(p, cand)
            err = matrix_distance(compose_reflections(L4, L3, bits), E, bits)
            if best is None or err < best[0]:
                best = (err, L4)
        L4 = best[1]
        pos = [_position(v, rho1) for v in L4.endpoints()]
    if 0 not in pos:
        return "Elliptic" if pos[0] != pos[1] else "Hyperbolic"
    if final and pos.count(0) == 1:
        return "Parabolic"
    return None


# -- Schottky certificates -----------------------------------------------------


def chart(x, bits=96):
    """Boundary chart R u {inf} -> [0, 1): x -> 1/2 + arctan(x)/pi, inf -> 0."""
    if x is INF:
        return arb(0)
    with ctx.workprec(bits + 32):
        return arb(1) / 2 + x.atan() / arb.pi()


def _chart_from_vector(w1, w2):
    # the boundary point (w1 : w2) has angle psi with (w1, w2) ~ (-cos psi, sin psi)
    if abs(float(w1.mid())) >= abs(float(w2.mid())):
        psi = (w2 / -w1).atan()
    else:
        psi = arb.pi() / 2 - (-w1 / w2).atan()
    return psi / arb.pi()


def _vector_from_chart(theta):
    psi = theta * arb.pi()
    return -psi.cos(), psi.sin()


def _circular_offset(theta, center):
    delta = theta - center
    return delta - round(float(delta.mid()))


@dataclass
class SchottkyCertificate:
    n: int
    halfwidth: arb
    arcs: dict  # name -> chart centre; names "g+", "g-", "h+", "h-"
    embedding: int
    bits: int = 96
    checks: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {
            "n": self.n,
            "embedding": self.embedding,
            "halfwidth": float(self.halfwidth.mid()),
            "arcs": {k: [float((c - self.halfwidth).mid()), float((c + self.halfwidth).mid())] for k, c in self.arcs.items()},
            "chart": "theta = 1/2 + arctan(x)/pi, inf -> 0",
            "bits": self.bits,
        }


def common_fixed_point(g, h):
    """Exact test: do g and h share a fixed point (resultant of fixed-point forms)?"""
    A = (g.c, g.d - g.a, -g.b)
    B = (h.c, h.d - h.a, -h.b)
    res = (A[0] * B[2] - A[2] * B[0]) ** 2 - (A[0] * B[1] - A[1] * B[0]) * (A[1] * B[2] - A[2] * B[1])
    return res.is_zero()


def _maps_arc_into(m, source_center, w, target_center):
    """Do both endpoints of the arc (source_center +- w) map strictly into the
    target arc?  Sufficient for the complement statement (see verify_ping_pong)."""
    a, b, c, d = m
    for sgn in (-1, 1):
        v1, v2 = _vector_from_chart(source_center + sgn * w)
        img = _chart_from_vector(a * v1 + b * v2, c * v1 + d * v2)
        if not abs(_circular_offset(img, target_center)) < w:
            return False
    return True


def verify_ping_pong(g, h, cert, bits=None):
    """Re-check a certificate: four disjoint arcs, g^n sends the complement of
    I_g- into I_g+, g^-n the complement of I_g+ into I_g-, same for h.

    Checking arc endpoints suffices: the image of the complement of I_g- is an
    arc containing the attractive point and avoiding the repulsive one.
    """
    bits = bits or cert.bits
    i, n, w = cert.embedding, cert.n, cert.halfwidth
    with ctx.workprec(bits + 64):
        centers = cert.arcs
        names = list(centers)
        for x in range(4):
            for y in range(x + 1, 4):
                if not abs(_circular_offset(centers[names[x]], centers[names[y]])) > 2 * w:
                    return False
        for name, elem in (("g", g), ("h", h)):
            fwd = (elem ** n).embed(i, bits)
            bwd = (elem ** -n).embed(i, bits)
            if not _maps_arc_into(fwd, centers[name + "-"], w, centers[name + "+"]):
                return False
            if not _maps_arc_into(bwd, centers[name + "+"], w, centers[name + "-"]):
                return False
    return True


def schottky_powers(g, h, i=1, max_power=20, bits=96):
    """Smallest n <= max_power with a ping-pong certificate for <g^n, h^n>."""
    if classify(g, i).tag != HYPERBOLIC or classify(h, i).tag != HYPERBOLIC:
        raise NotHyperbolic("schottky_powers needs two hyperbolic elements")
    if common_fixed_point(g, h):
        raise CommonFixedPoint("g and h share a fixed point")
    fg, fh = fixed_points(g, i, bits), fixed_points(h, i, bits)
    with ctx.workprec(bits + 64):
        arcs = {
            "g+": chart(fg.attractive, bits),
            "g-": chart(fg.repulsive, bits),
            "h+": chart(fh.attractive, bits),
            "h-": chart(fh.repulsive, bits),
        }
        names = list(arcs)
        gaps = [
            abs(_circular_offset(arcs[names[x]], arcs[names[y]]))
            for x in range(4)
            for y in range(x + 1, 4)
        ]
        gap = min(gaps, key=lambda v: float(v.mid()))
        w = arb(float(gap.lower()) / 3)
    for n in range(1, max_power + 1):
        cert = SchottkyCertificate(n, w, arcs, i, bits)
        if verify_ping_pong(g, h, cert, bits):
            return cert
    raise NotFound(max_power, f"no ping-pong certificate with n <= {max_power}")


def random_reduced_words(gens, count, max_len, seed=0):
    """``count`` seeded random nonempty reduced words over gens and inverses.

    Words are lists of (generator index, +-1).
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        word = []
        while len(word) < length:
            letter = (rng.randrange(len(gens)), rng.choice((1, -1)))
            if word and word[-1][0] == letter[0] and word[-1][1] == -letter[1]:
                continue
            word.append(letter)
        out.append(word)
    return out


def evaluate_word(gens, word):
    inverses = [x.inverse() for x in gens]
    acc = MoebiusElement.identity(gens[0].field)
    for k, s in word:
        acc = acc * (gens[k] if s > 0 else inverses[k])
    return acc
