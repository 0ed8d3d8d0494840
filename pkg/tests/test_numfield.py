from fractions import Fraction
from math import sqrt

import mpmath
import pytest
from flint import arb, ctx
from hypothesis import given, strategies as st

from limitcone import _poly
from limitcone.errors import (
    BadIndex,
    DivisionByZero,
    FieldMismatch,
    NotIrreducible,
    NotSquarefree,
    NotTotallyReal,
)
from limitcone.numfield import NumberField, chebyshev_trace, embed, field_create

GOLDEN = NumberField([-1, -1, 1])  # x^2 - x - 1
CUBIC = NumberField([1, -3, 0, 1])  # x^3 - 3x + 1, roots 2cos(2pi k/9)
QUARTIC = NumberField([1, 0, -4, 0, 1])  # x^4 - 4x^2 + 1


def mp_roots(K):
    """Independent oracle: mpmath roots, ordered largest first then ascending."""
    with mpmath.workdps(50):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(K.minpoly)]
        roots = sorted(mpmath.re(r) for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=100))
    return [roots[-1]] + roots[:-1]


def mp_value(e, root):
    with mpmath.workdps(50):
        return sum(mpmath.mpf(c.numerator) / c.denominator * root ** j for j, c in enumerate(e.coords))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def elements(K):
    return st.lists(rationals, min_size=K.degree, max_size=K.degree).map(K.element)


# -- construction --------------------------------------------------------------


def test_golden_embeddings_match_quadratic_formula():
    # oracle: (1 +- sqrt 5) / 2
    assert GOLDEN.approx(GOLDEN.gen, 1) == pytest.approx((1 + sqrt(5)) / 2, abs=1e-15)
    assert GOLDEN.approx(GOLDEN.gen, 2) == pytest.approx((1 - sqrt(5)) / 2, abs=1e-15)


def test_primary_selects_identity_root():
    K = NumberField([-1, -1, 1], primary=0)
    assert K.approx(K.gen, 1) == pytest.approx((1 - sqrt(5)) / 2)
    assert K.approx(K.gen, 2) == pytest.approx((1 + sqrt(5)) / 2)


def test_degree_one_field():
    Q = NumberField([-3, 1])
    assert Q.degree == 1
    assert Q.gen == 3
    assert Q.sign(Q(-2), 1) == -1


@pytest.mark.parametrize("K", [GOLDEN, CUBIC, QUARTIC])
def test_embeddings_match_mpmath_roots(K):
    roots = mp_roots(K)
    for i in range(1, K.degree + 1):
        ball = K.embed(K.gen, i, 120)
        with ctx.workprec(300):
            assert abs(ball - arb(mpmath.nstr(roots[i - 1], 45))) < arb(2) ** -100


@pytest.mark.parametrize(
    "poly, err",
    [
        ([1, 0, 1], NotTotallyReal),  # x^2 + 1
        ([-2, 0, 0, 1], NotTotallyReal),  # x^3 - 2
        ([-4, 0, 1], NotIrreducible),  # x^2 - 4
        ([6, 0, -5, 0, 1], NotIrreducible),  # (x^2 - 2)(x^2 - 3)
        ([1, -2, 1], NotSquarefree),  # (x - 1)^2
    ],
)
def test_rejected_polynomials(poly, err):
    with pytest.raises(err):
        NumberField(poly)


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        NumberField([1, 0, 2])


def test_field_create_and_json_roundtrip():
    K = field_create(["-1", "-1", "1"])
    assert K == GOLDEN
    assert NumberField.from_json(K.to_json()) == K
    e = K.element(["1/2", "3"])
    assert K.element(e.to_json()) == e


def test_high_degree_field_flags_unverified_irreducibility():
    # 2cos(2pi/11) minimal polynomial, degree 5
    K = NumberField([1, 3, -3, -4, 1, 1])
    assert K.degree == 5
    assert K.irreducibility_verified is False
    assert len({round(K.approx(K.gen, i), 9) for i in range(1, 6)}) == 5


# -- arithmetic ----------------------------------------------------------------


@given(elements(GOLDEN), elements(GOLDEN), elements(GOLDEN))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GOLDEN.zero


@given(elements(CUBIC))
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            a.inverse()
    else:
        assert a * a.inverse() == CUBIC.one
        assert a / a == 1


@given(elements(CUBIC), elements(CUBIC))
def test_embedding_is_a_ring_homomorphism(a, b):
    for i in (1, 2, 3):
        lhs = CUBIC.embed(a * b, i, 80)
        rhs = CUBIC.embed(a, i, 120) * CUBIC.embed(b, i, 120)
        assert lhs.overlaps(rhs)


@given(elements(QUARTIC))
def test_sign_matches_mpmath_oracle(a):
    roots = mp_roots(QUARTIC)
    for i in range(1, 5):
        v = mp_value(a, roots[i - 1])
        s = QUARTIC.sign(a, i)
        if a.is_zero():
            assert s == 0
        else:
            assert s == (1 if v > 0 else -1)


def test_minpoly_relation():
    t = GOLDEN.gen
    assert t * t == t + 1
    assert CUBIC.gen ** 3 == 3 * CUBIC.gen - 1


def test_power_and_negative_power():
    t = GOLDEN.gen
    assert t ** 0 == 1
    assert t ** -1 == t - 1  # 1/phi = phi - 1
    assert (t ** 5) * (t ** -5) == 1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GOLDEN.gen + CUBIC.gen


def test_bad_index():
    with pytest.raises(BadIndex):
        GOLDEN.embed(GOLDEN.gen, 3)
    with pytest.raises(BadIndex):
        GOLDEN.sign(GOLDEN.gen, 0)


def test_rational_helpers():
    e = GOLDEN(Fraction(3, 4))
    assert e.is_rational() and e.rational() == Fraction(3, 4)
    assert not GOLDEN.gen.is_rational()
    assert hash(GOLDEN(2)) == hash(GOLDEN.element([2, 0]))


def test_embed_widths_and_nesting():
    e = CUBIC.gen * 7 - Fraction(1, 3)
    outer = embed(e, 2, 40)
    inner = embed(e, 2, 200)
    assert float(outer.rad()) <= 2.0 ** -40
    assert float(inner.rad()) <= 2.0 ** -200
    assert outer.contains(inner)


def test_exact_zero_sign_after_cancellation():
    t = QUARTIC.gen
    z = t ** 4 - 4 * t ** 2 + 1
    assert z.is_zero()
    assert QUARTIC.sign(z, 3) == 0


# -- conjugates ----------------------------------------------------------------


def test_element_degree_and_conjugate_class():
    b2 = QUARTIC.gen ** 2  # 2 +- sqrt 3, degree 2 inside a quartic field
    assert QUARTIC.element_degree(b2) == 2
    assert QUARTIC.element_degree(QUARTIC.gen) == 4
    vals = [QUARTIC.approx(b2, i) for i in range(1, 5)]
    for i in range(1, 5):
        expected = {k for k in range(1, 5) if abs(vals[k - 1] - vals[i - 1]) < 1e-9}
        assert QUARTIC.conjugate_class(b2, i) == expected


@given(elements(QUARTIC))
def test_compare_matches_floats(a):
    vals = [mp_value(a, r) for r in mp_roots(QUARTIC)]
    for i in range(1, 5):
        for j in range(1, 5):
            c = QUARTIC.compare(a, i, j)
            diff = vals[i - 1] - vals[j - 1]
            if abs(diff) < mpmath.mpf(10) ** -30:
                assert c == 0
            else:
                assert c == (1 if diff > 0 else -1)


# -- Chebyshev traces ------------------------------------------------------------


def test_chebyshev_trace_examples():
    t = GOLDEN.gen
    assert chebyshev_trace(0, t) == 2
    assert chebyshev_trace(1, t) == t
    assert chebyshev_trace(2, t) == t * t - 2
    # t = 2cos(pi/5): tau_5 = 2cos(pi) = -2
    assert chebyshev_trace(5, t) == -2


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=-5, max_value=5))
def test_chebyshev_trace_matches_matrix_power(l, t):
    # oracle: trace of [[t, -1], [1, 0]]^l by repeated multiplication
    m = [[1, 0], [0, 1]]
    for _ in range(l):
        m = [[m[0][0] * t + m[0][1], -m[0][0]], [m[1][0] * t + m[1][1], -m[1][0]]]
    assert chebyshev_trace(l, t) == m[0][0] + m[1][1]


# -- polynomial helpers ------------------------------------------------------------


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5).filter(lambda r: len(set(r)) == len(r)))
def test_root_isolation_on_integer_roots(roots):
    p = [Fraction(1)]
    for r in roots:
        p = _poly.mul(p, [Fraction(-r), Fraction(1)])
    isolated = _poly.isolate_real_roots(p)
    assert len(isolated) == len(roots)
    for (lo, hi), r in zip(isolated, sorted(roots)):
        assert lo <= r <= hi


def test_xgcd():
    p = _poly.as_poly([-1, 0, 1])
    q = _poly.as_poly([2, 1])
    g, s, t = _poly.xgcd_poly(p, q)
    assert g == [1]
    assert _poly.add(_poly.mul(s, p), _poly.mul(t, q)) == [1]
