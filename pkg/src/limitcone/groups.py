"""Group specifications and word enumeration.

Builtin groups:

* ``hecke_group(q)`` -- the Hecke group H(q) = (2, q, inf) generated by
  S = [[0, -1], [1, 0]] and T = [[1, lambda_q], [0, 1]], lambda_q = 2cos(pi/q),
  with S^2 = (ST)^q = 1 in PSL(2).
* ``triangle_q_inf_inf(q)`` -- the (q, inf, inf) triangle group generated by
  an elliptic E of order q and a parabolic P whose product is parabolic.
* ``pslz_diagonal(minpoly)`` -- PSL(2, Z) placed diagonally over a totally
  real field; every conjugate of every trace agrees.

Cofiniteness of user-supplied specs is not checked; such specs are marked
``trusted=False``.
"""
import json
from collections import OrderedDict
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from flint import arb, ctx

from . import _poly
from .errors import BadQ, BadSpec, ConstructionInvalid, LimitConeError
from .moebius import ELLIPTIC_INFINITE, MoebiusElement, _check_embeddings, classify
from .numfield import NumberField

_PSI_CACHE = {}


def _chebyshev_poly(n):
    """tau_n as a polynomial in t: tau_0 = 2, tau_1 = t, tau_{k+1} = t tau_k - tau_{k-1}."""
    prev, cur = [Fraction(2)], [Fraction(0), Fraction(1)]
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _poly.sub(_poly.mul([Fraction(0), Fraction(1)], cur), prev)
    return cur


def cos_minpoly(n):
    """Minimal polynomial of 2cos(2pi/n) over Q.

    The squarefree part of tau_n(x) - 2 has the simple roots 2cos(2pi k/n),
    0 <= k <= n/2; dividing out the factors for proper divisors of n leaves
    the primitive ones.
    """
    if n in _PSI_CACHE:
        return _PSI_CACHE[n]
    p = _poly.squarefree_part(_poly.sub(_chebyshev_poly(n), [Fraction(2)]))
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly.divmod_poly(p, cos_minpoly(d))
            if rem:
                raise ArithmeticError(f"cos_minpoly({d}) does not divide at n={n}")
    _PSI_CACHE[n] = p
    return p


def hecke_field(q):
    """Q(2cos(pi/q)) with 2cos(pi/q) as generator and identity embedding."""
    p = cos_minpoly(2 * q)
    K = NumberField(p)
    with ctx.workprec(128):
        target = 2 * (arb.pi() / q).cos()
        value = K.embed(K.gen, 1, 100)
        residue = sum((c.numerator * target ** j) / c.denominator for j, c in enumerate(p))
        if not (value.overlaps(target) and residue.contains(0)):
            raise ConstructionInvalid(f"minimal polynomial check failed for 2cos(pi/{q})")
    return K


@dataclass
class GroupSpec:
    field: NumberField
    generators: "OrderedDict[str, MoebiusElement]"
    embeddings: tuple
    label: str = ""
    provenance: str = ""
    relations: list = dc_field(default_factory=list)
    trusted: bool = True
    diagonal: bool = False

    def __post_init__(self):
        self.embeddings = _check_embeddings(self.field, self.embeddings)
        for name, g in self.generators.items():
            if g.field != self.field:
                raise BadSpec(f"generator {name} lives in another field")

    @property
    def r(self):
        return len(self.embeddings)

    @property
    def names(self):
        return list(self.generators)

    def letters(self):
        """Alphabet (generator index, exponent) in generator order, inverse second."""
        out = []
        for k in range(len(self.generators)):
            out.append((k, 1))
            out.append((k, -1))
        return out

    def matrix(self, letter):
        g = list(self.generators.values())[letter[0]]
        return g if letter[1] > 0 else g.inverse()

    def word_str(self, word):
        return format_word(word, self.names)

    def to_json(self):
        return {
            "schema": "1",
            "label": self.label,
            "field": self.field.to_json(),
            "generators": {k: g.to_json() for k, g in self.generators.items()},
            "embeddings": list(self.embeddings),
            "provenance": self.provenance,
            "relations": list(self.relations),
        }

    @classmethod
    def from_json(cls, obj):
        try:
            K = NumberField.from_json(obj["field"])
            gens = OrderedDict(
                (name, MoebiusElement.from_json(K, rows)) for name, rows in obj["generators"].items()
            )
        except LimitConeError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"malformed group spec: {exc}") from exc
        if not gens:
            raise BadSpec("a group spec needs at least one generator")
        embeddings = obj.get("embeddings")
        spec = cls(
            K,
            gens,
            tuple(embeddings) if embeddings else (1,),
            label=obj.get("label", ""),
            provenance=obj.get("provenance", "user spec (cofiniteness not verified)"),
            relations=list(obj.get("relations", [])),
            trusted=False,
        )
        if not embeddings:
            spec.embeddings = default_embeddings(spec)
        return spec


def format_word(word, names):
    """Render a word like ((1, 1), (1, 1), (0, 1)) as 'T^2 S'."""
    if not word:
        return "1"
    parts = []
    k = 0
    while k < len(word):
        g, s = word[k]
        run = 1
        while k + run < len(word) and word[k + run] == (g, s):
            run += 1
        exp = run * s
        parts.append(names[g] if exp == 1 else f"{names[g]}^{exp}")
        k += run
    return " ".join(parts)


def parse_word(text, names):
    """Inverse of ``format_word``: 'S T^4 S^-1' -> ((0, 1), (1, 1), ...)."""
    word = []
    for token in text.replace("*", " ").split():
        name, _, exp = token.partition("^")
        if name not in names:
            raise BadSpec(f"unknown generator {name!r} in word {text!r}")
        try:
            k = int(exp) if exp else 1
        except ValueError as exc:
            raise BadSpec(f"bad exponent in {token!r}") from exc
        word.extend([(names.index(name), 1 if k > 0 else -1)] * abs(k))
    return tuple(word)


def word_element(spec, word):
    acc = MoebiusElement.identity(spec.field)
    for letter in word:
        acc = acc * spec.matrix(letter)
    return acc


# -- enumeration ---------------------------------------------------------------


@dataclass
class EnumerationRun:
    depth: int
    cap: int
    elements: list  # (word, MoebiusElement) in BFS order
    counts: list  # new elements per word length
    truncated: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def status(self):
        return "CapExceeded" if self.truncated else "complete"


def enumerate_group(spec, depth, cap=100_000):
    """Breadth-first enumeration of reduced words with projective dedup.

    Each new element at length d+1 is a length-d element times a letter; only
    the first word reaching an element is kept, so each element appears once,
    with a shortest word.  Order is deterministic: BFS layers, and inside a
    layer the parent order followed by the letter order.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    letters = spec.letters()
    mats = [spec.matrix(x) for x in letters]
    ident = MoebiusElement.identity(spec.field)
    seen = {ident.key()}
    elements = [((), ident)]
    counts = [1]
    frontier = [((), ident)]
    truncated = len(elements) >= cap and depth > 0
    for _ in range(depth):
        if truncated:
            break
        nxt = []
        for word, g in frontier:
            last = word[-1] if word else None
            for letter, m in zip(letters, mats):
                if last is not None and last[0] == letter[0] and last[1] == -letter[1]:
                    continue
                h = g * m
                k = h.key()
                if k in seen:
                    continue
                seen.add(k)
                item = (word + (letter,), h)
                nxt.append(item)
                elements.append(item)
                if len(elements) >= cap:
                    truncated = True
                    break
            if truncated:
                break
        counts.append(len(nxt))
        frontier = nxt
        if not frontier:
            break
    return EnumerationRun(depth, cap, elements, counts, truncated)


def naive_enumeration(spec, depth):
    """All reduced words up to ``depth`` without dedup (test oracle)."""
    letters = spec.letters()
    out = [((), MoebiusElement.identity(spec.field))]
    layer = out[:]
    for _ in range(depth):
        nxt = []
        for word, g in layer:
            for letter in letters:
                if word and word[-1][0] == letter[0] and word[-1][1] == -letter[1]:
                    continue
                nxt.append((word + (letter,), g * spec.matrix(letter)))
        out.extend(nxt)
        layer = nxt
    return out


def invariant_traces(spec, depth, cap=100_000, run=None):
    """{tr(g^2) = tr(g)^2 - 2 : g enumerated}: generators of the invariant trace field.

    A finite sample of traces, not a subfield.
    """
    run = run or enumerate_group(spec, depth, cap)
    return {g.trace_squared - 2 for _, g in run}


def detect_unbounded(spec, depth, cap=100_000, margin=1, run=None):
    """Per field embedding (1..n): does some sampled |phi_i(tr)| exceed 2 + margin?"""
    K = spec.field
    run = run or enumerate_group(spec, depth, cap)
    bound = (2 + margin) ** 2
    flags = [False] * K.degree
    for _, g in run:
        t2 = g.trace_squared - bound
        for i in range(K.degree):
            if not flags[i] and K.sign(t2, i + 1) > 0:
                flags[i] = True
        if all(flags):
            break
    return flags


def default_embeddings(spec, depth=8, cap=5000):
    flags = detect_unbounded(spec, depth, cap)
    return tuple([1] + [i + 1 for i in range(1, len(flags)) if flags[i]])


def validate_spec(spec, depth=6, cap=20_000):
    """Exact relation checks plus the discreteness guard at the identity embedding."""
    problems = []
    for name, g in spec.generators.items():
        if g.a * g.d - g.b * g.c != 1:
            problems.append(f"det({name}) != 1")
    run = enumerate_group(spec, depth, cap)
    for word, g in run:
        if classify(g, 1).tag == ELLIPTIC_INFINITE:
            problems.append(f"elliptic of infinite order at the identity embedding: {spec.word_str(word)}")
            break
    return problems


# -- builtin constructors ------------------------------------------------------


def hecke_group(q, embeddings=None):
    """Hecke group H(q) = (2, q, inf) over Q(2cos(pi/q))."""
    if not isinstance(q, int) or q < 3:
        raise BadQ(f"Hecke groups need an integer q >= 3, got {q!r}")
    K = hecke_field(q)
    lam = K.gen
    S = MoebiusElement(0, -1, 1, 0, field=K)
    T = MoebiusElement(1, lam, 0, 1, field=K)
    if not (S * S).is_identity() or not ((S * T) ** q).is_identity():
        raise ConstructionInvalid(f"Hecke({q}) relations fail")
    spec = GroupSpec(
        K,
        OrderedDict([("S", S), ("T", T)]),
        (1,),
        label=f"hecke-{q}",
        provenance="builtin Hecke group (2,q,inf); cofinite",
        relations=["S^2 = 1", f"(S T)^{q} = 1"],
    )
    spec.embeddings = tuple(embeddings) if embeddings else default_embeddings(spec)
    spec.embeddings = _check_embeddings(K, spec.embeddings)
    return spec


def triangle_q_inf_inf(q, embeddings=None, guard_depth=6):
    """(q, inf, inf) triangle group: E = [[2c, 1], [-1, 0]], P = [[1, 2c + 2], [0, 1]].

    tr(E) = 2c = 2cos(pi/q) so E has order q; tr(E P) = -2 so E P is the third
    cusp.  Both facts are checked exactly, and a short enumeration guards
    against elliptic elements of infinite order at the identity embedding.
    """
    if not isinstance(q, int) or q < 2:
        raise BadQ(f"(q,inf,inf) needs an integer q >= 2, got {q!r}")
    K = hecke_field(q)
    c2 = K.gen
    E = MoebiusElement(c2, 1, -1, 0, field=K)
    P = MoebiusElement(1, c2 + 2, 0, 1, field=K)
    EP = E * P
    if EP.trace_squared != 4 or EP.is_identity():
        raise ConstructionInvalid("E P is not parabolic")
    if not (E ** q).is_identity() or any((E ** k).is_identity() for k in range(1, q)):
        raise ConstructionInvalid(f"E does not have order {q}")
    spec = GroupSpec(
        K,
        OrderedDict([("E", E), ("P", P)]),
        (1,),
        label=f"tri-qinfinf-{q}",
        provenance="builtin triangle group (q,inf,inf); cofinite",
        relations=[f"E^{q} = 1", "E P parabolic"],
    )
    if guard_depth:
        problems = validate_spec(spec, guard_depth)
        if problems:
            raise ConstructionInvalid("; ".join(problems))
    spec.embeddings = tuple(embeddings) if embeddings else default_embeddings(spec)
    spec.embeddings = _check_embeddings(K, spec.embeddings)
    return spec


def pslz_diagonal(minpoly, embeddings=None):
    """PSL(2, Z) = <S, T> with T = [[1, 1], [0, 1]], seen over a totally real field."""
    K = NumberField(minpoly)
    S = MoebiusElement(0, -1, 1, 0, field=K)
    T = MoebiusElement(1, 1, 0, 1, field=K)
    emb = tuple(embeddings) if embeddings else tuple(range(1, K.degree + 1))
    return GroupSpec(
        K,
        OrderedDict([("S", S), ("T", T)]),
        emb,
        label=f"pslz-diag-{_poly_label(K)}",
        provenance="PSL(2,Z) embedded diagonally; not Zariski dense by construction",
        relations=["S^2 = 1", "(S T)^3 = 1"],
        diagonal=True,
    )


def _poly_label(K):
    from .numfield import _poly_str

    return _poly_str(K.minpoly).replace(" ", "").replace("*", "")


def parse_polynomial(text):
    """Coefficient list (ascending) from a string like 'x^2-5' or '-5,0,1'."""
    text = text.strip()
    if "x" not in text:
        return [Fraction(c) for c in text.split(",")]
    import sympy

    x = sympy.Symbol("x")
    try:
        poly = sympy.Poly(sympy.sympify(text.replace("^", "**"), locals={"x": x}), x)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as exc:
        raise BadSpec(f"cannot parse polynomial {text!r}") from exc
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coeffs


def builtin(name):
    """Resolve 'hecke:q', 'tri-qinfinf:q' or 'pslz-diag:<minpoly>'."""
    kind, _, arg = name.partition(":")
    try:
        if kind == "hecke":
            return hecke_group(int(arg))
        if kind == "tri-qinfinf":
            return triangle_q_inf_inf(int(arg))
        if kind == "pslz-diag":
            return pslz_diagonal(parse_polynomial(arg))
    except ValueError as exc:
        if isinstance(exc, LimitConeError):
            raise
        raise BadSpec(f"bad builtin argument in {name!r}: {exc}") from exc
    raise BadSpec(f"unknown builtin group {name!r}")


def load_spec(source):
    """Builtin name, path to a JSON file, or an already-parsed dict."""
    if isinstance(source, dict):
        return GroupSpec.from_json(source)
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        try:
            obj = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise BadSpec(f"cannot read spec file {source}: {exc}") from exc
        return GroupSpec.from_json(obj)
    return builtin(source)
