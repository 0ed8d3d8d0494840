"""Limit-set computations on enumerated isometry tuples.

* translation-direction clouds and limit-cone hulls,
* attractive-fixed-point clouds on the torus (boundary circle)^r,
* orbits of a pair of circle rotations on the 2-torus,
* the parabolic family T_n with tr(T_n) = n A - B,
* the Zariski-density decision through invariant traces,
* the search for mixed isometries with a prescribed type pattern.

Boundary points are placed on [0, 1) by the chart of ``moebius.chart``
(theta = 1/2 + arctan(x)/pi, inf -> 0).  Every density statistic below
depends on that chart.
"""
import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np
from flint import arb, arf, ctx

from .errors import DegreeOne, EmbeddingStillElliptic, EmptyCloud, NotFound, NotHyperbolic
from .groups import enumerate_group, invariant_traces
from .moebius import (
    DEFAULT_ORDER_BOUND,
    ELLIPTIC_FINITE,
    ELLIPTIC_INFINITE,
    HYPERBOLIC,
    IDENTITY,
    Direction,
    MoebiusElement,
    chart,
    classify,
    fixed_points,
    product_type_predict,
    translation_direction,
    translation_length,
    tuple_embed,
)
from .numfield import NumberField

SCHEMA = "1"


def _need_r2(spec):
    if spec.r < 2:
        raise DegreeOne(f"{spec.label or 'spec'} uses a single embedding; r >= 2 is required")


def thread_count(threads=None):
    """Explicit value, else LIMITCONE_THREADS, else 1."""
    if threads:
        return int(threads)
    return int(os.environ.get("LIMITCONE_THREADS", "1") or 1)


# -- parallel map with a deterministic merge -----------------------------------
#
# arb balls do not pickle, so work units cross process boundaries as exact
# JSON-like payloads and results come back as (mantissa, exponent) pairs.


def _enc(x):
    return (x.mid().man_exp(), x.rad().man_exp())


def _dec(p):
    (m, e), (rm, re) = p
    return arb(arf((m, e)), arf((rm, re)))


_WORKER_FIELDS = {}


def _worker_field(fjson):
    key = json.dumps(fjson, sort_keys=True)
    if key not in _WORKER_FIELDS:
        _WORKER_FIELDS[key] = NumberField.from_json(fjson)
    return _WORKER_FIELDS[key]


def _direction_job(args):
    fjson, embeddings, bits, order_bound, items = args
    K = _worker_field(fjson)
    out = []
    for word, rows in items:
        g = MoebiusElement.from_json(K, rows)
        d = _direction_of(g, embeddings, bits, order_bound, word)
        if d is None:
            out.append(None)
        else:
            out.append((d.tag, d.word, [_enc(x) for x in d.coords], [_enc(x) for x in d.lengths], [_enc(x) for x in d.traces]))
    return out


def _fixed_point_job(args):
    fjson, embeddings, bits, order_bound, items = args
    K = _worker_field(fjson)
    out = []
    for word, rows in items:
        g = MoebiusElement.from_json(K, rows)
        p = _torus_point(g, embeddings, bits, order_bound)
        out.append(None if p is None else [_enc(x) for x in p])
    return out


def _chunks(seq, size):
    return [seq[k:k + size] for k in range(0, len(seq), size)]


def _parallel(job, spec, bits, order_bound, run, workers):
    items = [(spec.word_str(w), g.to_json()) for w, g in run if w]
    fjson = spec.field.to_json()
    chunks = _chunks(items, max(1, len(items) // (4 * workers) + 1))
    args = [(fjson, spec.embeddings, bits, order_bound, c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(job, args))
    return [x for part in parts for x in part]


# -- direction clouds and the limit cone ---------------------------------------


def _direction_of(g, embeddings, bits, order_bound, word):
    if g.is_identity():
        return None
    t = tuple_embed(g, embeddings, bits, order_bound, with_factors=False, word=word)
    if not any(c.tag == HYPERBOLIC for c in t.classes):
        return None
    return translation_direction(t, bits)


def direction_cloud(spec, depth, cap=100_000, bits=96, order_bound=DEFAULT_ORDER_BOUND, run=None, threads=None):
    """Directions L(g) of enumerated elements with at least one hyperbolic factor.

    Tags: "hyperbolic" (all factors hyperbolic, samples of P_Gamma) or "mixed"
    (zero coordinates from elliptic factors, points of the limit cone only).
    """
    _need_r2(spec)
    run = run or enumerate_group(spec, depth, cap)
    workers = thread_count(threads)
    if workers > 1:
        raw = _parallel(_direction_job, spec, bits, order_bound, run, workers)
        return [
            Direction(tuple(map(_dec, c)), tuple(map(_dec, ln)), w, tag, tuple(map(_dec, tr)))
            for tag, w, c, ln, tr in (x for x in raw if x is not None)
        ]
    out = []
    for word, g in run:
        d = _direction_of(g, spec.embeddings, bits, order_bound, spec.word_str(word))
        if d is not None:
            out.append(d)
    return out


@dataclass
class ConeReport:
    r: int
    count: int
    hyperbolic_count: int
    mixed_count: int
    halfspace: bool
    violations: list
    ratio_min: float = None
    ratio_max: float = None
    max_gap: float = None
    ratios: list = dc_field(default_factory=list, repr=False)
    hull: dict = dc_field(default_factory=dict)
    meta: dict = dc_field(default_factory=dict)
    undecided: int = 0  # directions whose length balls overlap (equal conjugates)

    @property
    def gaps(self):
        return [b - a for a, b in zip(self.ratios, self.ratios[1:])]

    def histogram(self, bins=20):
        counts, edges = np.histogram(self.ratios, bins=bins, range=(0.0, 1.0))
        return [int(c) for c in counts], [float(e) for e in edges]

    def to_json(self):
        out = {
            "schema": SCHEMA,
            "kind": "cone",
            "r": self.r,
            "count": self.count,
            "hyperbolic_count": self.hyperbolic_count,
            "mixed_count": self.mixed_count,
            "halfspace": self.halfspace,
            "halfspace_violations": self.violations[:20],
            "halfspace_ties": self.undecided,
            "convex": True,
        }
        if self.r == 2:
            counts, edges = self.histogram()
            out.update(
                ratio_min=self.ratio_min,
                ratio_max=self.ratio_max,
                max_gap=self.max_gap,
                histogram={"counts": counts, "edges": edges},
            )
        else:
            out["hull"] = self.hull
        out.update(self.meta)
        return out


def _halfspace_state(d):
    """1 if x_1 >= x_i is certified for all i, -1 if some x_i > x_1 is
    certified, 0 if some pair of length balls still overlaps."""
    first = d.lengths[0]
    state = 1
    for ell in d.lengths[1:]:
        if ell > first:
            return -1
        if not ell <= first:
            state = 0
    return state


def cone_hull(cloud, meta=None):
    """Limit-cone summary of a direction cloud.

    r = 2: ratios x_2/x_1, their range and the largest gap between sorted
    ratios (the hull of points on a segment is the segment, so convexity is
    tested through gap shrinkage across depths).  r >= 3: the cloud is
    lifted to the simplex x_1 + ... + x_r = 1 and handed to a convex hull.
    """
    if not cloud:
        raise EmptyCloud("no directions to summarize")
    r = cloud[0].r
    states = [_halfspace_state(d) for d in cloud]
    violations = [d.word for d, s in zip(cloud, states) if s < 0]
    hyp = sum(1 for d in cloud if d.tag == "hyperbolic")
    report = ConeReport(r, len(cloud), hyp, len(cloud) - hyp, not violations, violations, meta=dict(meta or {}))
    report.undecided = sum(1 for s in states if s == 0)
    if r == 2:
        ratios = sorted(_ratio_float(d) for d in cloud)
        report.ratios = ratios
        report.ratio_min, report.ratio_max = ratios[0], ratios[-1]
        report.max_gap = max(report.gaps, default=0.0)
    else:
        report.hull = _simplex_hull(cloud)
    return report


def _ratio_float(d):
    first = d.lengths[0]
    if first == 0:
        return float("inf")
    return float((d.lengths[1] / first).mid())


def _simplex_hull(cloud):
    from scipy.spatial import ConvexHull, QhullError

    pts = np.array([d.floats() for d in cloud])
    pts = pts / pts.sum(axis=1, keepdims=True)
    flat = pts[:, :-1]
    centred = flat - flat.mean(axis=0)
    dim = int(np.linalg.matrix_rank(centred, tol=1e-12)) if len(flat) > 1 else 0
    info = {"dimension": dim, "points": len(flat)}
    if dim == flat.shape[1] and len(flat) > dim:
        try:
            hull = ConvexHull(flat)
            info.update(vertices=len(hull.vertices), volume=float(hull.volume))
        except QhullError as exc:
            info["error"] = str(exc).splitlines()[0]
    return info


def trace_inequality_violations(spec, run):
    """Words whose first factor is hyperbolic but some |phi_i(tr)| >= |phi_1(tr)|.

    Exact: compares conjugates of tr^2 in the field.
    """
    K = spec.field
    bad = []
    for word, g in run:
        if not word or classify(g, 1).tag != HYPERBOLIC:
            continue
        t2 = g.trace_squared
        for i in spec.embeddings[1:]:
            if K.compare(t2, i, 1) >= 0:
                bad.append(spec.word_str(word))
                break
    return bad


def type_preservation_violations(spec, run, order_bound=DEFAULT_ORDER_BOUND):
    """Check the type table: parabolic -> all parabolic, elliptic of order k
    -> order k everywhere, hyperbolic -> hyperbolic or elliptic of infinite order."""
    bad = []
    for word, g in run:
        if not word:
            continue
        cls = [classify(g, i, order_bound) for i in spec.embeddings]
        head = cls[0]
        if head.tag == IDENTITY:
            ok = all(c.tag == IDENTITY for c in cls)
        elif head.tag == ELLIPTIC_FINITE:
            ok = all(c.tag == ELLIPTIC_FINITE and c.order == head.order for c in cls)
        elif head.tag == HYPERBOLIC:
            ok = all(c.tag in (HYPERBOLIC, ELLIPTIC_INFINITE) for c in cls)
        else:
            ok = all(c.tag == head.tag for c in cls)
        if not ok:
            bad.append((spec.word_str(word), [str(c) for c in cls]))
    return bad


# -- parabolic family ----------------------------------------------------------


@dataclass
class FamilyRow:
    n: int
    trace: object  # FieldElement n A - B
    lengths: list  # arb per embedding
    direction: Direction
    diff: list  # l_1 - l_i
    target: list  # 2 ln(|phi_1(A)| / |phi_i(A)|)
    error: list
    log_approx: list  # 2 ln|phi_i(nA - B)|, cross-check only

    def ratio(self, k=1):
        return self.lengths[k] / self.lengths[0]


@dataclass
class FamilyReport:
    rows: list
    skipped: list  # EmbeddingStillElliptic instances

    @property
    def directions(self):
        return [row.direction for row in self.rows]


def parabolic_family(tr_u, tr_v, n_list, embeddings=None, bits=96):
    """Directions of T_n with tr(T_n) = n (tr_u + tr_v) - tr_u.

    Lengths use l = 2 arcosh(|x|/2) directly; 2 ln|x| is reported beside it
    as a cross-check only.
    """
    K = tr_u.field
    embeddings = tuple(embeddings or range(1, K.degree + 1))
    for t in (tr_u, tr_v):
        if K.sign(t * t - 4, 1) <= 0:
            raise NotHyperbolic("tr_u and tr_v must be hyperbolic traces at the identity embedding")
    A, B = tr_u + tr_v, tr_u
    for i in embeddings:
        if K.sign(A, i) == 0:
            raise ValueError(f"A = tr_u + tr_v vanishes at embedding {i}")
    with ctx.workprec(bits + 64):
        absA = [abs(K.embed(A, i, bits + 32)) for i in embeddings]
        target = [2 * (absA[0] / a).log() for a in absA]
        rows, skipped = [], []
        for n in n_list:
            T = n * A - B
            still = [i for i in embeddings if K.sign(T * T - 4, i) <= 0]
            if still:
                skipped.extend(EmbeddingStillElliptic(n, i) for i in still)
                continue
            x = [K.embed(T, i, bits + 32) for i in embeddings]
            lengths = [2 * (abs(v) / 2).acosh() for v in x]
            top = max(lengths, key=lambda v: float(v.mid()))
            coords = tuple(ell / top for ell in lengths)
            direction = Direction(coords, tuple(lengths), f"T_{n}", "hyperbolic", tuple(x))
            diff = [lengths[0] - ell for ell in lengths]
            err = [abs(dv - tv) for dv, tv in zip(diff, target)]
            approx = [2 * abs(v).log() for v in x]
            rows.append(FamilyRow(n, T, lengths, direction, diff, target, err, approx))
    return FamilyReport(rows, skipped)


# -- torus clouds --------------------------------------------------------------


@dataclass
class TorusCloud:
    points: np.ndarray  # shape (N, r), entries in [0, 1)
    grid: int
    statistic: float
    statistic_name: str
    words: list = dc_field(default_factory=list)
    meta: dict = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.points)

    def to_json(self):
        out = {
            "schema": SCHEMA,
            "points": len(self.points),
            "grid": self.grid,
            "statistic": self.statistic,
            "statistic_name": self.statistic_name,
            "chart": "theta = 1/2 + arctan(x)/pi, inf -> 0",
        }
        out.update(self.meta)
        return out


def occupancy(points, grid):
    """Boolean grid^r array marking cells that contain a point."""
    points = np.asarray(points, dtype=float)
    r = points.shape[1] if points.ndim == 2 else 2
    occ = np.zeros((grid,) * r, dtype=bool)
    if len(points):
        cells = np.minimum(np.floor(points * grid).astype(int), grid - 1) % grid
        occ[tuple(cells.T)] = True
    return occ


def _has_empty_cube(occ, s):
    g = occ.shape[0]
    r = occ.ndim
    wrapped = np.pad(occ.astype(np.int64), [(0, s)] * r, mode="wrap")
    sat = wrapped
    for ax in range(r):
        sat = np.cumsum(sat, axis=ax)
    sat = np.pad(sat, [(1, 0)] * r)
    total = np.zeros((g,) * r, dtype=np.int64)
    for corner in range(1 << r):
        idx, sign = [], 1
        for ax in range(r):
            if corner >> ax & 1:
                idx.append(slice(s, s + g))
            else:
                idx.append(slice(0, g))
                sign = -sign
        total += sign * sat[tuple(idx)]
    if r % 2:
        total = -total
    return bool((total == 0).any())


def max_empty_box(points, grid=64):
    """Side (in units of the torus) of the largest empty axis-aligned cube of
    grid cells, with wrap-around.  1.0 for no points, (grid-1)/grid for one."""
    occ = occupancy(points, grid)
    if not occ.any():
        return 1.0
    lo, hi = 0, grid - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _has_empty_cube(occ, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo / grid


def box_discrepancy(points, grid=64):
    """max over grid-anchored boxes [0, a) x [0, b) of |count/N - a b|."""
    points = np.asarray(points, dtype=float)
    if not len(points):
        raise EmptyCloud("no points")
    hist, _, _ = np.histogram2d(points[:, 0], points[:, 1], bins=grid, range=[[0, 1], [0, 1]])
    frac = hist.cumsum(0).cumsum(1) / len(points)
    ticks = np.arange(1, grid + 1) / grid
    return float(np.abs(frac - np.outer(ticks, ticks)).max())


def _torus_point(g, embeddings, bits, order_bound):
    if g.is_identity():
        return None
    if any(classify(g, i, order_bound).tag != HYPERBOLIC for i in embeddings):
        return None
    return [chart(fixed_points(g, i, bits).attractive, bits) for i in embeddings]


def furstenberg_cloud(spec, depth, cap=100_000, bits=96, grid=64, order_bound=DEFAULT_ORDER_BOUND, run=None, threads=None):
    """Attractive fixed points (in the chart) of all-hyperbolic tuples."""
    _need_r2(spec)
    run = run or enumerate_group(spec, depth, cap)
    workers = thread_count(threads)
    if workers > 1:
        raw = _parallel(_fixed_point_job, spec, bits, order_bound, run, workers)
        words = [spec.word_str(w) for w, _ in run if w]
        pairs = [(w, [_dec(x) for x in p]) for w, p in zip(words, raw) if p is not None]
    else:
        pairs = []
        for word, g in run:
            p = _torus_point(g, spec.embeddings, bits, order_bound)
            if p is not None:
                pairs.append((spec.word_str(word), p))
    pts = np.array([[float(x.mid()) % 1.0 for x in p] for _, p in pairs]).reshape(-1, spec.r)
    stat = max_empty_box(pts, grid)
    meta = {"depth": depth, "cap": cap, "bits": bits, "order_bound": order_bound, "elements": len(run), "truncated": run.truncated}
    return TorusCloud(pts, grid, stat, "max_empty_box_side", [w for w, _ in pairs], meta)


def rotation_number(trace, bits=96):
    """theta = arccos(t/2)/pi for an elliptic trace ball |t| < 2."""
    with ctx.workprec(bits + 32):
        return (trace / 2).acos() / arb.pi()


def torus_orbit(alpha, beta, N, grid=64):
    """Orbit {(n alpha mod 1, n beta mod 1) : 1 <= n <= N} and its discrepancy."""
    if N < 1:
        raise ValueError("N must be >= 1")
    a = float(alpha.mid()) if isinstance(alpha, arb) else float(alpha)
    b = float(beta.mid()) if isinstance(beta, arb) else float(beta)
    n = np.arange(1, N + 1, dtype=np.float64)
    pts = np.column_stack([np.mod(n * a, 1.0), np.mod(n * b, 1.0)])
    stat = box_discrepancy(pts, grid)
    return TorusCloud(pts, grid, stat, "box_discrepancy", meta={"alpha": a, "beta": b, "N": N})


# -- Zariski density -----------------------------------------------------------


@dataclass
class ZariskiReport:
    verdict: str  # "Dense", "NotDense" or "Inconclusive"
    witnesses: dict  # embedding index -> witness trace (FieldElement) or None
    depth: int
    sampled: int
    proof: bool  # True when the verdict is a proof rather than depth-limited evidence
    note: str = ""
    meta: dict = dc_field(default_factory=dict)

    def to_json(self):
        wit = {}
        for i, t in self.witnesses.items():
            wit[str(i)] = None if t is None else {"trace": t.to_json(), "identity_value": float(t), "conjugate_value": t.field.approx(t, i)}
        out = {
            "schema": SCHEMA,
            "kind": "zariski",
            "verdict": self.verdict,
            "proof": self.proof,
            "witnesses": wit,
            "depth": self.depth,
            "sampled_traces": self.sampled,
            "note": self.note,
        }
        out.update(self.meta)
        return out


def zariski_check(spec, depth, cap=100_000, run=None):
    """Dense iff each used embedding phi_i != id moves some sampled tr(g^2).

    A moving trace is a proof of density; the absence of one is evidence at
    this depth only, unless the group is diagonal by construction.
    """
    _need_r2(spec)
    K = spec.field
    run = run or enumerate_group(spec, depth, cap)
    traces = sorted(invariant_traces(spec, depth, cap, run=run), key=lambda t: (t.den, t.num))
    pending = list(spec.embeddings[1:])
    witnesses = {i: None for i in pending}
    for t in traces:
        if not pending:
            break
        if t.is_rational():
            continue
        fixed = K.conjugate_class(t, 1)
        for i in list(pending):
            if i not in fixed:
                witnesses[i] = t
                pending.remove(i)
    meta = {"depth": depth, "cap": cap, "truncated": run.truncated, "embeddings": list(spec.embeddings)}
    if not pending:
        return ZariskiReport("Dense", witnesses, depth, len(traces), True, "every used embedding moves a sampled invariant trace", meta)
    note = f"embeddings {pending} fix every sampled invariant trace"
    if spec.diagonal:
        return ZariskiReport("NotDense", witnesses, depth, len(traces), True, note + "; diagonal by construction", meta)
    if len(traces) < 2:
        return ZariskiReport("Inconclusive", witnesses, depth, len(traces), False, "too few traces sampled", meta)
    return ZariskiReport("NotDense", witnesses, depth, len(traces), False, note + f" (evidence at depth {depth}, not a proof)", meta)


# -- mixed witnesses -----------------------------------------------------------

_PATTERN_ALIASES = {
    "hyp": HYPERBOLIC,
    "hyperbolic": HYPERBOLIC,
    "ellinf": ELLIPTIC_INFINITE,
    "ellipticinfinite": ELLIPTIC_INFINITE,
}


def _normalize_pattern(pattern, r):
    out = []
    for p in pattern:
        key = str(p).replace("_", "").replace("-", "").lower()
        if key not in _PATTERN_ALIASES:
            raise ValueError(f"pattern entries are Hyp or EllInf, got {p!r}")
        out.append(_PATTERN_ALIASES[key])
    if len(out) != r:
        raise ValueError(f"pattern length {len(out)} != r = {r}")
    return out


def _matches(g, spec, pattern, order_bound):
    if g.is_identity():
        return False
    # cheap exact sign tests before any order search
    for i, want in zip(spec.embeddings, pattern):
        s = spec.field.sign(g.trace_squared - 4, i)
        if (want == HYPERBOLIC) != (s > 0) or s == 0:
            return False
    return all(classify(g, i, order_bound).tag == want for i, want in zip(spec.embeddings, pattern))


def find_mixed_witness(spec, pattern, budget=2000, depth=6, cap=20_000, bits=96, order_bound=DEFAULT_ORDER_BOUND):
    """Element whose tuple classes match ``pattern`` (entries Hyp / EllInf).

    First scans the enumeration in BFS order, then products g^m h with g
    elliptic where the pattern wants elliptic factors and h all-hyperbolic,
    m = 1, 2, ...; the geometric predictor screens each elliptic slot before
    exact classification.  ``budget`` bounds the number of products tried.
    """
    pattern = _normalize_pattern(pattern, spec.r)
    run = enumerate_group(spec, depth, cap)
    for word, g in run:
        if _matches(g, spec, pattern, order_bound):
            return tuple_embed(g, spec.embeddings, bits, order_bound, word=spec.word_str(word))
    ell_slots = [i for i, want in zip(spec.embeddings, pattern) if want == ELLIPTIC_INFINITE]
    K = spec.field
    elliptic = [(w, g) for w, g in run if w and all(K.sign(g.trace_squared - 4, i) < 0 for i in ell_slots)]
    hyper = [(w, g) for w, g in run if w and all(K.sign(g.trace_squared - 4, i) > 0 for i in spec.embeddings)]
    tried = 0
    m = 1
    while tried < budget and elliptic and hyper:
        for we, e in elliptic:
            em = e ** m
            if em.is_identity():
                continue
            for wh, h in hyper:
                if tried >= budget:
                    break
                tried += 1
                screen = all(
                    classify(em, i).is_elliptic and product_type_predict(em, h, i, bits) == "Elliptic"
                    for i in ell_slots
                )
                if not screen:
                    continue
                g = em * h
                if _matches(g, spec, pattern, order_bound):
                    word = f"({spec.word_str(we)})^{m} {spec.word_str(wh)}"
                    return tuple_embed(g, spec.embeddings, bits, order_bound, word=word)
            if tried >= budget:
                break
        m += 1
    raise NotFound(budget, f"no element with pattern {pattern} (budget {budget}, depth {depth})")


# -- export --------------------------------------------------------------------


def _num(x):
    if isinstance(x, arb):
        return repr(float(x.mid()))
    return repr(float(x))


def write_direction_csv(cloud, path):
    """Columns: word, tag, trace_i, length_i, coord_i for i = 1..r."""
    r = cloud[0].r if cloud else 0
    header = ["word", "tag"] + [f"trace_{k}" for k in range(1, r + 1)] + [f"length_{k}" for k in range(1, r + 1)] + [f"coord_{k}" for k in range(1, r + 1)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for d in cloud:
            w.writerow([d.word, d.tag] + [_num(x) for x in d.traces] + [_num(x) for x in d.lengths] + [_num(x) for x in d.coords])


def write_torus_csv(cloud, path):
    """Columns: word (blank for orbits), theta_i for i = 1..r."""
    r = cloud.points.shape[1] if len(cloud.points) else 0
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["word"] + [f"theta_{k}" for k in range(1, r + 1)])
        words = cloud.words or [""] * len(cloud.points)
        for word, p in zip(words, cloud.points):
            w.writerow([word] + [repr(float(x)) for x in p])


def write_family_csv(report, path):
    """Columns: n, then per embedding length_i, coord_i, diff_i, target_i, error_i, log_approx_i."""
    if not report.rows:
        raise EmptyCloud("no rows")
    r = len(report.rows[0].lengths)
    cols = ["length", "coord", "diff", "target", "error", "log_approx"]
    header = ["n"] + [f"{c}_{k}" for c in cols for k in range(1, r + 1)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in report.rows:
            vals = [row.lengths, row.direction.coords, row.diff, row.target, row.error, row.log_approx]
            w.writerow([row.n] + [_num(x) for col in vals for x in col])
