import itertools
import math

import mpmath
import numpy as np
import pytest
from flint import arb
from hypothesis import given, strategies as st

from limitcone.errors import DegreeOne, EmptyCloud, NotFound, NotHyperbolic
from limitcone.groups import enumerate_group, hecke_group, parse_polynomial, pslz_diagonal
from limitcone.limits import (
    box_discrepancy,
    cone_hull,
    direction_cloud,
    find_mixed_witness,
    furstenberg_cloud,
    max_empty_box,
    parabolic_family,
    rotation_number,
    torus_orbit,
    trace_inequality_violations,
    type_preservation_violations,
    write_direction_csv,
    write_family_csv,
    write_torus_csv,
    zariski_check,
)
from limitcone.moebius import ELLIPTIC_INFINITE, HYPERBOLIC, Direction


@pytest.fixture(scope="module")
def h5():
    return hecke_group(5)


@pytest.fixture(scope="module")
def diag():
    return pslz_diagonal(parse_polynomial("x^2-5"))


def _dir(*coords):
    balls = tuple(arb(c) for c in coords)
    return Direction(balls, balls, "", "hyperbolic" if all(coords) else "mixed")


# -- cones ------------------------------------------------------------------------------


def test_cone_hull_trivial_examples():
    rep = cone_hull([_dir(1, 1)])
    assert (rep.ratio_min, rep.ratio_max) == (1.0, 1.0)
    rep = cone_hull([_dir(1, 0), _dir(1, 1)])
    assert (rep.ratio_min, rep.ratio_max, rep.max_gap) == (0.0, 1.0, 1.0)
    assert rep.mixed_count == 1 and rep.halfspace
    with pytest.raises(EmptyCloud):
        cone_hull([])


def test_cone_hull_detects_halfspace_violation():
    rep = cone_hull([_dir(1, 0.5), Direction((arb(0.5), arb(1)), (arb(1), arb(2)), "bad", "hyperbolic")])
    assert not rep.halfspace and rep.violations == ["bad"]


def test_cone_hull_three_dimensional():
    cloud = [_dir(1, 0.2, 0.3), _dir(1, 0.9, 0.1), _dir(1, 0.5, 0.8), _dir(1, 0.6, 0.5)]
    rep = cone_hull(cloud)
    assert rep.hull["dimension"] == 2
    assert rep.hull["vertices"] == 3


def test_hecke5_direction_cloud(h5):
    cloud = direction_cloud(h5, 8)
    ratios = [float(d.ratio().mid()) for d in cloud if d.tag == "hyperbolic"]
    expected = math.acosh(math.sqrt(5) - 1) / math.acosh(1 + math.sqrt(5))  # T^4 S
    assert any(abs(r - expected) < 1e-12 for r in ratios)
    assert any(d.tag == "mixed" and d.coords[1] == 0 for d in cloud)
    rep = cone_hull(cloud)
    assert rep.halfspace and 0 <= rep.ratio_min <= rep.ratio_max <= 1


def test_diagonal_directions_are_exactly_one_one(diag):
    cloud = direction_cloud(diag, 6)
    assert cloud and all(d.coords[0] == 1 and d.coords[1] == 1 for d in cloud)


def test_degree_one_rejected():
    with pytest.raises(DegreeOne):
        direction_cloud(hecke_group(3), 3)
    with pytest.raises(DegreeOne):
        zariski_check(hecke_group(3), 3)


def test_cone_refinement(h5):
    reps = [cone_hull(direction_cloud(h5, d)) for d in (6, 8, 10)]
    for a, b in zip(reps, reps[1:]):
        assert b.ratio_min <= a.ratio_min and b.ratio_max >= a.ratio_max
        assert b.max_gap <= a.max_gap
        assert b.gaps and max(b.gaps) == b.max_gap


def test_parallel_cloud_matches_serial(h5):
    serial = direction_cloud(h5, 5, threads=1)
    parallel = direction_cloud(h5, 5, threads=2)
    assert [d.word for d in serial] == [d.word for d in parallel]
    assert [d.floats() for d in serial] == [d.floats() for d in parallel]


def test_exact_invariants_small_depth(h5):
    run = enumerate_group(h5, 7)
    assert type_preservation_violations(h5, run) == []
    assert trace_inequality_violations(h5, run) == []


# -- parabolic family ---------------------------------------------------------------------


def test_parabolic_family_formula(h5):
    lam = h5.field.gen
    fam = parabolic_family(4 * lam, 4 * lam, [1, 10, 1000])
    for row in fam.rows:
        assert row.trace == (8 * row.n - 4) * lam
    with mpmath.workdps(40):
        phi = (1 + mpmath.sqrt(5)) / 2
        target = float(2 * mpmath.log(phi / (phi - 1)))
    assert float(fam.rows[0].target[1].mid()) == pytest.approx(target, abs=1e-14)
    assert float(fam.rows[-1].error[1].mid()) < 1e-6
    # n = 1 is T^4 S
    assert float(fam.rows[0].ratio().mid()) == pytest.approx(0.36591, abs=1e-5)


def test_parabolic_family_skips_elliptic_embeddings(h5):
    lam = h5.field.gen
    fam = parabolic_family(lam + 1, lam + 1, [1, 2, 3, 4, 5])
    assert [e.n for e in fam.skipped] == [1, 2, 3]
    assert all(e.index == 2 for e in fam.skipped)
    assert [row.n for row in fam.rows] == [4, 5]


def test_parabolic_family_requires_hyperbolic(h5):
    with pytest.raises(NotHyperbolic):
        parabolic_family(h5.field(1), h5.field(3), [1])


def test_parabolic_family_csv(tmp_path, h5):
    lam = h5.field.gen
    fam = parabolic_family(4 * lam, 4 * lam, [1, 2])
    write_family_csv(fam, tmp_path / "f.csv")
    lines = (tmp_path / "f.csv").read_text().splitlines()
    assert lines[0].startswith("n,length_1,length_2,coord_1")
    assert len(lines) == 3


# -- torus statistics ------------------------------------------------------------------------


def _brute_empty_side(points, g):
    occ = set()
    for x, y in points:
        occ.add((min(int(x * g), g - 1), min(int(y * g), g - 1)))
    if not occ:
        return 1.0
    best = 0
    for s in range(1, g):
        found = any(
            all(((x0 + i) % g, (y0 + j) % g) not in occ for i in range(s) for j in range(s))
            for x0 in range(g)
            for y0 in range(g)
        )
        if not found:
            break
        best = s
    return best / g


points2 = st.lists(st.tuples(st.floats(0, 0.999), st.floats(0, 0.999)), min_size=0, max_size=12)


@given(points2)
def test_max_empty_box_matches_brute_force(pts):
    assert max_empty_box(np.array(pts).reshape(-1, 2), 8) == _brute_empty_side(pts, 8)


@given(points2, st.tuples(st.floats(0, 0.999), st.floats(0, 0.999)))
def test_max_empty_box_monotone(pts, extra):
    before = max_empty_box(np.array(pts).reshape(-1, 2), 16)
    after = max_empty_box(np.array(pts + [extra]).reshape(-1, 2), 16)
    assert after <= before


def test_max_empty_box_edge_cases():
    assert max_empty_box(np.zeros((0, 2)), 64) == 1.0
    assert max_empty_box(np.array([[0.3, 0.7]]), 64) == 63 / 64
    diagonal = np.array([[k / 64 + 0.001, k / 64 + 0.001] for k in range(64)])
    assert max_empty_box(diagonal, 64) == 0.5
    cube = np.array([[0.1, 0.1, 0.1]])
    assert max_empty_box(cube, 8) == 7 / 8


def _brute_discrepancy(points, g):
    n = len(points)
    best = 0.0
    for a, b in itertools.product(range(1, g + 1), repeat=2):
        inside = sum(1 for x, y in points if x < a / g and y < b / g)
        best = max(best, abs(inside / n - a * b / g / g))
    return best


@given(st.lists(st.tuples(st.floats(0, 0.999), st.floats(0, 0.999)), min_size=1, max_size=20))
def test_box_discrepancy_matches_brute_force(pts):
    # grid-aligned points avoid cell-boundary ambiguity between the two counts
    pts = [(int(x * 8) / 8 + 1 / 16, int(y * 8) / 8 + 1 / 16) for x, y in pts]
    assert box_discrepancy(np.array(pts), 8) == pytest.approx(_brute_discrepancy(pts, 8), abs=1e-12)


def test_torus_orbit_examples():
    same = torus_orbit(0.35604, 0.35604, 10_000)
    assert np.all(same.points[:, 0] == same.points[:, 1])
    assert same.statistic >= 0.2
    half = torus_orbit(0.5, 0.43878, 1000)
    assert set(np.round(half.points[:, 0], 12)) == {0.0, 0.5}
    assert torus_orbit(0.35604, 0.43878, 100_000).statistic <= 0.02
    with pytest.raises(ValueError):
        torus_orbit(0.1, 0.2, 0)


def test_rotation_number():
    assert float(rotation_number(arb(0)).mid()) == pytest.approx(0.5)
    assert float(rotation_number(arb(1)).mid()) == pytest.approx(1 / 3)


def test_furstenberg_clouds(h5, diag, tmp_path):
    small = furstenberg_cloud(h5, 6)
    big = furstenberg_cloud(h5, 9)
    assert len(big) > len(small) > 0
    assert big.statistic <= small.statistic
    assert np.all((big.points >= 0) & (big.points < 1))
    d = furstenberg_cloud(diag, 8)
    assert np.allclose(d.points[:, 0], d.points[:, 1])
    assert d.statistic >= 0.5
    write_torus_csv(d, tmp_path / "t.csv")
    assert (tmp_path / "t.csv").read_text().splitlines()[0] == "word,theta_1,theta_2"


# -- Zariski density ----------------------------------------------------------------------


def test_zariski_examples(h5, diag):
    rep = zariski_check(h5, 4)
    assert rep.verdict == "Dense" and rep.proof
    w = rep.witnesses[2]
    assert w == h5.field.gen - 1
    assert h5.field.approx(w, 2) != pytest.approx(h5.field.approx(w, 1))
    rep = zariski_check(diag, 8)
    assert rep.verdict == "NotDense" and rep.proof and rep.witnesses[2] is None


def test_zariski_not_dense_is_evidence_without_diagonal_flag(diag):
    import copy

    spec = copy.copy(diag)
    spec.diagonal = False
    rep = zariski_check(spec, 6)
    assert rep.verdict == "NotDense" and not rep.proof
    assert "not a proof" in rep.note
    assert zariski_check(spec, 0).verdict == "Inconclusive"


def test_zariski_json(h5):
    doc = zariski_check(h5, 4).to_json()
    assert doc["schema"] == "1" and doc["verdict"] == "Dense"
    assert doc["witnesses"]["2"]["trace"] == ["-1", "1"]


# -- mixed witnesses ------------------------------------------------------------------------


def test_find_mixed_witness(h5):
    t = find_mixed_witness(h5, ["Hyp", "EllInf"])
    S, T = h5.generators["S"], h5.generators["T"]
    assert [c.tag for c in t.classes] == [HYPERBOLIC, ELLIPTIC_INFINITE]
    assert t.source.trace_squared == (T * T * S).trace_squared
    assert len(t.word.split()) == 2  # S T^2: three letters
    t = find_mixed_witness(h5, ["Hyp", "Hyp"])
    assert [c.tag for c in t.classes] == [HYPERBOLIC, HYPERBOLIC]


def test_find_mixed_witness_exhausts(h5):
    with pytest.raises(NotFound) as info:
        find_mixed_witness(h5, ["EllInf", "Hyp"], budget=50, depth=4)
    assert info.value.budget == 50
    with pytest.raises(ValueError):
        find_mixed_witness(h5, ["Hyp"])
    with pytest.raises(ValueError):
        find_mixed_witness(h5, ["Hyp", "Parabolic"])


def test_direction_csv(tmp_path, h5):
    cloud = direction_cloud(h5, 4)
    write_direction_csv(cloud, tmp_path / "a.csv")
    write_direction_csv(cloud, tmp_path / "b.csv")
    a = (tmp_path / "a.csv").read_bytes()
    assert a == (tmp_path / "b.csv").read_bytes()
    assert a.splitlines()[0] == b"word,tag,trace_1,trace_2,length_1,length_2,coord_1,coord_2"
