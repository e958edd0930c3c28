from fractions import Fraction as Q
from random import Random

import pytest

from minorbit.repmoduli import (
    GF,
    Rep,
    RepTriple,
    check_relations,
    generated_by,
    is_simple,
    random_triple,
    rep_from_triple,
    reps_isomorphic,
    run_battery,
    to_point,
    triple_from_rep,
)


def q(*xs):
    return tuple(Q(x) for x in xs)


def test_triple_validation():
    with pytest.raises(ValueError):
        RepTriple(2, q(0, 0), q(1, 0))
    with pytest.raises(ValueError):
        RepTriple(2, q(1, 0), q(1, 0))  # pairing 1
    RepTriple(2, q(1, 1), q(1, -1))


def test_base_point():
    n = 4
    t = RepTriple(n, q(0, 0, 0, 1), q(1, 0, 0, 0))
    r = rep_from_triple(t)
    assert check_relations(r).passed
    assert is_simple(r)
    pt = to_point(r)
    assert pt.X[n - 1][0] == 1
    assert sum(1 for row in pt.X for x in row if x) == 1


def test_zero_beta_not_simple():
    t = RepTriple(3, q(1, 0, 0), q(0, 0, 0))
    r = rep_from_triple(t)
    assert check_relations(r).passed
    assert not is_simple(r)
    assert generated_by(r, 0)
    pt = to_point(r)
    assert all(x == 0 for row in pt.X for x in row)


def test_n2_explicit_triple():
    t = RepTriple(2, q(1, 1), q(1, -1))
    r = rep_from_triple(t)
    assert check_relations(r).passed
    assert r.f(0, 1) == 1 and r.f(0, 2) == 1
    assert r.v(1, 1) == 1 and r.v(1, 2) == -1


def test_hand_built_violation():
    bad = Rep(2, ((Q(1), Q(0)),), ((Q(1), Q(0)),))
    chk = check_relations(bad)
    assert not chk.passed
    assert chk.relation.startswith("trace")


def test_generated_by_closure():
    # v arrows all zero: nothing below the top is reachable from W_{n-1}
    r = rep_from_triple(RepTriple(3, q(1, 2, 0), q(0, 0, 0)))
    assert generated_by(r, 0)
    assert not generated_by(r, 2)


def test_round_trip_exact():
    rng = Random(7)
    for n in range(2, 6):
        for _ in range(50):
            t = random_triple(n, rng)
            r = rep_from_triple(t)
            t2 = triple_from_rep(r)
            assert t2.alpha == t.alpha and t2.beta == t.beta


def test_rescaling_invariance():
    t = RepTriple(3, q(1, 2, 1), q(2, -1, 0))
    r = rep_from_triple(t)
    c = Q(5, 3)
    t2 = RepTriple(3, tuple(a * c for a in t.alpha), tuple(b / c for b in t.beta))
    r2 = rep_from_triple(t2)
    assert is_simple(r) == is_simple(r2)
    assert to_point(r).X == to_point(r2).X
    assert to_point(r).line == to_point(r2).line


def test_isomorphism_detects_gauge():
    t = RepTriple(3, q(1, 2, 1), q(2, -1, 0))
    r = rep_from_triple(t)
    # rescale internal spaces: an isomorphic but unequal representation
    # gauge scalars c = (1, 2, 6): f layers scale by 2 and 3, v layers by
    # the reciprocals 1/2 and 1/3
    scaled = Rep(
        3,
        (tuple(2 * x for x in r.f_scalars[0]), tuple(3 * x for x in r.f_scalars[1])),
        (tuple(x / 2 for x in r.v_scalars[0]), tuple(x / 3 for x in r.v_scalars[1])),
    )
    assert check_relations(scaled).passed
    assert reps_isomorphic(scaled, r)
    assert not reps_isomorphic(rep_from_triple(RepTriple(3, q(1, 0, 0), q(0, 1, 0))), r)


def test_x_square_zero_and_rank():
    rng = Random(3)
    for _ in range(100):
        t = random_triple(4, rng)
        pt = to_point(rep_from_triple(t))
        n = 4
        for i in range(n):
            for j in range(n):
                assert sum(pt.X[i][k] * pt.X[k][j] for k in range(n)) == 0
        rank_one = any(any(row) for row in pt.X)
        assert rank_one == any(t.beta)


def test_dual_convention_transpose():
    # swapping the roles of alpha and beta (the mirror moduli) transposes X
    rng = Random(9)
    for _ in range(50):
        t = random_triple(3, rng)
        if not any(t.beta):
            continue
        mirrored = RepTriple(3, t.beta, t.alpha)
        X = to_point(rep_from_triple(t)).X
        Xm = to_point(rep_from_triple(mirrored)).X
        assert all(
            Xm[i][j] == X[j][i] for i in range(3) for j in range(3)
        )


def test_gf_fuzz():
    gf = lambda v: GF(10007, v)
    rng = Random(17)
    for n in (2, 3, 4):
        for _ in range(25):
            t = random_triple(n, rng, field=gf)
            r = rep_from_triple(t)
            assert check_relations(r).passed
            assert is_simple(r) == any(t.beta)


def test_battery_smoke():
    for n in (2, 5):
        rep = run_battery(n, 100, seed=42)
        assert rep.passed, rep.failures
