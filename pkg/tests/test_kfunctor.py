from math import comb

import pytest

from minorbit.kfunctor import (
    KN,
    KNPRIME,
    AmbiguousConnectingMap,
    Ch,
    F,
    JP,
    OY,
    _cone_profile,
    chi_jp_class,
    chi_jp_oy,
    ext_profile,
    euler_chi,
    flop_flop_check,
    identity_matrix,
    jp_jp_assumes_collapse,
    kclass_jp,
    kclass_jpdual,
    kn0_image_table,
    kn_matrix,
    matmul,
    oe_pushforward_class,
    ptwist_ledger_check,
    reduce_line,
    reduce_to_window,
    twist_matrix,
    zero_class,
)


def test_reduce_line_examples():
    for n in (2, 3, 4):
        for a in range(n):
            vec = [0] * n
            vec[a] = 1
            assert reduce_line(a, n).coords == tuple(vec)
    assert reduce_line(2, 2).coords == (-1, 2)
    assert reduce_line(-1, 3).coords == (3, -3, 1)


def test_koszul_vector_dies():
    for n in (2, 3, 4, 5):
        for a in (-1, 0, 3, n + 2):
            total = zero_class(n)
            for i in range(n + 1):
                total = total + reduce_line(a - i, n).scale((-1) ** i * comb(n, i))
            assert total.coords == (0,) * n


def test_reduce_to_window_is_twist_invariant():
    assert reduce_to_window(0, 2, 1) == {1: 2, 2: -1}
    for n in (2, 3):
        for base in (-2, 0, 1):
            for a in range(base, base + n):
                assert reduce_to_window(a, n, base) == {a: 1}


def test_kclass_jp_n2():
    assert kclass_jp(0, 2).coords == (2, -2)


def test_kclass_jp_euler_pairing():
    for n in range(2, 7):
        for b in (-1, 0, 1, 3):
            assert chi_jp_class(b, kclass_jp(b, n)) == n


def test_kn_matrix_window_rule():
    # inside the window the functor just negates the twist
    for n in (2, 3, 4):
        for k in (0, 1, -1):
            M = kn_matrix(k, n, KN)
            for a in range(-n + k + 1, k + 1):
                src = reduce_line(a, n)
                img = tuple(
                    sum(M[i][j] * src.coords[j] for j in range(n)) for i in range(n)
                )
                assert img == reduce_line(-a, n).coords, (n, k, a)


def test_kn_inverse_pairs():
    for n in range(2, 6):
        for k in range(-n, n + 1):
            assert matmul(
                kn_matrix(k, n, KN), kn_matrix(n - k - 1, n, KNPRIME)
            ) == identity_matrix(n)
            assert matmul(
                kn_matrix(n - k - 1, n, KNPRIME), kn_matrix(k, n, KN)
            ) == identity_matrix(n)


def test_twist_intertwining_square():
    for n in (2, 3, 4):
        for k in range(-3, 4):
            assert matmul(twist_matrix(n, -1), kn_matrix(k, n)) == matmul(
                kn_matrix(k + 1, n), twist_matrix(n, 1)
            )


def test_flop_flop_identity():
    for n in range(2, 6):
        for k in range(-n, n + 1):
            assert flop_flop_check(k, n).passed


def test_ext_profile_ledger_anchor_values():
    for n in (3, 4, 5):
        for b in range(0, n - 1):
            assert ext_profile(JP(-1), OY(b), n) == {}
        assert ext_profile(JP(-1), OY(-1), n) == {2 * n - 2: 1}
        assert ext_profile(JP(-1), Ch, n) == {0: 1, 2 * n - 1: 1}
        assert ext_profile(JP(-1), F, n) == {0: 1}


def test_ext_profile_self():
    for n in range(2, 7):
        for b in (-2, 0, 1):
            assert ext_profile(JP(b), JP(b), n) == {2 * q: 1 for q in range(n)}


def test_ext_profile_serre_symmetry():
    # Ext^i(JP(c), OY(b)) = Ext^{2n-2-i}(OY(b), JP(c)) on the 2n-2
    # dimensional total space with trivial canonical bundle
    for n in (3, 4):
        for c in (-2, -1, 1):
            for b in (-1, 0, 2):
                left = ext_profile(JP(c), OY(b), n)
                right = ext_profile(OY(b), JP(c), n)
                assert left == {2 * n - 2 - k: v for k, v in right.items()}


def test_ext_profile_jp_jp_serre_symmetry():
    # duality on the 2n-2 dimensional total space pairs the profiles of
    # the two orders of a zero-section pair
    for n in (3, 4):
        for b in (-2, 0, 1):
            for c in (-1, 0, 3):
                left = ext_profile(JP(b), JP(c), n)
                right = ext_profile(JP(c), JP(b), n)
                assert left == {2 * n - 2 - k: v for k, v in right.items()}


def test_ext_profile_euler_vs_k_lattice():
    for n in (3, 4, 5):
        for b in (-2, 0, 1):
            for c in (-1, 0, 2):
                prof = ext_profile(JP(b), JP(c), n)
                assert euler_chi(prof) == chi_jp_class(b, kclass_jp(c, n))
                assert jp_jp_assumes_collapse(b, c) == (b != c)


def test_euler_bilinearity_on_koszul_vector():
    for n in (3, 4):
        for b in (-1, 0, 2):
            for a0 in (-2, 0, 3):
                s = sum(
                    (-1) ** i * comb(n, i) * chi_jp_oy(b, a0 - i, n)
                    for i in range(n + 1)
                )
                assert s == 0


def test_unsupported_pairs_raise():
    with pytest.raises(ValueError):
        ext_profile(OY(0), OY(1), 3)
    with pytest.raises(ValueError):
        ext_profile(JP(0), Ch, 3)


def test_kclass_side_mismatch_raises():
    with pytest.raises(ValueError):
        reduce_line(0, 3, "Y") + reduce_line(0, 3, "Yplus")
    with pytest.raises(ValueError):
        reduce_line(0, 3) + reduce_line(0, 4)


def test_cone_profile_ambiguity_guard():
    with pytest.raises(AmbiguousConnectingMap):
        _cone_profile({0: 2}, {0: 2})


def test_oe_pushforward_facts():
    for n in (3, 4, 5):
        for k in range(1, n - 1):
            assert oe_pushforward_class(k, n) is None
        top = oe_pushforward_class(n - 1, n)
        assert top is not None
        assert top.coords == kclass_jpdual(-n, n).scale((-1) ** (n - 2)).coords


def test_kn0_image_table():
    for n in (2, 3, 4, 5):
        rows = kn0_image_table(n)
        assert [r.a for r in rows] == list(range(-n + 1, 1))
        assert all(r.ok for r in rows)


def test_ptwist_ledger():
    for n in (3, 4, 5):
        rep = ptwist_ledger_check(n)
        assert rep.passed, rep.failing_step
        names = [s.name for s in rep.steps]
        assert "against-cone" in names and "twisted-class" in names
        d = rep.as_dict()
        assert d["pass"] is True
    with pytest.raises(ValueError):
        ptwist_ledger_check(2)
