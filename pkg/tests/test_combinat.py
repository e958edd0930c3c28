from itertools import product

import pytest

from minorbit.combinat import (
    dim_sym,
    dim_wedge,
    lr_product,
    normalize_partition,
    weyl_dim,
)


def all_partitions(size, max_rows=None):
    if size == 0:
        yield ()
        return
    def rec(rem, maxpart, acc):
        if rem == 0:
            yield tuple(acc)
            return
        for p in range(min(rem, maxpart), 0, -1):
            if max_rows is not None and len(acc) == max_rows:
                return
            yield from rec(rem - p, p, acc + [p])
    yield from rec(size, size, [])


def test_dim_sym_examples():
    assert dim_sym(3, 2) == 6
    assert dim_sym(2, 0) == 1
    assert dim_sym(5, -1) == 0


def test_dim_wedge_examples():
    assert dim_wedge(4, 2) == 6
    assert dim_wedge(3, 0) == 1
    assert dim_wedge(3, 5) == 0


def test_pascal_recurrence():
    for n in range(2, 7):
        for k in range(1, 10):
            assert dim_sym(n, k) == dim_sym(n - 1, k) + dim_sym(n, k - 1)


def test_weyl_dim_examples():
    assert weyl_dim(3, (1, 0, 0)) == 3
    assert weyl_dim(3, (2, 1, 0)) == 8
    for k in range(6):
        assert weyl_dim(2, (k, 0)) == k + 1


def test_weyl_dim_shift_invariance():
    for lam in [(3, 1, 0), (2, 2, 1), (0, -1, -4), (5, 0, 0)]:
        base = weyl_dim(3, lam)
        for c in (-3, -1, 1, 7):
            assert weyl_dim(3, tuple(x + c for x in lam)) == base


def test_weyl_dim_rejects_non_decreasing():
    with pytest.raises(ValueError):
        weyl_dim(3, (0, 1, 0))


def test_partition_normalization():
    assert normalize_partition((3, 1, 0, 0)) == (3, 1)
    assert normalize_partition(()) == ()
    with pytest.raises(ValueError):
        normalize_partition((1, 2))


def test_lr_examples():
    assert lr_product((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_product((1, 1), (1,)) == {(2, 1): 1, (1, 1, 1): 1}
    assert lr_product((), (3, 1)) == {(3, 1): 1}


def test_lr_symmetric():
    shapes = [(), (1,), (2,), (1, 1), (2, 1), (3,)]
    for lam, mu in product(shapes, repeat=2):
        assert lr_product(lam, mu) == lr_product(mu, lam)


def test_lr_sizes_add_up():
    for lam, mu in product([(2, 1), (1, 1, 1), (3,)], repeat=2):
        total = sum(lam) + sum(mu)
        for nu, c in lr_product(lam, mu).items():
            assert c >= 1
            assert sum(nu) == total


def test_lr_pieri_rule():
    # multiplying by a single row gives horizontal strips, multiplicity one
    for lam in [(2, 1), (3, 1, 1), (2, 2)]:
        for k in range(1, 5):
            prod = lr_product(lam, (k,))
            for nu, c in prod.items():
                assert c == 1
                padded = tuple(lam) + (0,) * (len(nu) - len(lam))
                assert all(nu[i] >= padded[i] for i in range(len(nu)))
                assert all(
                    nu[i + 1] <= padded[i] for i in range(len(nu) - 1)
                )


def test_dimension_additivity_exhaustive():
    # dim(S_lam) * dim(S_mu) = sum of multiplicities times dims, GL_m, m <= 4
    for m in range(2, 5):
        for total in range(0, 7):
            for s1 in range(total + 1):
                for lam in all_partitions(s1, max_rows=m):
                    for mu in all_partitions(total - s1, max_rows=m):
                        lhs = weyl_dim(m, lam) * weyl_dim(m, mu)
                        rhs = sum(
                            c * weyl_dim(m, nu)
                            for nu, c in lr_product(lam, mu, max_rows=m).items()
                        )
                        assert lhs == rhs, (m, lam, mu)
