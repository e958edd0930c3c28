"""Exact combinatorial kernel.

Partitions are stored as tuples of weakly decreasing positive integers
with trailing zeros stripped; the empty tuple is the empty partition.
All functions return exact integers.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

Partition = tuple


def normalize_partition(parts) -> tuple[int, ...]:
    """Canonical form: validate weak decrease / nonnegativity, strip zeros."""
    out = tuple(int(x) for x in parts)
    for i in range(len(out) - 1):
        if out[i] < out[i + 1]:
            raise ValueError(f"not weakly decreasing: {out}")
    if out and out[-1] < 0:
        raise ValueError(f"negative part: {out}")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def dim_sym(n: int, k: int) -> int:
    """Dimension of Sym^k of an n-dimensional space; 0 for k < 0."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(n + k - 1, k) if k >= 0 else 0


def dim_wedge(n: int, k: int) -> int:
    """Dimension of the k-th exterior power of an n-dimensional space."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(n, k) if 0 <= k <= n else 0


def weyl_dim(m: int, weights) -> int:
    """Dimension of the GL_m irreducible with highest weight `weights`.

    `weights` is a weakly decreasing integer vector of length <= m (entries
    may be negative when full length is given); shorter input is padded
    with zeros.  The product formula

        prod_{i<j} (w_i - w_j + j - i) / (j - i)

    is evaluated with exact integer division.  The value is invariant under
    adding a constant to all entries (a determinant twist).
    """
    w = list(int(x) for x in weights)
    if len(w) > m:
        raise ValueError(f"weight has more than {m} entries: {w}")
    w += [0] * (m - len(w))
    for i in range(m - 1):
        if w[i] < w[i + 1]:
            raise ValueError(f"not weakly decreasing: {tuple(w)}")
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= w[i] - w[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def _horizontal_strips(shape: tuple[int, ...], size: int):
    """All partitions obtained from `shape` by adding `size` boxes with no
    two added boxes in the same column (a horizontal strip)."""
    rows = len(shape) + 1
    padded = tuple(shape) + (0,)

    def rec(i, remaining):
        if i == rows:
            if remaining == 0:
                yield ()
            return
        old = padded[i]
        # strip condition: the new row i may not pass the old row i-1
        hi = old + remaining if i == 0 else min(old + remaining, padded[i - 1])
        for new in range(old, hi + 1):
            for tail in rec(i + 1, remaining - (new - old)):
                yield (new,) + tail

    for cand in rec(0, size):
        yield normalize_partition(cand)


@lru_cache(maxsize=None)
def _lr_cached(lam: tuple, mu: tuple) -> tuple:
    results: dict[tuple, int] = {}
    # chains of horizontal strips, letter i filling the i-th strip;
    # keep the explicit filling to test the lattice-word condition at the end
    def rec(i, shape, rows_letters):
        if i == len(mu):
            if _is_lattice(rows_letters):
                results[shape] = results.get(shape, 0) + 1
            return
        for new in _horizontal_strips(shape, mu[i]):
            padded_old = tuple(shape) + (0,) * (len(new) - len(shape))
            filling = [
                list(r) + [i] * (new[j] - padded_old[j])
                for j, r in enumerate(
                    list(rows_letters) + [[]] * (len(new) - len(rows_letters))
                )
            ]
            rec(i + 1, new, filling)

    rec(0, lam, [[] for _ in lam])
    return tuple(sorted(results.items()))


def _is_lattice(rows_letters) -> bool:
    # reverse reading word: rows top to bottom, each row right to left
    counts: dict[int, int] = {}
    for row in rows_letters:
        for letter in reversed(row):
            counts[letter] = counts.get(letter, 0) + 1
            if letter > 0 and counts.get(letter - 1, 0) < counts[letter]:
                return False
    return True


def lr_product(lam, mu, max_rows: int | None = None) -> dict[tuple, int]:
    """Littlewood-Richardson decomposition of the product of Schur
    functors ``S_lam . S_mu`` as a multiset {nu: c^nu_{lam,mu}}.

    Computed by enumerating chains of horizontal strips and keeping the
    fillings whose reverse reading word is a lattice word.  `max_rows`
    drops terms with more rows (GL_m truncation).
    """
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    out = dict(_lr_cached(lam, mu))
    if max_rows is not None:
        out = {nu: c for nu, c in out.items() if len(nu) <= max_rows}
    return out
