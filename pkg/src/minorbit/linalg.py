"""Exact and certified linear algebra helpers.

Two rank engines are provided:

- exact fraction-free elimination over the integers (small matrices);
- a mod-p reduced-row-echelon accumulator on numpy float64 buffers
  (p < 2**20, so dot products over rows of length up to ~8000 stay below
  2**53 and float64 arithmetic is exact).

A mod-p rank is always a lower bound for the rational rank, so "full
column rank mod p" certifies full rational column rank, and a mod-p
quotient dimension is an upper bound for the rational quotient
dimension.  Callers combine these with independent exact lower bounds
to certify final answers; no result rests on a single prime alone.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

# 2**20 - 3, prime (asserted in the test suite)
MODP = 1048573
# largest prime below 2**16; used when row widths would push float64
# dot products past 2**53 with the default prime
MODP_SMALL = 65521


def rank_exact(rows, ncols: int) -> int:
    """Rank over Q of integer rows given as {col: coeff} dicts.

    Fraction-free elimination with gcd reduction; intended for the small
    matrices of the direct path-algebra oracle and unit tests.
    """
    echelon: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            if lead not in echelon:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                echelon[lead] = {c: v // g for c, v in row.items()}
                break
            piv = echelon[lead]
            a, b = piv[lead], row[lead]
            new = {}
            for c in set(row) | set(piv):
                v = a * row.get(c, 0) - b * piv.get(c, 0)
                if v:
                    new[c] = v
            row = new
    return len(echelon)


class ModPRref:
    """Accumulates vectors mod p, kept in reduced row-echelon form.

    Rows are stored unsorted; `pivots[i]` is the pivot column of row i and
    every row is fully reduced against every other, so the class of a
    vector v modulo the row space is v - v[pivots] @ rows.
    """

    def __init__(self, width: int, p: int = MODP):
        self.width = width
        self.p = p
        # accumulated dot products must stay exactly representable
        if width * (p - 1) ** 2 >= 2 ** 53:
            raise ValueError(
                f"width {width} too large for prime {p}; use a smaller prime"
            )
        self._buf = np.zeros((max(16, min(width, 1024)), width))
        self._n = 0
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return self._n

    def rows(self) -> np.ndarray:
        return self._buf[: self._n]

    def reduce(self, block) -> np.ndarray:
        """Reduce the rows of `block` modulo the current row space."""
        block = np.asarray(block, dtype=np.float64) % self.p
        if self._n:
            block = (block - block[:, self.pivots] @ self.rows()) % self.p
        return block

    def _grow(self) -> None:
        if self._n == self._buf.shape[0]:
            new = np.zeros((2 * self._buf.shape[0], self.width))
            new[: self._n] = self._buf[: self._n]
            self._buf = new

    def _insert(self, row: np.ndarray) -> bool:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return False
        lead = int(nz[0])
        row = (row * pow(int(row[lead]), self.p - 2, self.p)) % self.p
        if self._n:
            col = self._buf[: self._n, lead].copy()
            if np.any(col):
                self._buf[: self._n] = (
                    self._buf[: self._n] - np.outer(col, row)
                ) % self.p
        self._grow()
        self._buf[self._n] = row
        self._n += 1
        self.pivots.append(lead)
        return True

    def add(self, block, stop_at_rank: int | None = None, chunk: int = 512) -> None:
        """Insert rows of `block`; stop early once `stop_at_rank` is reached
        (callers use this only when the remaining rows provably cannot
        lower the quotient dimension further)."""
        block = np.asarray(block, dtype=np.float64)
        for start in range(0, block.shape[0], chunk):
            if stop_at_rank is not None and self._n >= stop_at_rank:
                return
            sub = self.reduce(block[start : start + chunk])
            base = self._n
            for i in range(sub.shape[0]):
                if stop_at_rank is not None and self._n >= stop_at_rank:
                    return
                row = sub[i]
                if self._n > base:
                    newp = self.pivots[base:]
                    row = (row - row[newp] @ self._buf[base : self._n]) % self.p
                self._insert(row)

    def nonpivots(self) -> list[int]:
        pset = set(self.pivots)
        return [c for c in range(self.width) if c not in pset]

    def projection(self) -> tuple[list[int], np.ndarray]:
        """Quotient coordinates: (nonpivot columns, matrix E) so that the
        class of v is v[nonpivots] - v[pivots] @ E."""
        nonpiv = self.nonpivots()
        return nonpiv, self.rows()[:, nonpiv].copy()


class ExactRref:
    """Same interface over exact Fractions (pure python, small scales).

    Used as the on-demand fallback when a mod-p certificate fails and in
    small cross-check tests.
    """

    def __init__(self, width: int, p=None):
        self.width = width
        self._rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def rows(self):
        return self._rows

    def _reduce_row(self, row: list[Fraction]) -> list[Fraction]:
        for r, lead in zip(self._rows, self.pivots):
            c = row[lead]
            if c:
                row = [a - c * b for a, b in zip(row, r)]
        return row

    def reduce(self, block):
        return [self._reduce_row([Fraction(x) for x in row]) for row in block]

    def add(self, block, stop_at_rank: int | None = None, chunk: int = 0) -> None:
        for raw in block:
            if stop_at_rank is not None and self.rank >= stop_at_rank:
                return
            row = self._reduce_row([Fraction(x) for x in raw])
            lead = next((i for i, v in enumerate(row) if v), None)
            if lead is None:
                continue
            inv = 1 / row[lead]
            row = [v * inv for v in row]
            for r in self._rows:
                c = r[lead]
                if c:
                    for i in range(self.width):
                        r[i] -= c * row[i]
            self._rows.append(row)
            self.pivots.append(lead)

    def nonpivots(self) -> list[int]:
        pset = set(self.pivots)
        return [c for c in range(self.width) if c not in pset]

    def projection(self):
        nonpiv = self.nonpivots()
        return nonpiv, [[r[c] for c in nonpiv] for r in self._rows]


def rank_exact_fraction(rows, ncols: int) -> int:
    """Rank over Q of rows with Fraction entries ({col: coeff})."""
    int_rows = []
    for row in rows:
        denom = 1
        for v in row.values():
            fv = Fraction(v)
            denom = denom * fv.denominator // gcd(denom, fv.denominator)
        int_rows.append({c: int(Fraction(v) * denom) for c, v in row.items()})
    return rank_exact(int_rows, ncols)
