"""Graded Hom/Ext bookkeeping on the two total spaces over P^{n-1}.

Z is the total space of V* (x) O(-1) and Y, the total space of the
cotangent bundle, is cut out of Z by one equation: the trace section t,
which multiplies the fiber degree by one.  Graded Homs on Z are

    Hom_Z(O(a), O(b)) = sum_k  Sym^k V (x) Sym^{k + b - a} V*,

and graded Homs on Y are the cokernel of multiplication by t on the
Z-side pieces, computed here as explicit coranks of integer matrices on
monomial bases.  When b < a the grading is reindexed to start at the
first nonzero piece, Sym^{a-b} V (x) Sym^0 V*.

The module of sections of O_Y(a) is a graded module over the coordinate
ring R of the cone of square-zero rank-one matrices; its Hilbert
function (`hilbert_M`) is the universal currency for all downstream
equality checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from . import bwb
from .combinat import dim_sym, dim_wedge
from .linalg import rank_exact


@dataclass(frozen=True)
class GradedDims:
    """Truncated Hilbert function: dims[k] for 0 <= k <= cap."""

    cap: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) != self.cap + 1:
            raise ValueError("dims must have cap+1 entries")

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.cap:
            raise IndexError(f"degree {k} beyond cap {self.cap}")
        return self.dims[k]

    def shifted(self, s: int, cap: int | None = None) -> "GradedDims":
        """Reindex degree k -> k + s (s may be negative)."""
        cap = self.cap if cap is None else cap
        out = []
        for k in range(cap + 1):
            j = k - s
            out.append(self.dims[j] if 0 <= j <= self.cap else 0)
        return GradedDims(cap, tuple(out))


@lru_cache(maxsize=None)
def monomials(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the monomial basis of Sym^k(C^n), lex order."""
    if k < 0:
        return ()
    if n == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for tail in monomials(n - 1, k - first):
            out.append((first,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(n: int, k: int) -> dict:
    return {m: i for i, m in enumerate(monomials(n, k))}


def _bump(e: tuple[int, ...], i: int) -> tuple[int, ...]:
    return e[:i] + (e[i] + 1,) + e[i + 1 :]


@dataclass(frozen=True)
class TraceMultMatrix:
    """Multiplication by t = sum_i v_i (x) f_i from
    Sym^k V (x) Sym^{k+a} V* to Sym^{k+1} V (x) Sym^{k+a+1} V*.

    Columns are indexed by source monomial pairs, rows by target pairs;
    every entry is 0 or 1 and each column has exactly n ones.
    """

    n: int
    k: int
    a: int

    @property
    def ncols(self) -> int:
        return dim_sym(self.n, self.k) * dim_sym(self.n, self.k + self.a)

    @property
    def nrows(self) -> int:
        return dim_sym(self.n, self.k + 1) * dim_sym(self.n, self.k + self.a + 1)

    def columns(self) -> list[list[int]]:
        """Row indices of the ones in each column."""
        n, k, a = self.n, self.k, self.a
        if k < 0 or k + a < 0:
            return []
        src_v = monomials(n, k)
        src_f = monomials(n, k + a)
        tgt_v = _monomial_index(n, k + 1)
        tgt_f = _monomial_index(n, k + a + 1)
        nf = dim_sym(n, k + a + 1)
        cols = []
        for ev, ef in iproduct(src_v, src_f):
            col = [
                tgt_v[_bump(ev, i)] * nf + tgt_f[_bump(ef, i)]
                for i in range(n)
            ]
            cols.append(col)
        return cols

    def dense(self) -> list[list[int]]:
        mat = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns()):
            for r in col:
                mat[r][j] = 1
        return mat

    def full_column_rank_certificate(self) -> bool:
        """Verify a triangularity certificate of full column rank.

        Pair each source monomial with its image term for i = n-1
        (largest index); among all sources hitting that target, the
        paired one is lexicographically maximal, so after sorting the
        matrix is triangular with unit diagonal and the rational rank
        equals the number of columns.
        """
        n, k, a = self.n, self.k, self.a
        src_v = monomials(n, k)
        src_f = monomials(n, k + a)
        matched = {}
        for ev, ef in iproduct(src_v, src_f):
            tgt = (_bump(ev, n - 1), _bump(ef, n - 1))
            if tgt in matched:
                return False
            matched[tgt] = ev + ef
        for (gv, gf), src_key in matched.items():
            for i in range(n):
                if gv[i] >= 1 and gf[i] >= 1 and i != n - 1:
                    other = (
                        gv[:i] + (gv[i] - 1,) + gv[i + 1 :]
                        + gf[:i] + (gf[i] - 1,) + gf[i + 1 :]
                    )
                    if other > src_key:
                        return False
        return True

    def rank(self) -> int:
        """Exact rational rank.

        The triangularity certificate settles almost every case; the
        fraction-free elimination fallback keeps the computation honest
        if it ever fails.
        """
        if self.ncols == 0:
            return 0
        if self.full_column_rank_certificate():
            return self.ncols
        rows: dict[int, dict[int, int]] = {}
        for j, col in enumerate(self.columns()):
            for r in col:
                rows.setdefault(r, {})[j] = 1
        return rank_exact(list(rows.values()), self.ncols)


def trace_mult_matrix(n: int, k: int, a: int) -> TraceMultMatrix:
    return TraceMultMatrix(n, k, a)


@lru_cache(maxsize=None)
def sym_pair_corank(n: int, p: int, q: int) -> int:
    """dim of Sym^p V (x) Sym^q V* modulo the image of multiplication by
    t from Sym^{p-1} V (x) Sym^{q-1} V*."""
    if p < 0 or q < 0:
        return 0
    total = dim_sym(n, p) * dim_sym(n, q)
    if p == 0 or q == 0:
        return total
    return total - trace_mult_matrix(n, p - 1, q - 1 - (p - 1)).rank()


def hom_z_graded(a: int, b: int, n: int, cap: int) -> GradedDims:
    """Graded dimensions of Hom_Z(O(a), O(b)); reindexed for b < a so
    that degree 0 is the first nonzero piece."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    dims = tuple(
        dim_sym(n, k + max(0, a - b)) * dim_sym(n, k + max(0, b - a))
        for k in range(cap + 1)
    )
    return GradedDims(cap, dims)


def hom_y_graded(a: int, b: int, n: int, cap: int) -> GradedDims:
    """Graded dimensions of Hom_Y(O(a), O(b)) via trace-matrix coranks.

    Requires b - a >= -n+1, the range in which pushforward to the cone
    has no higher cohomology and the corank computation is the whole
    answer.
    """
    if b - a < -n + 1:
        raise ValueError(
            f"b - a = {b - a} below the validated range (need >= {-n + 1})"
        )
    d = b - a
    dims = tuple(
        sym_pair_corank(n, k + max(0, -d), k + max(0, d)) for k in range(cap + 1)
    )
    return GradedDims(cap, dims)


def hom_y_difference_agrees(a: int, b: int, n: int, cap: int) -> bool:
    """Compare the computed coranks with the naive difference formula
    dim(piece_k) - dim(piece_{k-1}); a False return flags a discrepancy
    (none is expected, but the corank is the value that is trusted)."""
    d = b - a
    got = hom_y_graded(a, b, n, cap)
    for k in range(cap + 1):
        p, q = k + max(0, -d), k + max(0, d)
        naive = dim_sym(n, p) * dim_sym(n, q) - dim_sym(n, p - 1) * dim_sym(
            n, q - 1
        )
        if got[k] != naive:
            return False
    return True


def hilbert_M(a: int, n: int, cap: int) -> GradedDims:
    """Hilbert function of the module of sections of O_Y(a)."""
    if not -n + 1 <= a <= n - 1:
        raise ValueError(f"a={a} out of range [{-n + 1}, {n - 1}]")
    return hom_y_graded(0, a, n, cap)


def pushforward_graded(expr, n: int, cap: int) -> GradedDims:
    """Fiber-degree Hilbert function of the pushforward to the cone of
    the pullback of a bundle E on P^{n-1}:

        piece_m = dim Sym^m (x) h^0(E(m)) - dim Sym^{m-1} (x) h^0(E(m-1)).

    Valid when E(m) has no higher cohomology for all m >= 0 (multiplication
    by the trace section is then injective on sections); the vanishing is
    asserted degree by degree up to cap+1 and the dominance chamber covers
    the rest.
    """
    expr = bwb._as_expr(expr)

    def h0(m: int) -> int:
        table = bwb.cohomology(expr.twist(m))
        higher = {d: v for d, v in table.items() if d > 0}
        if higher:
            raise ValueError(
                f"higher cohomology {higher} at twist {m}; pushforward grading invalid"
            )
        return table.get(0, 0)

    dims = []
    prev_h0 = 0
    for m in range(cap + 2):
        cur = h0(m)
        if m <= cap:
            val = dim_sym(n, m) * cur - dim_sym(n, m - 1) * prev_h0
            if val < 0:
                raise ValueError("negative graded piece; invalid input bundle")
            dims.append(val)
        prev_h0 = cur
    return GradedDims(cap, tuple(dims))


# ---------------------------------------------------------------------------
# tilting verification


@dataclass(frozen=True)
class TiltingFamily:
    """One of the verified bundle families on Y (or its mirror on the
    other resolution): Tk / TkPlus are windows of line bundles, TPrime
    the twisted cotangent powers, Sk / SkDual the mixed family."""

    name: str
    n: int
    k: int = 0

    def __post_init__(self):
        if self.name not in ("Tk", "TkPlus", "TPrime", "Sk", "SkDual"):
            raise ValueError(f"unknown family {self.name}")
        if self.name in ("Sk", "SkDual") and not 0 <= self.k <= self.n - 1:
            raise ValueError(f"k={self.k} out of range [0, {self.n - 1}]")


def family_summands(fam: TiltingFamily) -> list[bwb.BundleExpr]:
    n, k = fam.n, fam.k
    if fam.name in ("Tk", "TkPlus"):
        # the mirror family has the same pairwise twist differences
        return [bwb.BundleExpr.of(bwb.line_bundle(n, a)) for a in range(-n + k + 1, k + 1)]
    if fam.name == "TPrime":
        return [bwb.omega(n, a - 1, a) for a in range(1, n + 1)]
    summands = [bwb.BundleExpr.of(bwb.line_bundle(n, a)) for a in range(-n + 2, 1)]
    summands.append(bwb.omega(n, k, 1))
    if fam.name == "SkDual":
        summands = [s.dual() for s in summands]
    return summands


@dataclass(frozen=True)
class TiltingReport:
    family: str
    n: int
    k: int
    passed: bool
    witness: tuple | None
    stabilization_bound: int
    pairs_checked: int

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "pass": self.passed,
            "witness": list(self.witness) if self.witness else None,
            "stabilization_bound": self.stabilization_bound,
        }


def tilting_check(fam: TiltingFamily) -> TiltingReport:
    """Verify Ext^{>0}-vanishing for the family on the total space.

    For every ordered pair of summands (S_i, S_j) the bundle
    E = S_i^v (x) S_j must satisfy H^{>0}(P^{n-1}, E(m)) = 0 for all
    m >= 0; higher cohomology on the total space is then zero.  Only
    finitely many m need checking: once m exceeds the dominance deficit
    of every irreducible constituent, every weight is dominant and has
    cohomology in degree 0 only.  The deficit is doubled and recorded as
    the stabilization bound.
    """
    summands = family_summands(fam)
    pair_exprs = []
    k_min = 0
    for si in summands:
        for sj in summands:
            e = si.dual().tensor(sj)
            pair_exprs.append(e)
            for w in e.terms:
                k_min = max(k_min, w.rest[0] - w.first)
    bound = 2 * max(k_min, 0)
    witness = None
    for idx, e in enumerate(pair_exprs):
        for m in range(bound + 1):
            table = bwb.cohomology(e.twist(m))
            for deg, v in table.items():
                if deg > 0 and v != 0:
                    witness = (idx // len(summands), idx % len(summands), deg, m)
                    break
            if witness:
                break
        if witness:
            break
    return TiltingReport(
        family=fam.name,
        n=fam.n,
        k=fam.k,
        passed=witness is None,
        witness=witness,
        stabilization_bound=bound,
        pairs_checked=len(pair_exprs),
    )


def nccr_rank(family: str, n: int) -> int:
    """Total rank of the two endomorphism algebras over the cone: the
    line-bundle window gives 2n, the cotangent-power window gives
    2 * sum_a rank Omega^{a-1} = 2^n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if family == "Lambda_k":
        return 2 * n
    if family == "LambdaPrime":
        return 2 * sum(dim_wedge(n - 1, a - 1) for a in range(1, n + 1))
    raise ValueError(f"unknown family {family}")
