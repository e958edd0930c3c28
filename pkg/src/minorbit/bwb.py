"""Cohomology of homogeneous vector bundles on P(V) = P^{n-1}.

Conventions
-----------
P(V) is the space of lines in an n-dimensional space V, so sections of
O(1) form the n-dimensional space V*.  An irreducible homogeneous bundle
is encoded as a :class:`LeviWeight` ``(first; rest)`` for the Levi
GL_1 x GL_{n-1} of the parabolic stabilizing a line:

- ``line_bundle(n, t)``  is ``(t; 0, ..., 0)``;
- the rank n-1 bundle W with Lambda^p W = Omega^p(p) is ``(0; 1, 0, ..., 0)``,
  and ``rest`` is the highest weight of a Schur functor of W;
- adding a constant to all n entries (``first`` and ``rest`` together) is a
  determinant twist of V and does not change the bundle; weights are
  normalized so that ``rest`` ends in 0.

Cohomology is computed by the dominance shift: add rho = (n-1, ..., 1, 0)
to the full n-entry weight vector; a repeated entry contributes nothing,
otherwise sort strictly decreasing by a permutation with l inversions and
put the Weyl dimension of (sorted - rho) in degree l.  The classical
closed form for Omega^p(t) is implemented separately as an independent
oracle, and the orientation of every convention is pinned by anchor
identities in the test suite (H^0(O(1)) has dimension n, the top
exterior power of the cotangent bundle is O(-n), and the wedge powers of
T(-1) match complementary twisted cotangent powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .combinat import lr_product, normalize_partition, weyl_dim

CohTable = dict


@dataclass(frozen=True)
class LeviWeight:
    """Irreducible homogeneous bundle on P^{n-1}: GL_1 weight `first`,
    weakly decreasing GL_{n-1} weight `rest` (length n-1)."""

    n: int
    first: int
    rest: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if len(self.rest) != self.n - 1:
            raise ValueError(
                f"rest must have length {self.n - 1}, got {self.rest}"
            )
        for i in range(len(self.rest) - 1):
            if self.rest[i] < self.rest[i + 1]:
                raise ValueError(f"rest not weakly decreasing: {self.rest}")

    def normalized(self) -> "LeviWeight":
        c = self.rest[-1]
        if c == 0:
            return self
        return LeviWeight(
            self.n, self.first - c, tuple(r - c for r in self.rest)
        )

    def full_vector(self) -> tuple[int, ...]:
        return (self.first,) + self.rest

    def rank(self) -> int:
        return weyl_dim(self.n - 1, self.rest)

    def dual(self) -> "LeviWeight":
        rest = tuple(-r for r in reversed(self.rest))
        return LeviWeight(self.n, -self.first, rest).normalized()

    def twist(self, t: int) -> "LeviWeight":
        return LeviWeight(self.n, self.first + t, self.rest)


class BundleExpr:
    """Formal Z-linear combination of irreducible homogeneous bundles,
    all on the same P^{n-1}.  Supports +, -, integer scaling, tensor
    product (via Littlewood-Richardson), dual and twisting."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[LeviWeight, int] = {}
        if terms:
            for w, c in dict(terms).items():
                if w.n != n:
                    raise ValueError("mixed projective spaces in one expression")
                if c:
                    w = w.normalized()
                    self.terms[w] = self.terms.get(w, 0) + c
            self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def of(cls, w: LeviWeight, coeff: int = 1) -> "BundleExpr":
        return cls(w.n, {w: coeff})

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return BundleExpr(self.n, out)

    def __sub__(self, other: "BundleExpr") -> "BundleExpr":
        return self + other.scale(-1)

    def scale(self, c: int) -> "BundleExpr":
        return BundleExpr(self.n, {w: c * v for w, v in self.terms.items()})

    def twist(self, t: int) -> "BundleExpr":
        return BundleExpr(self.n, {w.twist(t): c for w, c in self.terms.items()})

    def dual(self) -> "BundleExpr":
        return BundleExpr(self.n, {w.dual(): c for w, c in self.terms.items()})

    def tensor(self, other: "BundleExpr") -> "BundleExpr":
        out: dict[LeviWeight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w, m in _tensor_weights(w1, w2):
                    out[w] = out.get(w, 0) + c1 * c2 * m
        return BundleExpr(self.n, out)

    def rank(self) -> int:
        return sum(c * w.rank() for w, c in self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, BundleExpr) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "BundleExpr(0)"
        bits = [f"{c}*({w.first};{w.rest})" for w, c in sorted(
            self.terms.items(), key=lambda t: (t[0].first, t[0].rest))]
        return "BundleExpr(" + " + ".join(bits) + ")"


def _as_expr(e) -> BundleExpr:
    if isinstance(e, LeviWeight):
        return BundleExpr.of(e)
    return e


@lru_cache(maxsize=None)
def _tensor_weights_cached(n, f1, r1, f2, r2):
    out = []
    for nu, c in lr_product(r1, r2, max_rows=n - 1).items():
        rest = tuple(nu) + (0,) * (n - 1 - len(nu))
        out.append((LeviWeight(n, f1 + f2, rest).normalized(), c))
    return tuple(out)


def _tensor_weights(w1: LeviWeight, w2: LeviWeight):
    # normalized weights have partition rests, so plain LR applies
    w1, w2 = w1.normalized(), w2.normalized()
    return _tensor_weights_cached(w1.n, w1.first, w1.rest, w2.first, w2.rest)


def line_bundle(n: int, t: int) -> LeviWeight:
    """O(t) on P^{n-1}."""
    return LeviWeight(n, t, (0,) * (n - 1))


def schur_of_omega1(n: int, lam, t: int = 0) -> LeviWeight:
    """S_lam(W) (x) O(t), where W is the rank n-1 bundle with
    Lambda^p W = Omega^p(p)."""
    lam = normalize_partition(lam)
    if len(lam) > n - 1:
        raise ValueError(f"{lam} has more than {n - 1} rows")
    return LeviWeight(n, t, tuple(lam) + (0,) * (n - 1 - len(lam)))


def omega(n: int, p: int, t: int) -> BundleExpr:
    """Omega^p(t), the p-th cotangent power twisted by O(t)."""
    if not 0 <= p <= n - 1:
        raise ValueError(f"p={p} out of range [0, {n - 1}]")
    w = schur_of_omega1(n, (1,) * p, t - p)
    return BundleExpr.of(w)


def wedge_tangent(n: int, p: int, t: int) -> BundleExpr:
    """(Lambda^p T)(t), the p-th tangent power twisted by O(t)."""
    if not 0 <= p <= n - 1:
        raise ValueError(f"p={p} out of range [0, {n - 1}]")
    # Lambda^p of W* twisted by O(p + t)
    rest = (0,) * (n - 1 - p) + (-1,) * p
    return BundleExpr.of(LeviWeight(n, p + t, rest).normalized())


@lru_cache(maxsize=None)
def _bwb_single(n: int, first: int, rest: tuple[int, ...]):
    """Cohomology of one irreducible weight: None if singular, else
    (degree, dimension)."""
    w = (first,) + rest
    rho = tuple(range(n - 1, -1, -1))
    v = [w[i] + rho[i] for i in range(n)]
    if len(set(v)) < n:
        return None
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if v[i] < v[j]
    )
    s = sorted(v, reverse=True)
    lam = tuple(s[i] - rho[i] for i in range(n))
    return inversions, weyl_dim(n, lam)


def cohomology(e) -> CohTable:
    """Cohomology table {degree: dimension} of a bundle expression.

    Dimensions can be negative for virtual inputs; zero entries are
    omitted.
    """
    e = _as_expr(e)
    table: dict[int, int] = {}
    for w, c in e.terms.items():
        res = _bwb_single(w.n, w.first, w.rest)
        if res is None:
            continue
        deg, dim = res
        table[deg] = table.get(deg, 0) + c * dim
    return {d: v for d, v in sorted(table.items()) if v}


def bott_closed_form(n: int, p: int, t: int) -> CohTable:
    """Classical closed form for H^*(P^{n'}, Omega^p(t)), n' = n-1.

    Independent oracle for :func:`cohomology`; computed directly from
    binomials, not through the dominance shift.
    """
    if not 0 <= p <= n - 1:
        raise ValueError(f"p={p} out of range [0, {n - 1}]")
    np_ = n - 1
    table: dict[int, int] = {}
    if t > p:
        d = comb(t + np_ - p, t) * comb(t - 1, p)
        if d:
            table[0] = d
    elif t == 0:
        table[p] = 1
    elif t < p - np_:
        d = comb(-t + p, -t) * comb(-t - 1, np_ - p)
        if d:
            table[np_] = d
    return table


def euler_characteristic(e) -> int:
    """Alternating sum of the cohomology table."""
    return sum((-1) ** d * v for d, v in cohomology(e).items())


def serre_dual(e) -> BundleExpr:
    """E^v (x) O(-n); its cohomology mirrors that of E in degree
    q <-> n-1-q."""
    e = _as_expr(e)
    return e.dual().twist(-e.n)


def dual_omega(n: int, p: int, t: int) -> BundleExpr:
    """(Omega^p(t))^v = Omega^{n-p-1}(n-p-1) (x) O(p - t)."""
    return omega(n, p, t).dual()


def hom_bundle(a: int, b: int, c: int, n: int) -> BundleExpr:
    """The sheaf-Hom bundle Hom(Omega^{b-1}(b), Omega^{a-1}(a)) (x) O(-c).

    The dual is expanded through the duality chain
    (Omega^{q}(q+1))^v = Omega^{n-q-1}(n-q-1), so the result is the
    Littlewood-Richardson product Omega^{n-b}(n-b) . Omega^{a-1}(a)
    twisted by O(-c); all coefficients are nonnegative.
    """
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"a={a}, b={b} out of range [1, {n}]")
    return omega(n, n - b, n - b).tensor(omega(n, a - 1, a)).twist(-c)


VANISHES = "vanishes"


def blv_classify(a: int, b: int, c: int, d: int, n: int) -> str:
    """Necessary condition for H^d(P(V), Hom(Omega^{b-1}(b),
    Omega^{a-1}(a))(-c)) to be nonzero, split into four cases by the sign
    of d - c.  Returns the admitting case name or ``"vanishes"``.

    The classification is sound (never reports ``vanishes`` on a nonzero
    group) but not sharp; the exhaustive comparison against computed
    cohomology lives in the test suite.
    """
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"a={a}, b={b} out of range [1, {n}]")
    if not 0 <= d <= n - 1:
        raise ValueError(f"d={d} out of range [0, {n - 1}]")
    if d - c > 0:
        return "case1" if (d == 0 and c < 0) else VANISHES
    if d - c == 0:
        lo, hi = max(a, b), min(n, a + b - 1)
        return "case2" if lo <= c + b <= hi else VANISHES
    if d - c == -1:
        lo, hi = max(0, n - a - b - 1), min(n - b, n - a)
        return "case3" if lo <= c - a <= hi else VANISHES
    return "case4" if (d == n - 1 and c > n) else VANISHES
