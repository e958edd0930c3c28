"""Rank-one representations of the doubled Beilinson quiver over a field.

A representation with one-dimensional spaces W_0, ..., W_{n-1} is stored
through the scalars by which each labeled arrow acts.  Representations
built from a triple (alpha, beta) with <beta, alpha> = 0 act by

    f_i : W_k -> W_{k+1}  multiplication by alpha_i,
    v_j : W_k -> W_{k-1}  multiplication by beta_j,

and correspond to the point ([alpha], X = alpha beta^T) of the
resolution: X is square-zero of rank at most one, with rank exactly one
precisely for the simple representations (beta != 0).

Scalars default to Fraction; any field-like type with arithmetic
operators works (a small GF(p) wrapper is provided for fuzzing).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random


class GF:
    """Tiny prime-field element for property fuzzing."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        return other if isinstance(other, GF) else GF(self.p, other)

    def __add__(self, o):
        o = self._lift(o)
        return GF(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return GF(self.p, self.v - o.v)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return GF(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return GF(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __eq__(self, o):
        if isinstance(o, int):
            return self.v == o % self.p
        return isinstance(o, GF) and self.p == o.p and self.v == o.v

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"GF({self.p},{self.v})"


@dataclass(frozen=True)
class RepTriple:
    """A nonzero vector alpha and a covector beta with zero pairing."""

    n: int
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if len(self.alpha) != self.n or len(self.beta) != self.n:
            raise ValueError("alpha and beta must have length n")
        if not any(self.alpha):
            raise ValueError("alpha must be nonzero")
        pairing = sum(a * b for a, b in zip(self.alpha, self.beta))
        if pairing != 0:
            raise ValueError(f"pairing <beta, alpha> = {pairing} must vanish")


@dataclass(frozen=True)
class Rep:
    """Scalars of every arrow: f_scalars[k][i] is f_{i+1} on W_k -> W_{k+1}
    (0 <= k <= n-2), v_scalars[k][j] is v_{j+1} on W_{k+1} -> W_k."""

    n: int
    f_scalars: tuple
    v_scalars: tuple

    def __post_init__(self):
        if len(self.f_scalars) != self.n - 1 or len(self.v_scalars) != self.n - 1:
            raise ValueError("need n-1 layers of arrow scalars")
        for layer in self.f_scalars + self.v_scalars:
            if len(layer) != self.n:
                raise ValueError("each layer needs n scalars")

    def f(self, k: int, i: int):
        """f_i acting on W_k (1-based label i)."""
        return self.f_scalars[k][i - 1]

    def v(self, k: int, j: int):
        """v_j acting on W_k (1-based label j)."""
        return self.v_scalars[k - 1][j - 1]


def rep_from_triple(t: RepTriple) -> Rep:
    layer_f = tuple(t.alpha)
    layer_v = tuple(t.beta)
    return Rep(
        n=t.n,
        f_scalars=tuple(layer_f for _ in range(t.n - 1)),
        v_scalars=tuple(layer_v for _ in range(t.n - 1)),
    )


@dataclass(frozen=True)
class RelationCheck:
    passed: bool
    relation: str | None = None
    vertex: int | None = None


def check_relations(r: Rep) -> RelationCheck:
    """Verify every defining relation of the quotient path algebra:
    commutation of like arrows, the mixed commutation at inner vertices,
    its length-three consequences across a vertex, and both trace
    relations wherever the loop exists."""
    n = r.n

    def fail(name, k):
        return RelationCheck(False, name, k)

    for k in range(n - 2):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if r.f(k, i) * r.f(k + 1, j) != r.f(k, j) * r.f(k + 1, i):
                    return fail("ff-commutation", k)
    for k in range(2, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if r.v(k, i) * r.v(k - 1, j) != r.v(k, j) * r.v(k - 1, i):
                    return fail("vv-commutation", k)
    for k in range(1, n - 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                # loop f then v at k versus v then f at k
                if r.f(k, i) * r.v(k + 1, j) != r.v(k, j) * r.f(k - 1, i):
                    return fail("mixed-commutation", k)
    for k in range(n - 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for l in range(1, n + 1):
                    lhs = r.f(k, i) * r.v(k + 1, j) * r.f(k, l)
                    rhs = r.f(k, l) * r.v(k + 1, j) * r.f(k, i)
                    if lhs != rhs:
                        return fail("fvf-exchange", k)
    for k in range(1, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for l in range(1, n + 1):
                    lhs = r.v(k, j) * r.f(k - 1, i) * r.v(k, l)
                    rhs = r.v(k, l) * r.f(k - 1, i) * r.v(k, j)
                    if lhs != rhs:
                        return fail("vfv-exchange", k)
    for k in range(1, n):
        total = sum(r.v(k, i) * r.f(k - 1, i) for i in range(1, n + 1))
        if total != 0:
            return fail("trace-fv", k)
    for k in range(n - 1):
        total = sum(r.f(k, i) * r.v(k + 1, i) for i in range(1, n + 1))
        if total != 0:
            return fail("trace-vf", k)
    return RelationCheck(True)


def generated_by(r: Rep, vertex: int) -> bool:
    """Whether the subrepresentation generated by W_vertex is everything:
    reachability from `vertex` through arrows acting by nonzero scalars."""
    n = r.n
    reached = {vertex}
    frontier = [vertex]
    while frontier:
        k = frontier.pop()
        if k + 1 < n and k + 1 not in reached and any(r.f_scalars[k]):
            reached.add(k + 1)
            frontier.append(k + 1)
        if k - 1 >= 0 and k - 1 not in reached and any(r.v_scalars[k - 1]):
            reached.add(k - 1)
            frontier.append(k - 1)
    return len(reached) == n


def is_simple(r: Rep) -> bool:
    """Simplicity for rank-one representations satisfying the relations:
    equivalent to being generated by the last space."""
    return generated_by(r, r.n - 1)


@dataclass(frozen=True)
class YPoint:
    """A point of the resolution: the line [alpha] and the square-zero
    matrix X = alpha beta^T of rank at most one."""

    line: tuple
    X: tuple


def _normalize_projective(vec):
    pivot = next(x for x in vec if x)
    return tuple(x / pivot for x in vec)


def to_point(r: Rep) -> YPoint:
    t = triple_from_rep(r)
    X = tuple(
        tuple(a * b for b in t.beta) for a in t.alpha
    )
    # X^2 = 0 is forced by the zero pairing; assert it anyway
    n = t.n
    for i in range(n):
        for j in range(n):
            if sum(X[i][k] * X[k][j] for k in range(n)) != 0:
                raise AssertionError("X^2 != 0; relations violated")
    return YPoint(line=_normalize_projective(t.alpha), X=X)


def triple_from_rep(r: Rep) -> RepTriple:
    """Reconstruct (alpha, beta) from a relation-satisfying representation
    generated by W_0; inverse to rep_from_triple up to rescaling the
    bases of the spaces."""
    if not generated_by(r, 0):
        raise ValueError("representation is not generated by W_0")
    alpha = tuple(r.f_scalars[0])
    beta = tuple(r.v_scalars[0])
    return RepTriple(r.n, alpha, beta)


def reps_isomorphic(r1: Rep, r2: Rep) -> bool:
    """Isomorphism = a rescaling c_k of each basis vector (c_0 = 1) that
    matches all arrow scalars."""
    if r1.n != r2.n:
        return False
    n = r1.n
    c = [None] * n
    c[0] = _one_like(r1.f_scalars[0][0])
    for k in range(n - 1):
        if c[k] is None:
            return False
        ratio = None
        for i in range(n):
            s1, s2 = r1.f_scalars[k][i], r2.f_scalars[k][i]
            if bool(s1) != bool(s2):
                return False
            if s1:
                rr = s1 * c[k] / s2
                if ratio is None:
                    ratio = rr
                elif ratio != rr:
                    return False
        if ratio is None:
            return False
        c[k + 1] = ratio
    for k in range(n - 1):
        for j in range(n):
            if r1.v_scalars[k][j] * c[k + 1] != r2.v_scalars[k][j] * c[k]:
                return False
    return True


def _one_like(x):
    if isinstance(x, GF):
        return GF(x.p, 1)
    return Fraction(1)


# ---------------------------------------------------------------------------
# sampling


def random_triple(n: int, rng: Random, box: int = 3, field=Fraction) -> RepTriple:
    """Draw alpha != 0 uniformly from the integer box [-box, box]^n, then
    beta by rejection from the integer solutions of the pairing equation
    in the same box."""
    while True:
        alpha = tuple(rng.randint(-box, box) for _ in range(n))
        if any(alpha):
            break
    while True:
        beta = tuple(rng.randint(-box, box) for _ in range(n))
        if sum(a * b for a, b in zip(alpha, beta)) == 0:
            break
    return RepTriple(n, tuple(field(a) for a in alpha), tuple(field(b) for b in beta))


@dataclass(frozen=True)
class BatteryReport:
    n: int
    samples: int
    passed: bool
    failures: tuple


def run_battery(n: int, samples: int, seed: int, box: int = 3) -> BatteryReport:
    """Seeded property battery: relations always hold on triple reps,
    simplicity <=> beta != 0 <=> rank X = 1, X^2 = 0 always, and the
    round trip through (alpha, beta) is the identity up to scaling."""
    rng = Random(seed)
    failures = []
    for s in range(samples):
        t = random_triple(n, rng, box)
        r = rep_from_triple(t)
        chk = check_relations(r)
        if not chk.passed:
            failures.append((s, "relations", chk.relation, chk.vertex))
            continue
        simple = is_simple(r)
        beta_nonzero = any(t.beta)
        pt = to_point(r)
        rank_one = any(any(row) for row in pt.X)
        if simple != beta_nonzero or rank_one != beta_nonzero:
            failures.append((s, "simplicity", simple, beta_nonzero, rank_one))
            continue
        if not generated_by(r, 0):
            failures.append((s, "generation"))
            continue
        t2 = triple_from_rep(r)
        if not reps_isomorphic(rep_from_triple(t2), r):
            failures.append((s, "round-trip"))
            continue
        # projective class of alpha and rescaling invariance
        if _normalize_projective(t2.alpha) != _normalize_projective(t.alpha):
            failures.append((s, "line"))
            continue
        c = Fraction(rng.randint(1, box) or 1)
        t_scaled = RepTriple(
            n,
            tuple(a * c for a in t.alpha),
            tuple(b / c for b in t.beta),
        )
        r_scaled = rep_from_triple(t_scaled)
        if is_simple(r_scaled) != simple or to_point(r_scaled).X != pt.X:
            failures.append((s, "rescaling"))
    return BatteryReport(n, samples, not failures, tuple(failures[:5]))
