"""K-lattice calculus for the flop between the two cotangent-bundle
resolutions, and an Ext-dimension ledger.

The K-group of either resolution is free of rank n on the window basis
[O(0)], ..., [O(n-1)]; every other line-bundle class is reduced into the
window with the Koszul relation sum_i (-1)^i C(n,i) [O(a-i)] = 0.  The
class of the zero-section pushforward j_* O_P(b) is expanded by the
Koszul resolution of the zero section, whose terms are the wedge powers
of the tangent bundle.

The flop functors act on line-bundle windows by [O(a)] -> [O(-a)] for a
in the width-n window attached to the functor index; their matrices in
the window bases, together with the Ext-dimension profiles between the
ledger objects, are the two falsifiable shadows through which all
functor-level statements are checked.  Ext profiles for the cone
objects F and C(h) are assembled from their defining triangles, with
connecting maps taken of maximal rank only where the relevant spaces
are 0- or 1-dimensional; anything more ambiguous raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import bwb

ExtProfile = dict


# ---------------------------------------------------------------------------
# window reduction and classes


@dataclass(frozen=True)
class KClass:
    n: int
    side: str  # "Y" or "Yplus"
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.side not in ("Y", "Yplus"):
            raise ValueError(f"side must be Y or Yplus, got {self.side}")
        if len(self.coords) != self.n:
            raise ValueError("coords must have length n")

    def __add__(self, other: "KClass") -> "KClass":
        self._compat(other)
        return KClass(self.n, self.side, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KClass") -> "KClass":
        self._compat(other)
        return KClass(self.n, self.side, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: int) -> "KClass":
        return KClass(self.n, self.side, tuple(c * a for a in self.coords))

    def _compat(self, other: "KClass") -> None:
        if self.n != other.n or self.side != other.side:
            raise ValueError("incompatible K-classes")


@lru_cache(maxsize=None)
def _reduce_coeffs(a: int, n: int) -> tuple[int, ...]:
    """Coordinates of [O(a)] in the window basis [O(0)], ..., [O(n-1)]."""
    if 0 <= a < n:
        out = [0] * n
        out[a] = 1
        return tuple(out)
    if a >= n:
        # [O(a)] = -sum_{i=1}^n (-1)^i C(n,i) [O(a-i)]
        out = [0] * n
        for i in range(1, n + 1):
            c = -((-1) ** i) * comb(n, i)
            for j, v in enumerate(_reduce_coeffs(a - i, n)):
                out[j] += c * v
        return tuple(out)
    # a < 0: solve the relation anchored at a for its lowest term
    out = [0] * n
    for i in range(n):
        c = -((-1) ** n) * ((-1) ** i) * comb(n, i)
        for j, v in enumerate(_reduce_coeffs(a + n - i, n)):
            out[j] += c * v
    return tuple(out)


def reduce_line(a: int, n: int, side: str = "Y") -> KClass:
    """[O(a)] reduced to the window basis via the Koszul relation."""
    return KClass(n, side, _reduce_coeffs(a, n))


def zero_class(n: int, side: str = "Y") -> KClass:
    return KClass(n, side, (0,) * n)


def reduce_to_window(a: int, n: int, base: int) -> dict[int, int]:
    """Expansion of [O(a)] over the shifted window {[O(base)], ...,
    [O(base+n-1)]}; the Koszul relation is twist-invariant, so this is a
    reindexing of :func:`reduce_line`."""
    coeffs = _reduce_coeffs(a - base, n)
    return {base + j: c for j, c in enumerate(coeffs) if c}


@lru_cache(maxsize=None)
def _wedge_tangent_line_coeffs(p: int, n: int) -> tuple[tuple[int, int], ...]:
    """[Lambda^p T] as a combination of line-bundle classes, via the
    recursion [Lambda^p T] = C(n,p) [O(p)] - [Lambda^{p-1} T]."""
    if p == 0:
        return ((0, 1),)
    out: dict[int, int] = {p: comb(n, p)}
    for t, c in _wedge_tangent_line_coeffs(p - 1, n):
        out[t] = out.get(t, 0) - c
    return tuple(sorted(out.items()))


def kclass_jp(b: int, n: int, side: str = "Y") -> KClass:
    """[j_* O_P(b)]: alternating sum over the zero-section Koszul
    resolution sum_p (-1)^p [Lambda^p T (x) O(b)], reduced to the window."""
    total = zero_class(n, side)
    for p in range(n):
        for t, c in _wedge_tangent_line_coeffs(p, n):
            total = total + reduce_line(t + b, n, side).scale(((-1) ** p) * c)
    return total


def kclass_jpdual(b: int, n: int) -> KClass:
    """[j'_* O_{P^v}(b)] on the other side; the mirror computation gives
    the same coordinates over the mirrored window."""
    return KClass(n, "Yplus", kclass_jp(b, n).coords)


# ---------------------------------------------------------------------------
# matrices


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B) -> list[list[int]]:
    rn, inner, cn = len(A), len(B), len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cn)]
        for i in range(rn)
    ]


def twist_matrix(n: int, s: int) -> list[list[int]]:
    """Matrix of (x) O(s) on the window basis (columns = images)."""
    cols = [_reduce_coeffs(j + s, n) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


KN = "KN"
KNPRIME = "KNprime"


def kn_matrix(k: int, n: int, direction: str = KN) -> list[list[int]]:
    """Matrix on window bases of the flop equivalence with index k.

    The functor sends [O(a)] -> [O(-a)] on the opposite side for every a
    in the window [-n+k+1, k]; outside the window, classes are first
    reduced into it.  KN goes from the Y side to the other side, KNprime
    the reverse; the matrices coincide because the rule is symmetric.
    """
    if direction not in (KN, KNPRIME):
        raise ValueError(f"direction must be {KN} or {KNPRIME}")
    base = -n + k + 1
    cols = []
    for j in range(n):
        vec = [0] * n
        for a, c in reduce_to_window(j, n, base).items():
            for i, v in enumerate(_reduce_coeffs(-a, n)):
                vec[i] += c * v
        cols.append(vec)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def apply_matrix(M, kc: KClass, side: str) -> KClass:
    out = [sum(M[i][j] * kc.coords[j] for j in range(kc.n)) for i in range(kc.n)]
    return KClass(kc.n, side, tuple(out))


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    matrix: tuple | None = None

    def as_dict(self):
        return {"pass": self.passed, "matrix": [list(r) for r in self.matrix] if self.matrix else None}


def flop_flop_check(k: int, n: int) -> CheckResult:
    """K-lattice shadow of flop-then-flop-back being a twist: the twist
    autoequivalence attached to a projective-space object is trivial on
    the K-lattice, so the matrix product must be the identity."""
    prod = matmul(kn_matrix(-k, n, KNPRIME), kn_matrix(n + k, n, KN))
    ok = prod == identity_matrix(n)
    return CheckResult(ok, tuple(tuple(r) for r in prod))


# ---------------------------------------------------------------------------
# ledger objects


@dataclass(frozen=True)
class OY:
    a: int


@dataclass(frozen=True)
class OYplus:
    a: int


@dataclass(frozen=True)
class JP:
    """j_* O_P(b): the zero section pushforward."""

    b: int


@dataclass(frozen=True)
class JPdual:
    """j'_* O_{P^v}(b) on the other resolution."""

    b: int


@dataclass(frozen=True)
class FSheaf:
    """The sheaf F = (flop-back of O(1)) sitting in
    0 -> j_*O_P(-1) -> F -> O_Y(-1) -> j_*O_P(-1) -> 0."""


@dataclass(frozen=True)
class ConeH:
    """C(h), the cone of the degree-2 generator
    h : j_*O_P(-1)[-2] -> j_*O_P(-1)."""


F = FSheaf()
Ch = ConeH()


class AmbiguousConnectingMap(ValueError):
    """Raised when a triangle assembly would need a connecting-map rank
    that is not forced by 0/1-dimensional Hom spaces."""


def _shift(profile: ExtProfile, s: int) -> ExtProfile:
    """Profile of X[s]: Ext^k(A, X[s]) = Ext^{k+s}(A, X)."""
    return {k - s: v for k, v in profile.items()}


def _cone_profile(x: ExtProfile, y: ExtProfile) -> ExtProfile:
    """Profile of RHom(A, Cone(X -> Y)) from the profiles of X and Y,
    assuming every induced map Ext^k(A,X) -> Ext^k(A,Y) has maximal
    rank.  Sound only when each overlapping pair of dimensions is 0 or
    1; larger overlaps raise."""
    out: dict[int, int] = {}
    degs = set(x) | set(y)
    for k in set(d for d in degs) | {d - 1 for d in x}:
        xk, yk = x.get(k, 0), y.get(k, 0)
        if min(xk, yk) > 0 and max(xk, yk) > 1:
            raise AmbiguousConnectingMap(
                f"degree {k}: dims {xk} -> {yk} not forced"
            )
        r_k = min(xk, yk)
        x1, y1 = x.get(k + 1, 0), y.get(k + 1, 0)
        if min(x1, y1) > 0 and max(x1, y1) > 1:
            raise AmbiguousConnectingMap(
                f"degree {k + 1}: dims {x1} -> {y1} not forced"
            )
        v = (yk - r_k) + (x1 - min(x1, y1))
        if v:
            out[k] = v
    return dict(sorted(out.items()))


def _p_coh(n: int, t: int) -> ExtProfile:
    return bwb.cohomology(bwb.line_bundle(n, t))


def _profile_jp_oy(c: int, b: int, n: int) -> ExtProfile:
    """Ext^*(j_*O_P(c), O_Y(b)) = H^*(P, O(b - c - n)) [shift n-1].

    The c = -1 instances and the duality symmetry against the opposite
    order pin this formula; see the ledger tests.
    """
    coh = _p_coh(n, b - c - n)
    return {k + (n - 1): v for k, v in coh.items()}


def _profile_oy_jp(a: int, b: int, n: int) -> ExtProfile:
    """Ext^*(O_Y(a), j_*O_P(b)) = H^*(P, O(b-a)) by adjunction."""
    return dict(_p_coh(n, b - a))


def _profile_jp_jp(b: int, c: int, n: int) -> tuple[ExtProfile, bool]:
    """Ext^*(j_*O_P(b), j_*O_P(c)) = sum_q H^{*-q}(P, Omega^q(c-b)).

    The second return value flags the collapse assumption used for
    b != c (the equal-twist case needs none: the contributions sit in
    distinct total degrees)."""
    out: dict[int, int] = {}
    for q in range(n):
        for p, v in bwb.cohomology(bwb.omega(n, q, c - b)).items():
            out[p + q] = out.get(p + q, 0) + v
    return dict(sorted(out.items())), b != c


def _profile_jp_ch(c: int, n: int) -> ExtProfile:
    a = _profile_jp_jp(c, -1, n)[0]
    return _cone_profile(_shift(a, -2), a)


def _profile_jp_f(c: int, n: int) -> ExtProfile:
    x = _shift(_profile_jp_oy(c, -1, n), -1)
    y = _profile_jp_ch(c, n)
    return _cone_profile(x, y)


def _profile_ch_f(n: int) -> ExtProfile:
    """Ext^*(C(h), F) via the contravariant long exact sequence of the
    defining triangle of C(h); the two inputs have disjoint support, so
    no rank choice is needed."""
    xf = _profile_jp_f(-1, n)  # Ext^*(j_*O_P(-1), F)
    # Ext^k(Ch, F) = ker(Ext^k(X,F) -> Ext^{k+2}(X,F)) + coker in k-1... :
    # assembled as the cone on the h-composition map, shifted
    target = {k - 2: v for k, v in xf.items()}  # Ext^k(X[-2], F)
    out: dict[int, int] = {}
    for k in set(xf) | set(target) | {d + 1 for d in target}:
        xk, tk = xf.get(k, 0), target.get(k, 0)
        if min(xk, tk) > 0 and max(xk, tk) > 1:
            raise AmbiguousConnectingMap(f"degree {k}")
        kerk = xk - min(xk, tk)
        t_prev, x_prev = target.get(k - 1, 0), xf.get(k - 1, 0)
        cok = t_prev - min(x_prev, t_prev)
        if kerk + cok:
            out[k] = kerk + cok
    return dict(sorted(out.items()))


def ext_profile(A, B, n: int) -> ExtProfile:
    """Ext-dimension profile {degree: dim} between ledger objects.

    Supported pairs: (JP, OY), (OY, JP), (JP, JP), (JP, Ch), (JP, F),
    (Ch, F).  Anything else raises.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if isinstance(A, JP) and isinstance(B, OY):
        return _profile_jp_oy(A.b, B.a, n)
    if isinstance(A, OY) and isinstance(B, JP):
        return _profile_oy_jp(A.a, B.b, n)
    if isinstance(A, JP) and isinstance(B, JP):
        return _profile_jp_jp(A.b, B.b, n)[0]
    if isinstance(A, JP) and isinstance(B, ConeH):
        if A.b != -1:
            raise ValueError("C(h) profiles are pinned to the twist -1 object")
        return _profile_jp_ch(A.b, n)
    if isinstance(A, JP) and isinstance(B, FSheaf):
        if A.b != -1:
            raise ValueError("F profiles are pinned to the twist -1 object")
        return _profile_jp_f(A.b, n)
    if isinstance(A, ConeH) and isinstance(B, FSheaf):
        return _profile_ch_f(n)
    raise ValueError(f"unsupported ledger pair ({A}, {B})")


def jp_jp_assumes_collapse(b: int, c: int) -> bool:
    """True when the (JP(b), JP(c)) profile rests on the collapse of the
    local-to-global sequence; only the Euler characteristic of such a
    profile is cross-checked."""
    return b != c


def euler_chi(profile: ExtProfile) -> int:
    return sum((-1) ** k * v for k, v in profile.items())


def chi_jp_oy(b: int, a: int, n: int) -> int:
    return euler_chi(_profile_jp_oy(b, a, n))


def chi_jp_class(b: int, kc: KClass) -> int:
    """chi(j_*O_P(b), x) for x given in the window basis, by linearity."""
    return sum(
        c * chi_jp_oy(b, j, kc.n) for j, c in enumerate(kc.coords) if c
    )


# ---------------------------------------------------------------------------
# recorded pushforward facts and the image table of the basic flop functor


def oe_pushforward_class(k: int, n: int) -> KClass | None:
    """K-class on the far side of the derived pushforward of O_E(kE)
    from the exceptional divisor of the blown-up correspondence:
    zero for 1 <= k <= n-2, and j'_*O_{P^v}(-n) placed in degree n-2
    for k = n-1.  Recorded as data; everything downstream assembles
    from these values."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range [1, {n - 1}]")
    if k <= n - 2:
        return None
    return kclass_jpdual(-n, n).scale((-1) ** (n - 2))


@dataclass(frozen=True)
class KNZeroRow:
    a: int
    correspondence_part: tuple[int, ...]
    product_part: tuple[int, ...]
    divisor_part: tuple[int, ...]
    assembled: tuple[int, ...]
    expected: tuple[int, ...]
    ok: bool


def kn0_image_table(n: int) -> list[KNZeroRow]:
    """Assemble [KN_0(O_Y(a))] for a in [-n+1, 0] from the three
    Fourier-Mukai constituents of the correspondence square

        KN_0(X) -> Phi_blowup(X) + Phi_product(X) -> Phi_divisor(X),

    where the product term is RGamma(P, O(a)) (x) j'_*O_{P^v}, the
    divisor term comes from the (1,1) divisor sequence, and the blowup
    term uses the recorded O_E(kE) pushforward facts.  The assembled
    class must equal [O(-a)] on the far side.
    """
    rows = []
    for a in range(-n + 1, 1):
        chi_a = sum((-1) ** d * v for d, v in _p_coh(n, a).items())
        prod = kclass_jpdual(0, n).scale(chi_a)
        chi_a1 = sum((-1) ** d * v for d, v in _p_coh(n, a - 1).items())
        prod_twisted = kclass_jpdual(-1, n).scale(chi_a1)
        divisor = prod - prod_twisted
        blowup = reduce_line(-a, n, "Yplus")
        for k in range(1, -a + 1):
            fact = oe_pushforward_class(k, n)
            if fact is not None:
                # twist by O(-a) on the far side: O(-n) (x) O(-a+... ) ;
                # k = n-1 forces a = -n+1, the twisted class is j'_*O(-1)
                blowup = blowup + kclass_jpdual(-n + (-a), n).scale((-1) ** (n - 2))
        assembled = blowup + prod - divisor
        expected = reduce_line(-a, n, "Yplus")
        rows.append(
            KNZeroRow(
                a=a,
                correspondence_part=blowup.coords,
                product_part=prod.coords,
                divisor_part=divisor.coords,
                assembled=assembled.coords,
                expected=expected.coords,
                ok=assembled.coords == expected.coords,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# the twist ledger


@dataclass(frozen=True)
class LedgerStep:
    name: str
    claim: str
    value: object
    expected: object
    ok: bool

    def as_dict(self):
        return {
            "step": self.name,
            "claim": self.claim,
            "value": _jsonable(self.value),
            "expected": _jsonable(self.expected),
            "ok": self.ok,
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): val for k, val in sorted(v.items())}
    if isinstance(v, tuple):
        return list(v)
    return v


@dataclass(frozen=True)
class LedgerReport:
    n: int
    passed: bool
    steps: tuple[LedgerStep, ...]
    failing_step: str | None

    def as_dict(self):
        return {
            "n": self.n,
            "pass": self.passed,
            "failing_step": self.failing_step,
            "steps": [s.as_dict() for s in self.steps],
        }


def ptwist_ledger_check(n: int) -> LedgerReport:
    """Replay, at the level of Ext dimensions and K-classes, the chain of
    computations showing that the twist attached to j_*O_P(-1) carries
    the flopped O(1) back to O_Y(-1).

    Steps: the K-class of F assembled from its Fourier-Mukai
    constituents; the four RHom profiles against j_*O_P(-1); the
    one-dimensionality of Hom(C(h), F) identifying the evaluation map;
    and the final cone, whose profile and K-class must match O_Y(-1).
    """
    if n < 3:
        raise ValueError("the ledger needs n >= 3")
    steps: list[LedgerStep] = []

    def add(name, claim, value, expected):
        steps.append(LedgerStep(name, claim, value, expected, value == expected))

    # F from its constituents: ideal-sheaf part, product part, divisor part
    ideal_part = reduce_line(-1, n) - kclass_jp(-1, n)
    product_part = kclass_jp(0, n).scale(n)
    # tangent bundle twisted down: [T(-1)] = n[O(0)] - [O(-1)]
    divisor_part = kclass_jp(0, n).scale(n) - kclass_jp(-1, n)
    f_class = ideal_part + product_part - divisor_part
    add(
        "F-class",
        "class of the flop-back of O(1) assembled from its three "
        "correspondence constituents equals [O_Y(-1)]",
        f_class.coords,
        reduce_line(-1, n).coords,
    )
    # the four-term sheaf sequence gives the same class
    add(
        "F-sequence-class",
        "the four-term exact sequence containing F gives [F] = [O_Y(-1)]",
        (kclass_jp(-1, n) + reduce_line(-1, n) - kclass_jp(-1, n)).coords,
        reduce_line(-1, n).coords,
    )
    E = JP(-1)
    for b in range(0, n - 1):
        add(
            f"vanishing-b{b}",
            f"RHom(j_*O_P(-1), O_Y({b})) = 0",
            ext_profile(E, OY(b), n),
            {},
        )
    add(
        "against-O(-1)",
        "RHom(j_*O_P(-1), O_Y(-1)) is one line in degree 2n-2",
        ext_profile(E, OY(-1), n),
        {2 * n - 2: 1},
    )
    add(
        "self-profile",
        "the self-Ext algebra has one line in each even degree 0..2n-2",
        ext_profile(E, E, n),
        {2 * q: 1 for q in range(n)},
    )
    add(
        "against-cone",
        "RHom(j_*O_P(-1), C(h)) has lines in degrees 0 and 2n-1",
        ext_profile(E, Ch, n),
        {0: 1, 2 * n - 1: 1},
    )
    add(
        "against-F",
        "RHom(j_*O_P(-1), F) is one line in degree 0",
        ext_profile(E, F, n),
        {0: 1},
    )
    add(
        "hom-cone-F",
        "Hom(C(h), F) is one-dimensional, so evaluation is the connecting "
        "map up to scale",
        {k: v for k, v in ext_profile(Ch, F, n).items() if k == 0},
        {0: 1},
    )
    # final cone: twist(F) = Cone(C(h) (x) RHom(E,F) -> F) with RHom(E,F) = C
    twisted_profile = _cone_profile(ext_profile(E, Ch, n), ext_profile(E, F, n))
    add(
        "twisted-profile",
        "the profile of RHom(j_*O_P(-1), twist(F)) matches that of O_Y(-1)",
        twisted_profile,
        ext_profile(E, OY(-1), n),
    )
    ch_class = kclass_jp(-1, n) - kclass_jp(-1, n)
    twisted_class = f_class - ch_class
    add(
        "twisted-class",
        "[twist(F)] = [O_Y(-1)] in the K-lattice",
        twisted_class.coords,
        reduce_line(-1, n).coords,
    )
    failing = next((s.name for s in steps if not s.ok), None)
    return LedgerReport(n=n, passed=failing is None, steps=tuple(steps), failing_step=failing)
