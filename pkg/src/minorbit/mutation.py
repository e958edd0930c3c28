"""Mutation bookkeeping along the spliced long Euler sequences.

The descending chain lives on the second resolution: the Koszul
resolution of the evaluation V (x) O -> O(1) on the dual projective
space pushes forward to

    0 -> M(n-1) -> V* (x) M(n-2) -> ... -> V (x) M(0) -> M(-1) -> 0,

spliced into short exact sequences 0 -> L(k) -> wedge^k V (x) M(k-1)
-> L(k-1) -> 0 with L(n-1) = M(n-1) and L(0) = M(-1); the splice module
L(k) is the pushforward of Omega^k(1).  The ascending chain is the
mirror story on the first resolution, built from the inclusion
O(-1) -> V (x) O; its splice modules WedgeT(k) are pushforwards of
(Lambda^k T)(-1), with WedgeT(0) = M(-1) and WedgeT(n-1) = M(n-1).

One mutation step exchanges the non-fixed summand of E = W + (splice
module), W = M(0) + ... + M(n-2), for its neighbor along the chain; the
recorded approximation term is the middle term of the splice.  After
n-1 descending and n-1 ascending steps (2n-2 in total) the summand
multiset returns to W + M(n-1).

Hilbert data: every label reports a Hilbert function normalized to
start in degree 0; exactness of each splice is checked degreewise in
the raw fiber grading of the relevant side, where the splice maps are
degree-preserving.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bwb
from .cohengine import (
    GradedDims,
    TiltingFamily,
    hilbert_M,
    pushforward_graded,
    tilting_check,
)
from .combinat import dim_wedge

Label = tuple


def M(a: int) -> Label:
    return ("M", a)


def L(k: int) -> Label:
    return ("L", k)


def WedgeT(k: int) -> Label:
    return ("WT", k)


def normalize_label(label: Label, n: int) -> Label:
    kind, v = label
    if kind == "L":
        if v == n - 1:
            return M(n - 1)
        if v == 0:
            return M(-1)
    if kind == "WT":
        if v == 0:
            return M(-1)
        if v == n - 1:
            return M(n - 1)
    return label


def label_rank(label: Label, n: int) -> int:
    kind, v = label
    if kind == "M":
        return 1
    return dim_wedge(n - 1, v)


def _fiber_dims(label: Label, n: int, cap: int, side: str) -> GradedDims:
    """Raw fiber-degree Hilbert data of the label's sheaf pushforward on
    the given side ('minus' = descending chain, 'plus' = ascending)."""
    kind, v = label
    if kind == "M":
        expr = bwb.BundleExpr.of(bwb.line_bundle(n, -v if side == "minus" else v))
    elif kind == "L":
        if side != "minus":
            raise ValueError("L-labels live on the descending side")
        expr = bwb.omega(n, v, 1)
    else:
        if side != "plus":
            raise ValueError("WedgeT-labels live on the ascending side")
        expr = bwb.wedge_tangent(n, v, -1)
    return pushforward_graded(expr, n, cap)


def _generation_offset(label: Label, n: int, side: str) -> int:
    kind, v = label
    if kind == "M":
        return max(v, 0) if side == "minus" else max(-v, 0)
    if kind == "L":
        return v
    return 1 if v == 0 else 0


def hilbert_of_label(label: Label, n: int, cap: int) -> GradedDims:
    """Hilbert data of a summand label, normalized to start in degree 0.

    M-labels delegate to the exact corank computation `hilbert_M`;
    splice labels are computed from the pushforward grading of their
    defining bundle and shifted down by their generation degree, so the
    two ends of either chain agree with the corresponding M-label.
    """
    kind, v = label
    if kind == "M":
        return hilbert_M(v, n, cap)
    side = "minus" if kind == "L" else "plus"
    off = _generation_offset(label, n, side)
    return _fiber_dims(label, n, cap + off, side).shifted(-off, cap)


# ---------------------------------------------------------------------------
# Euler sequences and splices


def euler_sequence(n: int, side: str) -> list[tuple[int, Label]]:
    """Ordered terms (multiplicity, label) of the pushed-forward long
    Euler sequence: descending ('minus') from M(n-1) to M(-1),
    ascending ('plus') from M(-1) to M(n-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if side == "minus":
        return [(dim_wedge(n, n - j), M(n - 1 - j)) for j in range(n + 1)]
    if side == "plus":
        return [(dim_wedge(n, j), M(j - 1)) for j in range(n + 1)]
    raise ValueError("side must be 'minus' or 'plus'")


@dataclass(frozen=True)
class Splice:
    """0 -> sub -> mult (x) mid -> quot -> 0 with degree-preserving maps
    in the fiber grading of `side`."""

    side: str
    sub: Label
    mult: int
    mid: Label
    quot: Label


def splices(n: int, side: str) -> list[Splice]:
    if side == "minus":
        return [
            Splice("minus", L(k), dim_wedge(n, k), M(k - 1), L(k - 1))
            for k in range(n - 1, 0, -1)
        ]
    return [
        Splice("plus", WedgeT(j - 1), dim_wedge(n, j), M(j - 1), WedgeT(j))
        for j in range(1, n)
    ]


def splice_exact(sp: Splice, n: int, cap: int) -> bool:
    """Degreewise alternating-sum check of a splice in raw fiber
    grading: dims(sub) - mult * dims(mid) + dims(quot) = 0."""
    sub = _fiber_dims(sp.sub, n, cap, sp.side)
    mid = _fiber_dims(sp.mid, n, cap, sp.side)
    quot = _fiber_dims(sp.quot, n, cap, sp.side)
    return all(
        sub[d] - sp.mult * mid[d] + quot[d] == 0 for d in range(cap + 1)
    )


# ---------------------------------------------------------------------------
# mutation states and orbits


@dataclass(frozen=True)
class MutationState:
    """W plus one moving summand; `step` counts applied mutations."""

    n: int
    moving: Label
    step: int
    phase: str  # "down" or "up"

    @property
    def summands(self) -> tuple[Label, ...]:
        w = tuple(M(a) for a in range(self.n - 1))
        return w + (normalize_label(self.moving, self.n),)

    def rank(self) -> int:
        return 2 * sum(label_rank(s, self.n) for s in self.summands)


def initial_state(n: int) -> MutationState:
    return MutationState(n, L(n - 1), 0, "down")


@dataclass(frozen=True)
class StepRecord:
    index: int
    state: MutationState
    approximation: tuple[int, Label] | None
    splice_ok: bool | None


def mutate_step(state: MutationState) -> tuple[MutationState, Splice]:
    """One left mutation at W: replace the moving summand along its
    splice.  Descending chains stop at L(0); the orbit driver switches
    to the ascending chain there."""
    n = state.n
    kind, v = state.moving
    if state.phase == "down":
        if kind != "L":
            raise ValueError(f"descending phase expects an L-label, got {state.moving}")
        if v == 0:
            raise ValueError("descending chain exhausted at L(0); restart ascending")
        sp = Splice("minus", L(v), dim_wedge(n, v), M(v - 1), L(v - 1))
        return MutationState(n, L(v - 1), state.step + 1, "down"), sp
    if kind != "WT":
        raise ValueError(f"ascending phase expects a WedgeT-label, got {state.moving}")
    if v == n - 1:
        raise ValueError("ascending chain exhausted at WedgeT(n-1)")
    sp = Splice("plus", WedgeT(v), dim_wedge(n, v + 1), M(v), WedgeT(v + 1))
    return MutationState(n, WedgeT(v + 1), state.step + 1, "up"), sp


@dataclass(frozen=True)
class OrbitReport:
    n: int
    cap: int
    passed: bool
    steps: tuple[StepRecord, ...]
    closed_after: int | None
    early_return: bool
    endpoint_ranks: tuple[int, int]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "cap": self.cap,
            "pass": self.passed,
            "closed_after": self.closed_after,
            "endpoint_ranks": list(self.endpoint_ranks),
            "steps": [
                {
                    "step": r.index,
                    "k": r.state.moving[1],
                    "summands": ["%s(%d)" % s for s in r.state.summands],
                    "approximation_term": (
                        None
                        if r.approximation is None
                        else {"multiplicity": r.approximation[0],
                              "module": "%s(%d)" % r.approximation[1]}
                    ),
                    "hilbert_checks": r.splice_ok,
                }
                for r in self.steps
            ],
        }


def _state_signature(state: MutationState, cap: int):
    return tuple(
        (s, hilbert_of_label(s, state.n, cap).dims) for s in sorted(state.summands)
    )


def orbit_check(n: int, cap: int = 6) -> OrbitReport:
    """Run 2n-2 mutation steps and verify: every splice is degreewise
    exact up to `cap`, the summand multiset (with Hilbert data) returns
    to the start after exactly 2n-2 steps and not earlier, and both
    endpoints have total rank 2n."""
    if n < 3:
        raise ValueError("orbits need n >= 3")
    state = initial_state(n)
    start_sig = _state_signature(state, cap)
    records = [StepRecord(0, state, None, None)]
    passed = True
    closed_after = None
    early = False
    for i in range(2 * n - 2):
        if state.phase == "down" and state.moving == L(0):
            state = MutationState(n, WedgeT(0), state.step, "up")
        new_state, sp = mutate_step(state)
        ok = splice_exact(sp, n, cap)
        passed = passed and ok
        records.append(
            StepRecord(i + 1, new_state, (sp.mult, sp.mid), ok)
        )
        state = new_state
        sig = _state_signature(state, cap)
        if sig == start_sig:
            if closed_after is None:
                closed_after = i + 1
            if i + 1 < 2 * n - 2:
                early = True
    if closed_after != 2 * n - 2 or early:
        passed = False
    e_start = records[0].state.rank()
    e_mid = next(
        r.state for r in records if normalize_label(r.state.moving, n) == M(-1)
    )
    endpoint_ranks = (e_start, e_mid.rank())
    if endpoint_ranks != (2 * n, 2 * n):
        passed = False
    return OrbitReport(
        n=n,
        cap=cap,
        passed=passed,
        steps=tuple(records),
        closed_after=closed_after,
        early_return=early,
        endpoint_ranks=endpoint_ranks,
    )


@dataclass(frozen=True)
class EndpointAlgebraReport:
    n: int
    passed: bool
    tilting_results: tuple
    endpoint_rank: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "pass": self.passed,
            "endpoint_rank": self.endpoint_rank,
            "tilting": [r.as_dict() for r in self.tilting_results],
        }


def endpoint_algebra_check(n: int) -> EndpointAlgebraReport:
    """Every intermediate endomorphism algebra along the chain is the
    endomorphism algebra of a verified tilting bundle of the mixed
    family (index k matching the moving summand), and the two endpoints
    have total rank 2n."""
    if n < 3:
        raise ValueError("needs n >= 3")
    results = []
    ok = True
    for k in range(n):
        for name in ("Sk", "SkDual"):
            rep = tilting_check(TiltingFamily(name, n, k))
            results.append(rep)
            ok = ok and rep.passed
    endpoint_rank = initial_state(n).rank()
    if endpoint_rank != 2 * n:
        ok = False
    return EndpointAlgebraReport(n, ok, tuple(results), endpoint_rank)
