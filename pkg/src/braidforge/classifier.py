"""Mechanical checks of the full-twist hyperbolicity criterion and its corollaries.

A ``Hyperbolic`` verdict means every hypothesis of the criterion was checked
on the given braid (or the parameters match one of the corollary patterns);
it is a claim with a citation, not a geometric certificate. ``Unknown`` is
the default whenever a hypothesis cannot be settled.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Union

from .braid import BraidWord, closure_component_count
from .config import Caps
from .errors import InvalidSpecError, NotAKnotError, ResourceCapExceeded, StepBudgetExceeded
from .families import (
    FactoredBraid,
    TLinkSpec,
    TwistedTorusSpec,
    expand,
    factor_word,
    max_full_width_exponent,
    remove_full_twists,
    tlink_braid,
    tlink_factored,
    twisted_torus_braid,
    twisted_torus_factored,
)
from .invariants import BraidIndexBounds, braid_index_bounds

Classifiable = Union[FactoredBraid, TLinkSpec, TwistedTorusSpec]


class Kind(str, enum.Enum):
    HYPERBOLIC = "Hyperbolic"
    TORUS_KNOT = "TorusKnot"
    NOT_APPLICABLE = "NotApplicable"
    UNKNOWN = "Unknown"


class Justification(str, enum.Enum):
    # values are the stable citation tags of the report format
    FULL_TWIST_CRITERION = "Theorem1"
    SMALL_FACTORS = "Prop4.6"
    T_KNOTS = "Cor1.2"
    POSITIVE_TWISTED_TORUS = "Cor1.3"
    NEGATIVE_TWISTED_TORUS = "Cor1.4"
    EXCLUDED = "Excluded"


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclasses.dataclass
class HypothesisReport:
    checks: list[Check] = dataclasses.field(default_factory=list)
    parameters: dict = dataclasses.field(default_factory=dict)

    def add(self, name: str, holds: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(holds), detail))
        return bool(holds)

    def get(self, name: str) -> Check | None:
        return next((c for c in self.checks if c.name == name), None)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.holds]


@dataclasses.dataclass
class Verdict:
    kind: Kind
    justification: Justification
    report: HypothesisReport = dataclasses.field(default_factory=HypothesisReport)
    detwisted_bounds: BraidIndexBounds | None = None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "justification": self.justification.value,
            "parameters": dict(self.report.parameters),
            "checks": [c.as_dict() for c in self.report.checks],
            "note": self.note,
        }


CRITERION_CHECKS = (
    "positivity",
    "knot_closure",
    "coprime",
    "p_gt_q",
    "q_ge_2",
    "k_ge_2",
    "full_width_factor",
    "not_pure_torus_braid",
    "detwisted_braid_index",
)


def _is_pure_full_width(fb: FactoredBraid) -> bool:
    return len(fb.factors) == 1 and fb.factors[0].i == 1 and fb.factors[0].j == fb.strands


def check_full_twist_criterion(
    fb: FactoredBraid, q: int, k: int, caps: Caps | None = None
) -> tuple[HypothesisReport, Verdict]:
    """Evaluate every hypothesis of the full-twist criterion on a factored positive braid.

    The braid-index hypothesis is settled by removing k full twists from the
    full-width factor and bracketing the index of the result; it holds only
    when both bounds equal q.
    """
    p = fb.strands
    rep = HypothesisReport(parameters={"p": p, "q": q, "k": k})
    word = expand(fb)
    positive = rep.add("positivity", fb.is_positive(), "all factor exponents positive")
    components = closure_component_count(word)
    knot = rep.add("knot_closure", components == 1, f"{components} component(s)")
    rep.add("coprime", math.gcd(p, q) == 1, f"gcd({p},{q}) = {math.gcd(p, q)}")
    rep.add("p_gt_q", p > q, f"p={p}, q={q}")
    rep.add("q_ge_2", q >= 2, f"q={q}")
    rep.add("k_ge_2", k >= 2, f"k={k}")
    m = max_full_width_exponent(fb)
    need = q + p * k
    has_factor = rep.add("full_width_factor", m >= need, f"largest (1,{p},m) factor has m={m}; need m >= {need}")
    pure = _is_pure_full_width(fb)
    rep.add("not_pure_torus_braid", not pure, "braid is a single full-width torus braid" if pure else "")

    bounds = None
    index_error = None
    if has_factor and positive and k >= 1:
        detwisted = remove_full_twists(fb, k)
        try:
            bounds = braid_index_bounds(expand(detwisted), caps)
        except (ResourceCapExceeded, StepBudgetExceeded) as exc:
            index_error = str(exc)
        if bounds is not None:
            rep.add(
                "detwisted_braid_index",
                bounds.lower == bounds.upper == q,
                f"{detwisted}: braid index bounds ({bounds.lower},{bounds.upper}), need exactly {q}",
            )
        else:
            rep.add("detwisted_braid_index", False, f"not evaluated: {index_error}")
    else:
        rep.add("detwisted_braid_index", False, "not evaluated: no removable full twists")

    if pure:
        f = fb.factors[0]
        if knot and min(p, f.r) >= 2:
            return rep, Verdict(Kind.TORUS_KNOT, Justification.EXCLUDED, rep, bounds, f"closure is T({p},{f.r})")
        return rep, Verdict(Kind.NOT_APPLICABLE, Justification.EXCLUDED, rep, bounds, "pure torus braid")
    structural = [n for n in rep.failing() if n != "detwisted_braid_index"]
    if structural:
        return rep, Verdict(
            Kind.NOT_APPLICABLE, Justification.FULL_TWIST_CRITERION, rep, bounds, "failed: " + ", ".join(structural)
        )
    if rep.all_hold:
        return rep, Verdict(Kind.HYPERBOLIC, Justification.FULL_TWIST_CRITERION, rep, bounds)
    if bounds is None or (bounds.exact is None and bounds.lower <= q <= bounds.upper):
        return rep, Verdict(
            Kind.UNKNOWN, Justification.FULL_TWIST_CRITERION, rep, bounds, "braid index of de-twisted braid not pinned"
        )
    return rep, Verdict(
        Kind.NOT_APPLICABLE, Justification.FULL_TWIST_CRITERION, rep, bounds, "failed: detwisted_braid_index"
    )


# interface name kept for callers of the original API
check_theorem1 = check_full_twist_criterion


def small_factor_pattern(fb: FactoredBraid) -> HypothesisReport:
    """One dominant torus factor, every other factor positive and at most q strands wide.

    Form A: p strands with a full-width factor (1, p, q + kp).
    Form B: q + kp strands with a full-width factor exponent p.
    Factors on either side of the dominant one are treated alike.
    """
    rep = HypothesisReport()
    n = fb.strands
    full = [idx for idx, f in enumerate(fb.factors) if f.i == 1 and f.j == n]
    if not rep.add("single_full_width_factor", len(full) == 1, f"{len(full)} full-width factor(s)"):
        return rep
    big = fb.factors[full[0]]
    m = big.r
    if m > n:
        p, k, q = n, m // n, m % n
        form = "A"
    else:
        p, k, q = m, (n // m if m > 0 else 0), (n % m if m > 0 else 0)
        form = "B"
    rep.parameters = {"p": p, "q": q, "k": k, "form": form}
    rep.add("positivity", fb.is_positive())
    rep.add("coprime", p > 0 and math.gcd(p, q) == 1, f"gcd({p},{q})")
    rep.add("p_gt_q", p > q)
    rep.add("q_ge_2", q >= 2, f"q={q}")
    rep.add("k_ge_2", k >= 2, f"k={k}")
    widths = [f.width for idx, f in enumerate(fb.factors) if idx != full[0]]
    rep.add("other_factors", bool(widths), "braid differs from the pure torus braid")
    rep.add(
        "small_widths",
        all(w <= q for w in widths),
        f"widths {widths} must be <= q={q}; factors before and after the dominant one are treated alike",
    )
    return rep


def classify_factored(fb: FactoredBraid, caps: Caps | None = None) -> Verdict:
    if fb.strands < 2:
        return Verdict(Kind.NOT_APPLICABLE, Justification.FULL_TWIST_CRITERION, note="one strand: unknot")
    m = max_full_width_exponent(fb)
    if m <= 0:
        rep = HypothesisReport()
        rep.add("full_width_factor", False, "no positive full-width factor")
        return Verdict(Kind.NOT_APPLICABLE, Justification.FULL_TWIST_CRITERION, rep, note="no full-width factor")
    pattern = small_factor_pattern(fb)
    if pattern.parameters.get("form") == "B" and pattern.all_hold:
        components = closure_component_count(expand(fb))
        if pattern.add("knot_closure", components == 1, f"{components} component(s)"):
            return Verdict(Kind.HYPERBOLIC, Justification.SMALL_FACTORS, pattern)
    p = fb.strands
    _, verdict = check_full_twist_criterion(fb, m % p, m // p, caps)
    if verdict.kind == Kind.UNKNOWN and pattern.all_hold:
        return Verdict(Kind.HYPERBOLIC, Justification.SMALL_FACTORS, pattern, verdict.detwisted_bounds)
    return verdict


def classify_tlink(spec: TLinkSpec) -> Verdict:
    """Parameter-pattern classification of T-knots whose last pair is (p, kp+q) or (kp+q, p)."""
    components = closure_component_count(tlink_braid(spec))
    if components != 1:
        raise NotAKnotError(f"{spec} closes to a {components}-component link")
    rep = HypothesisReport()
    rep.add("knot_closure", True, "1 component")
    if len(spec.pairs) == 1:
        r, s = spec.pairs[0]
        rep.parameters = {"p": r, "q": s}
        if min(r, s) >= 2:
            return Verdict(Kind.TORUS_KNOT, Justification.EXCLUDED, rep, note=f"closure is T({r},{s})")
        return Verdict(Kind.NOT_APPLICABLE, Justification.EXCLUDED, rep, note="closure is the unknot")
    R, S = spec.pairs[-1]
    if R < S:
        p, big = R, S
        form = "A"
    else:
        p, big = S, R
        form = "B"
    k, q = divmod(big, p)
    rep.parameters = {"p": p, "q": q, "k": k, "form": form}
    rep.add("coprime", math.gcd(p, q) == 1, f"gcd({p},{q})")
    rep.add("p_gt_q", p > q)
    rep.add("k_ge_2", k >= 2, f"k={k}")
    earlier = [r for r, _ in spec.pairs[:-1]]
    rep.add("earlier_widths", all(1 < r <= q for r in earlier), f"widths {earlier} must satisfy 1 < r <= q={q}")
    if rep.all_hold:
        return Verdict(Kind.HYPERBOLIC, Justification.T_KNOTS, rep)
    return Verdict(Kind.UNKNOWN, Justification.T_KNOTS, rep, note="no pattern matched: " + ", ".join(rep.failing()))


def ttk_transpose_equiv(spec: TwistedTorusSpec) -> TwistedTorusSpec:
    """Rewrite T(kp+q, p; r, +-1) as the equivalent T(p, kp+q; r, +-1) when the twist fits."""
    P, p, r, s = spec.p, spec.q, spec.r, spec.s
    if P <= p or abs(s) != 1 or p < 2 or r >= p or math.gcd(P, p) != 1:
        return spec
    q = P % p
    if (s == 1 and r <= q) or (s == -1 and r <= p - q):
        return TwistedTorusSpec(p, P, r, s)
    return spec


def classify_twisted_torus(spec: TwistedTorusSpec) -> Verdict:
    norm = ttk_transpose_equiv(spec)
    components = closure_component_count(twisted_torus_braid(norm))
    if components != 1:
        raise NotAKnotError(f"{spec} closes to a {components}-component link")
    rep = HypothesisReport()
    if norm != spec:
        rep.add("transposed", True, f"{spec} is equivalent to {norm}")
    p, Q, r, s = norm.p, norm.q, norm.r, norm.s
    k, q = divmod(Q, p)
    rep.parameters = {"p": p, "q": q, "k": k, "r": r, "s": s}
    rep.add("knot_closure", True, "1 component")
    if s == 1:
        rep.add("coprime", math.gcd(p, q) == 1, f"gcd({p},{q})")
        rep.add("k_ge_2", k >= 2, f"k={k}")
        rep.add("p_gt_q_ge_r_gt_1", p > q >= r > 1, f"p={p}, q={q}, r={r}")
        if rep.all_hold:
            return Verdict(Kind.HYPERBOLIC, Justification.POSITIVE_TWISTED_TORUS, rep)
        return Verdict(Kind.UNKNOWN, Justification.POSITIVE_TWISTED_TORUS, rep, note="failed: " + ", ".join(rep.failing()))
    if s == -1:
        rep.add(
            "coprime",
            q >= 1 and math.gcd(p, q) == 1,
            f"gcd({p},{q})" + ("; q = 1 accepted here although the full-twist criterion needs q >= 2" if q == 1 else ""),
        )
        rep.add("k_ge_3", k >= 3, f"k={k}")
        rep.add("p_gt_q", p > q)
        rep.add("p_minus_q_ge_r_gt_1", p - q >= r > 1, f"p-q={p - q}, r={r}")
        if rep.all_hold:
            return Verdict(Kind.HYPERBOLIC, Justification.NEGATIVE_TWISTED_TORUS, rep, note="q = 1" if q == 1 else "")
        return Verdict(Kind.UNKNOWN, Justification.NEGATIVE_TWISTED_TORUS, rep, note="failed: " + ", ".join(rep.failing()))
    return Verdict(Kind.UNKNOWN, Justification.EXCLUDED, rep, note=f"|s| = {abs(s)} is outside every pattern")


def criterion_for_twisted_torus(spec: TwistedTorusSpec, caps: Caps | None = None) -> tuple[HypothesisReport, Verdict]:
    """Run the full-twist criterion on the factored braid of T(p, kp+q; r, s)."""
    norm = ttk_transpose_equiv(spec)
    k, q = divmod(norm.q, norm.p)
    return check_full_twist_criterion(twisted_torus_factored(norm), q, k, caps)


def detwisted_factored(obj: Classifiable) -> FactoredBraid | None:
    """The braid with k full twists removed, where the full-twist criterion applies."""
    try:
        if isinstance(obj, TwistedTorusSpec):
            norm = ttk_transpose_equiv(obj)
            if norm.s != 1:
                return None
            return remove_full_twists(twisted_torus_factored(norm), norm.q // norm.p)
        if isinstance(obj, TLinkSpec):
            R, S = obj.pairs[-1]
            if len(obj.pairs) > 1 and R < S:
                return remove_full_twists(tlink_factored(obj), S // R)
            return None
        if isinstance(obj, FactoredBraid):
            m = max_full_width_exponent(obj)
            if obj.strands >= 2 and m >= obj.strands and not _is_pure_full_width(obj):
                return remove_full_twists(obj, m // obj.strands)
    except InvalidSpecError:
        return None
    return None


def classify(obj: Classifiable | BraidWord, caps: Caps | None = None) -> Verdict:
    if isinstance(obj, TwistedTorusSpec):
        return classify_twisted_torus(obj)
    if isinstance(obj, TLinkSpec):
        return classify_tlink(obj)
    if isinstance(obj, FactoredBraid):
        return classify_factored(obj, caps)
    if isinstance(obj, BraidWord):
        fb = factor_word(obj)
        if fb is None:
            return Verdict(Kind.NOT_APPLICABLE, Justification.FULL_TWIST_CRITERION, note="no literal torus-braid factorization")
        return classify_factored(fb, caps)
    raise TypeError(f"cannot classify {type(obj).__name__}")


__all__ = [
    "Check",
    "HypothesisReport",
    "Justification",
    "Kind",
    "Verdict",
    "check_full_twist_criterion",
    "check_theorem1",
    "classify",
    "classify_factored",
    "classify_tlink",
    "classify_twisted_torus",
    "detwisted_factored",
    "small_factor_pattern",
    "criterion_for_twisted_torus",
    "ttk_transpose_equiv",
]
