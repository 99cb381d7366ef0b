"""Structured classification reports (the CLI's JSON schema)."""

from __future__ import annotations

from typing import Union

from .braid import BraidWord, closure_component_count, format_braid, is_positive
from .burau import alexander
from .classifier import (
    Classifiable,
    Kind,
    check_full_twist_criterion,
    classify,
    detwisted_factored,
    criterion_for_twisted_torus,
)
from .config import Caps, default_caps
from .errors import InconsistentEvidenceError, ResourceCapExceeded, StepBudgetExceeded
from .families import FactoredBraid, TLinkSpec, TwistedTorusSpec, expand, tlink_braid, tlink_factored, twisted_torus_braid
from .invariants import bennequin_genus, braid_index_bounds, homfly_reduced, torus_knot_match
from .parsing import format_spec

HOMFLY_CONVENTION = "a*P(L+) - a^-1*P(L-) = z*P(L0), P(unknot) = 1"


Reportable = Union[Classifiable, BraidWord]


def braid_of(obj: Reportable) -> BraidWord:
    if isinstance(obj, BraidWord):
        return obj
    if isinstance(obj, FactoredBraid):
        return expand(obj)
    if isinstance(obj, TLinkSpec):
        return tlink_braid(obj)
    if isinstance(obj, TwistedTorusSpec):
        return twisted_torus_braid(obj)
    raise TypeError(f"unsupported input {type(obj).__name__}")


def _capped(errors: list, field: str, fn):
    try:
        return fn()
    except (ResourceCapExceeded, StepBudgetExceeded) as exc:
        errors.append({"field": field, "code": exc.code, "message": str(exc)})
        return None


def invariants_of(word: BraidWord, caps: Caps, errors: list, want=("homfly", "alexander", "genus", "braid_index")) -> dict:
    knot = closure_component_count(word) == 1
    out: dict = {}
    if "homfly" in want:
        P = _capped(errors, "homfly", lambda: homfly_reduced(word, caps))
        out["homfly"] = None if P is None else P.to_triples()
    if "alexander" in want:
        out["alexander"] = alexander(word).to_pairs() if knot else None
    if "genus" in want:
        out["genus"] = bennequin_genus(word) if knot and is_positive(word) else None
    if "braid_index" in want:
        b = _capped(errors, "braid_index", lambda: braid_index_bounds(word, caps))
        out["braid_index"] = None if b is None else b.as_dict()
    return out


def full_report(obj: Reportable, caps: Caps | None = None) -> dict:
    caps = caps or default_caps()
    word = braid_of(obj)
    errors: list = []
    components = closure_component_count(word)
    verdict = classify(obj, caps)

    torus_match = None
    if components == 1:
        torus_match = _capped(errors, "torus_match", lambda: torus_knot_match(word, caps))
    if verdict.kind == Kind.HYPERBOLIC and torus_match is not None:
        raise InconsistentEvidenceError(
            f"{format_spec(obj)}: Hyperbolic verdict but invariants match T{torus_match}"
        )

    detwisted = detwisted_factored(obj) if not isinstance(obj, BraidWord) else None
    detwisted_bounds = verdict.detwisted_bounds
    criterion = None
    if isinstance(obj, TwistedTorusSpec) and obj.s == 1:
        rep, v = criterion_for_twisted_torus(obj, caps)
        criterion = {"kind": v.kind.value, "checks": [c.as_dict() for c in rep.checks], "parameters": rep.parameters}
        detwisted_bounds = v.detwisted_bounds
    elif isinstance(obj, TLinkSpec) and detwisted is not None:
        R, S = obj.pairs[-1]
        rep, v = check_full_twist_criterion(tlink_factored(obj), S % R, S // R, caps)
        criterion = {"kind": v.kind.value, "checks": [c.as_dict() for c in rep.checks], "parameters": rep.parameters}
        detwisted_bounds = v.detwisted_bounds
    if detwisted is not None and detwisted_bounds is None:
        detwisted_bounds = _capped(errors, "detwisted", lambda: braid_index_bounds(expand(detwisted), caps))

    report = {
        "input": format_spec(obj),
        "braid_word": format_braid(word),
        "components": components,
        "homfly_convention": HOMFLY_CONVENTION,
        "invariants": invariants_of(word, caps, errors),
        "torus_match": None if torus_match is None else list(torus_match),
        "detwisted": None
        if detwisted is None
        else {
            "braid": str(detwisted),
            "braid_index": None if detwisted_bounds is None else detwisted_bounds.as_dict(),
        },
        "verdict": verdict.as_dict(),
    }
    if criterion is not None:
        report["full_twist_criterion"] = criterion
    if errors:
        report["errors"] = errors
    return report
