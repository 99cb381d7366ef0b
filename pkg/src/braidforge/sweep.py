"""Parameter sweeps over the twisted torus, T-link and torus braid families."""

from __future__ import annotations

import ast
import concurrent.futures
import csv
import dataclasses
import io
import json
import math
import operator
import os
from typing import Iterator

from .config import Caps, default_caps
from .errors import BraidForgeError, InvalidSpecError
from .families import FactoredBraid, TLinkSpec, TorusBraidFactor, TwistedTorusSpec
from .parsing import format_spec
from .report import full_report

FAMILIES = ("ttk", "tlink", "torus")
CSV_COLUMNS = (
    "family", "p", "q", "k", "r", "s", "form", "spec", "kind", "justification",
    "detwisted_lower", "detwisted_upper", "torus_match", "error",
)

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv}


def eval_bound(expr: str, env: dict[str, int]) -> int:
    """Integer arithmetic over the names in ``env`` (``p``, ``q``, ``k``); only + - * //."""

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise InvalidSpecError(f"unsupported range expression {expr!r}")

    try:
        return ev(ast.parse(expr.strip(), mode="eval"))
    except SyntaxError as exc:
        raise InvalidSpecError(f"bad range expression {expr!r}") from exc


def expand_range(text: str, env: dict[str, int] | None = None) -> list[int]:
    """``3``, ``2,3,5``, ``2..q`` or ``1..p-q``; bounds may refer to earlier parameters."""
    env = env or {}
    values: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(eval_bound(lo, env), eval_bound(hi, env) + 1))
        else:
            values.append(eval_bound(part, env))
    return values


@dataclasses.dataclass(frozen=True)
class SweepRange:
    family: str
    p: str
    q: str = "coprime"
    k: str = "2"
    r: str | None = None
    s: int = 1
    r1: str = "2..q"
    s1: str = "1..3"
    form: str = "both"
    q_max: int = 7

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpecError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.s not in (1, -1):
            raise InvalidSpecError("s must be 1 or -1")
        if self.form not in ("A", "B", "both"):
            raise InvalidSpecError("form must be A, B or both")

    def _q_values(self, p: int) -> list[int]:
        if self.q == "coprime":
            if self.family == "torus":
                return [q for q in range(2, self.q_max + 1) if q != p and math.gcd(p, q) == 1]
            return [q for q in range(1, p) if math.gcd(p, q) == 1]
        return expand_range(self.q, {"p": p})

    def points(self) -> Iterator[dict]:
        """Parameter dicts in lexicographic order."""
        for p in sorted(set(expand_range(self.p))):
            for q in sorted(set(self._q_values(p))):
                env = {"p": p, "q": q}
                if self.family == "torus":
                    yield {"family": "torus", "p": p, "q": q}
                    continue
                for k in sorted(set(expand_range(self.k, env))):
                    env["k"] = k
                    if self.family == "ttk":
                        r_text = self.r or ("2..q" if self.s == 1 else "2..p-q")
                        for r in sorted(set(expand_range(r_text, env))):
                            yield {"family": "ttk", "p": p, "q": q, "k": k, "r": r, "s": self.s}
                    else:
                        for r in sorted(set(expand_range(self.r1, env))):
                            for s in sorted(set(expand_range(self.s1, env))):
                                for form in ("A", "B") if self.form == "both" else (self.form,):
                                    yield {"family": "tlink", "p": p, "q": q, "k": k, "r": r, "s": s, "form": form}


def spec_for(point: dict):
    p, q = point["p"], point["q"]
    if point["family"] == "torus":
        return FactoredBraid(p, (TorusBraidFactor(1, p, q),))
    k = point["k"]
    m = k * p + q
    if point["family"] == "ttk":
        return TwistedTorusSpec(p, m, point["r"], point["s"])
    last = (p, m) if point["form"] == "A" else (m, p)
    return TLinkSpec(((point["r"], point["s"]), last))


def sweep_row(point: dict, caps: Caps | None = None) -> dict:
    row = dict(point)
    row.update(spec=None, kind=None, justification=None, detwisted=None, torus_match=None, error=None)
    try:
        spec = spec_for(point)
        row["spec"] = format_spec(spec)
        rep = full_report(spec, caps)
    except BraidForgeError as exc:
        row["error"] = {"code": exc.code, "message": str(exc)}
        return row
    row["kind"] = rep["verdict"]["kind"]
    row["justification"] = rep["verdict"]["justification"]
    if rep["detwisted"] is not None:
        row["detwisted"] = rep["detwisted"]["braid_index"]
    row["torus_match"] = rep["torus_match"]
    if rep.get("errors"):
        row["error"] = {"code": "partial", "message": json.dumps(rep["errors"], sort_keys=True)}
    return row


def _row_job(args: tuple[dict, Caps]) -> dict:
    return sweep_row(*args)


def run_sweep(rng: SweepRange, jobs: int | None = None, caps: Caps | None = None) -> list[dict]:
    """Rows in parameter order; with ``jobs`` > 1 rows are computed in a process pool."""
    caps = caps or default_caps()
    points = list(rng.points())
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(points) <= 1:
        return [sweep_row(pt, caps) for pt in points]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_job, [(pt, caps) for pt in points], chunksize=4))


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, sort_keys=True, indent=1) + "\n"


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        det = row.get("detwisted") or {}
        err = row.get("error")
        match = row.get("torus_match")
        writer.writerow({
            **{c: row.get(c, "") for c in ("family", "p", "q", "k", "r", "s", "form", "spec", "kind", "justification")},
            "detwisted_lower": det.get("lower", ""),
            "detwisted_upper": det.get("upper", ""),
            "torus_match": "" if match is None else f"{match[0]}x{match[1]}",
            "error": "" if err is None else err["code"],
        })
    return buf.getvalue()
