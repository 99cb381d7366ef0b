"""Run the twisted torus, T-knot and torus control sweeps and write one table per family."""

from __future__ import annotations

import argparse
import collections
import dataclasses
import pathlib

from braidforge.sweep import SweepRange, rows_to_csv, rows_to_json, run_sweep


@dataclasses.dataclass(frozen=True)
class Experiment:
    name: str
    sweep: SweepRange


EXPERIMENTS = (
    Experiment("ttk_positive", SweepRange("ttk", "3..6", k="2..3", s=1)),
    Experiment("ttk_negative", SweepRange("ttk", "3..6", k="3", s=-1)),
    Experiment("tlink", SweepRange("tlink", "2..6", k="2", r1="2..q", s1="1..3")),
    Experiment("torus_control", SweepRange("torus", "2..7", q_max=7)),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--format", choices=("json", "csv"), default="csv")
    parser.add_argument("--jobs", type=int, default=None)
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for exp in EXPERIMENTS:
        rows = run_sweep(exp.sweep, jobs=args.jobs)
        text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
        path = out / f"{exp.name}.{args.format}"
        path.write_text(text, encoding="utf-8")
        tally = collections.Counter(
            row["error"]["code"] if row["error"] else f"{row['kind']}/{row['justification']}" for row in rows
        )
        print(f"{exp.name:14s} {len(rows):4d} rows -> {path}  {dict(sorted(tally.items()))}")


if __name__ == "__main__":
    main()
