#!/usr/bin/env python3
"""Rewrite golden/*.jsonl, refusing if the two gamma routes disagree on any orbit."""

import sys
from pathlib import Path

from asai_gamma.cli import cmd_gamma, record_ok, render
from asai_gamma.config import RunConfig

TOWERS = [(2, 1, 2), (3, 1, 2), (2, 1, 3)]
ROOT = Path(__file__).resolve().parent.parent / "golden"


def main() -> int:
    ROOT.mkdir(exist_ok=True)
    for p, f, n in TOWERS:
        cfg = RunConfig(p=p, f=f, n=n).validate()
        recs = cmd_gamma(cfg)
        bad = [r for r in recs if not record_ok(r, cfg.tol)]
        if bad:
            print(f"q={cfg.q} n={n}: {len(bad)} records fail the route/dichotomy check", file=sys.stderr)
            return 1
        path = ROOT / f"q{cfg.q}_n{n}.jsonl"
        path.write_text(render([r.as_dict() for r in recs], cfg, "jsonl"), encoding="utf-8")
        print(f"{path.name}: {len(recs)} orbits")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
