#!/usr/bin/env python3
"""Print gamma tables and timings for the three desk-scale towers."""

import argparse
import time

from asai_gamma.cli import cmd_gamma, render
from asai_gamma.config import RunConfig

ap = argparse.ArgumentParser()
ap.add_argument("--towers", default="2,1,2;3,1,2;2,1,3", help="semicolon-separated p,f,n")
ap.add_argument("--format", default="table", choices=("table", "csv", "jsonl"))
args = ap.parse_args()

for triple in args.towers.split(";"):
    p, f, n = map(int, triple.split(","))
    cfg = RunConfig(p=p, f=f, n=n, format=args.format).validate()
    t0 = time.perf_counter()
    recs = cmd_gamma(cfg)
    dt = time.perf_counter() - t0
    dist = sum(r.distinguished for r in recs)
    print(f"== q={cfg.q} n={n}: {len(recs)} orbits, {dist} distinguished, {dt:.2f}s")
    print(render([r.as_dict() for r in recs], cfg), end="")
