#!/usr/bin/env python3
"""Gamma values for every admissible z (the element defining psi_E).

Only records how gamma moves with z; nothing is asserted about invariance.
"""

import argparse

from asai_gamma import asai, cuspidal
from asai_gamma.field_tower import build_tower
from asai_gamma.matgroup import group_context

ap = argparse.ArgumentParser()
ap.add_argument("--p", type=int, default=2)
ap.add_argument("--f", type=int, default=1)
ap.add_argument("--n", type=int, default=2)
args = ap.parse_args()

base = build_tower(args.p, args.f, args.n)
step_E, step_F = base.step["E"], base.step["F"]
z_logs = [j for j in range(0, base.order, step_E) if j % step_F]
print(f"q={base.q} n={base.n}: {len(z_logs)} choices of z")
for z in z_logs:
    tw = build_tower(args.p, args.f, args.n, z_log=z)
    ctx = group_context(tw)
    cells = []
    for rep in cuspidal.list_cuspidal(tw):
        g = asai.gamma_bessel(rep, ctx=ctx)
        cells.append(f"{rep.k}:{g.real:+.4f}{g.imag:+.4f}i")
    print(f"z=g^{z:<4d} " + "  ".join(cells))
