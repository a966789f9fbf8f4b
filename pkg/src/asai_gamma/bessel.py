"""Bessel function of a cuspidal representation.

    B(g) = |N_n(E)|^{-1} sum_{u in N_n(E)} psi_E(u)^{-1} chi_pi(g u)

normalised so that B(1) = 1.  ``sign=-1`` replaces psi_E by its inverse,
which together with the contragredient gives the Bessel function of
(pi~, psi_E^{-1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cuspidal import CuspidalRep, character, character_table, contragredient
from .matgroup import (
    GroupContext,
    Mat,
    enumerate_unipotent,
    group_context,
    inverse,
    matmul,
    psi_N,
)

BESSEL_TOL = 1e-8


def bessel(rep: CuspidalRep, g: Mat, sign: int = 1) -> complex:
    """Direct evaluation of the defining character sum (reference path)."""
    tw = rep.tower
    total = 0j
    count = 0
    for u in enumerate_unipotent(tw, rep.n, "E"):
        total += psi_N(tw, u, -sign) * character(rep, matmul(tw, g, u))
        count += 1
    return total / count


def bessel_tilde(rep: CuspidalRep, g: Mat) -> complex:
    """Bessel function of the contragredient with respect to psi_E^{-1}."""
    return bessel(contragredient(rep), g, sign=-1)


def right_unipotent_products(ctx: GroupContext) -> np.ndarray:
    """Array of shape (|N_n(E)|, |G|): index of g u for every u, g."""
    cached = getattr(ctx, "_right_N", None)
    if cached is None:
        a = ctx.arith
        cached = np.stack([ctx.index(a.matmul(ctx.elems, u)).astype(np.int32) for u in ctx.unip_E])
        ctx._right_N = cached
    return cached


def bessel_table(rep: CuspidalRep, ctx: GroupContext | None = None, sign: int = 1) -> np.ndarray:
    """B on all of G, summing over N_n(E) in its fixed enumeration order."""
    ctx = ctx or group_context(rep.tower)
    chi = character_table(rep, ctx)
    prods = right_unipotent_products(ctx)
    weights = ctx.psiN_E.conj() if sign == 1 else ctx.psiN_E
    out = np.zeros(len(chi), dtype=complex)
    for w, idx in zip(weights, prods):
        out += w * chi[idx]
    return out / len(weights)


@dataclass(eq=False)
class BesselFn:
    """Memoised Bessel function; ``table`` holds every value on G."""

    rep: CuspidalRep
    sign: int = 1
    cache: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ctx = group_context(self.rep.tower)
        self._table = None

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = bessel_table(self.rep, self.ctx, self.sign)
        return self._table

    def __call__(self, g: Mat) -> complex:
        if g not in self.cache:
            self.cache[g] = complex(self.table[self.ctx.index_of(g)])
        return self.cache[g]


def verify_bessel_suite(
    rep: CuspidalRep,
    sample_size: int | None = 1000,
    seed: int = 0,
    ctx: GroupContext | None = None,
) -> dict:
    """Maximum deviations of the defining properties of B.

    ``sample_size=None`` runs the equivariance check over every triple
    (u1, g, u2).  The returned dict carries ``ok`` (all deviations below
    ``BESSEL_TOL``) alongside the individual deviations.
    """
    ctx = ctx or group_context(rep.tower)
    B = bessel_table(rep, ctx)
    psi = ctx.psiN_E
    identity_idx = ctx.index_of(Mat.from_rows([[int(i == j) for j in range(rep.n)] for i in range(rep.n)]))
    report = {"identity": abs(B[identity_idx] - 1)}

    nN, nG = len(ctx.N_E), len(ctx.elems)
    if sample_size is None:
        i1, ig, i2 = (a.ravel() for a in np.meshgrid(np.arange(nN), np.arange(nG), np.arange(nN), indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        i1, ig, i2 = rng.integers(nN, size=sample_size), rng.integers(nG, size=sample_size), rng.integers(nN, size=sample_size)
    triple = ctx.mul(ctx.mul(ctx.N_E[i1], ig), ctx.N_E[i2])
    report["equivariance"] = float(np.max(np.abs(B[triple] - psi[i1] * psi[i2] * B[ig])))
    report["triples"] = len(ig)

    outside = np.setdiff1d(ctx.P_E, ctx.N_E)
    report["support"] = float(np.max(np.abs(B[outside]))) if len(outside) else 0.0
    inN = ctx.N_E
    report["on_N"] = float(np.max(np.abs(B[inN] - psi)))
    report["conjugation"] = float(np.max(np.abs(B[ctx.inv] - B.conj())))
    tilde = bessel_table(contragredient(rep), ctx, sign=-1)
    report["contragredient"] = float(np.max(np.abs(tilde - B.conj())))
    report["ok"] = all(
        report[k] < BESSEL_TOL for k in ("identity", "equivariance", "support", "on_N", "conjugation", "contragredient")
    )
    return report


def check_scalar_against_table(rep: CuspidalRep, indices, ctx: GroupContext | None = None) -> float:
    """Max deviation between the direct sum and the vectorised table."""
    ctx = ctx or group_context(rep.tower)
    B = bessel_table(rep, ctx)
    return max(abs(bessel(rep, ctx.mat(int(i))) - B[i]) for i in indices)


def bessel_inverse_identity(rep: CuspidalRep, g: Mat) -> tuple[complex, complex, complex]:
    """(B(g^{-1}), conj B(g), B~(g)) for one element."""
    tw = rep.tower
    b = bessel(rep, g)
    return bessel(rep, inverse(tw, g)), b.conjugate(), bessel_tilde(rep, g)
