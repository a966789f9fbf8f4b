"""Invariant suites for every module, shared by the CLI and the tests.

Each suite returns a list of :class:`Check` rows.  A check passes when its
measured deviation is below its tolerance (or, for boolean checks, when the
value is true).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from . import asai, bessel, cuspidal, level_zero, matgroup
from .field_tower import Tower


@dataclass
class Check:
    suite: str
    name: str
    value: float | bool
    tol: float | None = None

    @property
    def passed(self) -> bool:
        if self.tol is None:
            return bool(self.value)
        return float(self.value) < self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.tol is None:
            return f"[{status}] {self.suite}: {self.name}"
        return f"[{status}] {self.suite}: {self.name} = {float(self.value):.3e} (tol {self.tol:.0e})"


# ---------------------------------------------------------------------------


def field_suite(tower: Tower, seed: int = 0, samples: int = 10_000) -> list[Check]:
    rng = random.Random(seed)
    tw = tower
    elems = tw.elements("K")
    bad = 0
    for _ in range(samples):
        a, b, c = (rng.choice(elems) for _ in range(3))
        bad += tw.mul(tw.mul(a, b), c) != tw.mul(a, tw.mul(b, c))
        bad += tw.add(tw.add(a, b), c) != tw.add(a, tw.add(b, c))
        bad += tw.mul(a, tw.add(b, c)) != tw.add(tw.mul(a, b), tw.mul(a, c))
        bad += tw.add(a, tw.neg(a)) != 0
        if a:
            bad += tw.mul(a, tw.inv(a)) != 1
    E, F = tw.elements("E"), tw.elements("F")
    frob_closed = all(tw.frob(x, 2) == x for x in E) and all(tw.frob(x, 1) == x for x in F)
    sizes = sum(tw.frob(x, 1) == x for x in elems) == tw.q and sum(tw.frob(x, 2) == x for x in elems) == tw.Q
    trace_in_F = all(tw.in_level(tw.trace_E_F(x), "F") for x in E)
    kernel = [x for x in E if tw.psi_E_arg(x) == 0]
    psi_E_sum = abs(sum(tw.psi_E(x) for x in E))
    psi_F_sum = abs(sum(tw.psi_F(x) for x in F))
    trivial_on_F = max(abs(tw.psi_E(x) - 1) for x in F)
    conj_dev = max(abs(tw.psi_E(tw.frob(x, 1)) - 1 / tw.psi_E(x)) for x in E)
    orth = 0.0
    for a in E:
        s = sum(tw.psi_E(tw.mul(a, x)) for x in E)
        expected = tw.Q if all(abs(tw.psi_E(tw.mul(a, x)) - 1) < 1e-12 for x in E) else 0
        orth = max(orth, abs(s - expected))
    name = "field_tower"
    return [
        Check(name, f"field axioms on {samples} triples", bad == 0),
        Check(name, "exp table period |K^x|", len(set(tw.exp_table.tolist())) == tw.order),
        Check(name, "Frobenius-closed subfields with |F| = q, |E| = q^2", frob_closed and sizes),
        Check(name, "Tr_{E/F} lands in F", trace_in_F),
        Check(name, "kernel of psi_E argument is exactly F", sorted(kernel) == sorted(F)),
        Check(name, "z in E minus F", tw.in_level(tw.z, "E") and not tw.in_level(tw.z, "F")),
        Check(name, "sum psi_F over F", psi_F_sum, 1e-10),
        Check(name, "sum psi_E over E", psi_E_sum, 1e-10),
        Check(name, "psi_E trivial on F", trivial_on_F, 1e-12),
        Check(name, "psi_E(x^q) = psi_E(x)^-1", conj_dev, 1e-12),
        Check(name, "additive orthogonality on E", orth, 1e-9),
    ]


def matgroup_suite(tower: Tower, seed: int = 0, samples: int = 1000) -> list[Check]:
    ctx = matgroup.group_context(tower)
    n, q, Q = tower.n, tower.q, tower.Q
    name = "matgroup"
    ct = ctx.coset_table
    expected_reps = matgroup.gl_order(n, q) // q ** (n * (n - 1) // 2)
    # every u.r canonicalises back to r
    h_reps = ctx.elems[ct.rep_index]
    canon_ok = True
    for u in ctx.elems[ctx.N_F]:
        moved = ctx.arith.matmul(u, h_reps)
        canon_ok &= bool(np.all(matgroup.canonical_reps(ctx.arith, moved, ctx.f_to_e) == ctx.codes[ct.rep_index]))
    # class function on sampled conjugates, through the scalar path
    rng = np.random.default_rng(seed)
    key, _ = ctx.class_keys
    gs, hs = rng.integers(len(ctx.elems), size=samples), rng.integers(len(ctx.elems), size=samples)
    conj = ctx.mul(ctx.mul(hs, gs), ctx.inv[hs])
    vec_ok = bool(np.all(key[conj] == key[gs]))
    scalar_ok = True
    for g, c in list(zip(gs, conj))[: min(samples, 200)]:
        scalar_ok &= matgroup.class_data(tower, ctx.mat(int(g))) == matgroup.class_data(tower, ctx.mat(int(c)))
    return [
        Check(name, "|GL_n(E)|", len(ctx.elems) == matgroup.gl_order(n, Q)),
        Check(name, "|N_n(E)| = Q^{n(n-1)/2}", len(ctx.N_E) == Q ** (n * (n - 1) // 2)),
        Check(name, "|N_n(F) \\ GL_n(F)|", len(ct) == expected_reps),
        Check(name, "canonical coset reps are N_n(F)-stable", canon_ok),
        Check(name, "conjugacy key is a class function", vec_ok),
        Check(name, "class_data is a class function (scalar)", scalar_ok),
        Check(name, "tau is an involution", bool(np.all(ctx.tau[ctx.tau] == np.arange(len(ctx.elems))))),
        Check(name, "tilde is an involution", bool(np.all(ctx.tilde[ctx.tilde] == np.arange(len(ctx.elems))))),
    ]


def cuspidal_suite(tower: Tower, tol: float = 1e-6) -> list[Check]:
    ctx = matgroup.group_context(tower)
    reps = cuspidal.list_cuspidal(tower)
    tables = np.array([cuspidal.character_table(r, ctx) for r in reps])
    gram = tables.conj() @ tables.T / len(ctx.elems)
    name = "cuspidal"
    out = [
        Check(name, f"{len(reps)} orbits = (#regular)/n", len(reps) * tower.n == sum(tower.is_regular(k) for k in range(tower.order))),
        Check(name, "<chi, chi'> = delta", float(np.max(np.abs(gram - np.eye(len(reps))))), tol),
    ]
    rad, pf, ne, pe, dim = 0.0, 0.0, 0.0, 0.0, 0.0
    for r, chi in zip(reps, tables):
        for comp in ctx.proper_compositions():
            rad = max(rad, abs(chi[ctx.radical(comp)].mean()))
        pf = max(pf, abs(chi[ctx.P_F].mean() - 1))
        ne = max(ne, abs(chi[ctx.N_E].mean()))
        pe = max(pe, abs(np.mean(np.abs(chi[ctx.P_E]) ** 2) - 1))
        ident = ctx.index_of(matgroup.identity(tower.n))
        dim = max(dim, abs(chi[ident] - r.dim))
    out += [
        Check(name, "chi(1) = prod (Q^i - 1)", dim, tol),
        Check(name, "parabolic radical averages = 0", rad, tol),
        Check(name, "avg over P_n(F) = 1", pf, tol),
        Check(name, "avg over N_n(E) = 0", ne, tol),
        Check(name, "|chi|^2 avg over P_n(E) = 1", pe, tol),
    ]
    return out


def bessel_suite(tower: Tower, seed: int = 0, tol: float = 1e-8) -> list[Check]:
    ctx = matgroup.group_context(tower)
    exhaustive = len(ctx.elems) * len(ctx.N_E) ** 2 <= 10_000
    worst: dict[str, float] = {}
    triples = 0
    for r in cuspidal.list_cuspidal(tower):
        rep = bessel.verify_bessel_suite(r, None if exhaustive else 1000, seed, ctx)
        triples = rep["triples"]
        for k in ("identity", "equivariance", "support", "on_N", "conjugation", "contragredient"):
            worst[k] = max(worst.get(k, 0.0), float(rep[k]))
    r0 = cuspidal.list_cuspidal(tower)[0]
    picks = np.linspace(0, len(ctx.elems) - 1, 5).astype(int)
    scalar_dev = bessel.check_scalar_against_table(r0, picks, ctx)
    name = "bessel"
    return [
        Check(name, "B(1) = 1", worst["identity"], tol),
        Check(name, f"bi-equivariance ({triples} triples per rep)", worst["equivariance"], tol),
        Check(name, "B on P_n(E) supported on N_n(E)", worst["support"], tol),
        Check(name, "B(u) = psi_E(u) on N_n(E)", worst["on_N"], tol),
        Check(name, "B(g^-1) = conj B(g)", worst["conjugation"], tol),
        Check(name, "B of (pi~, psi_E^-1) = conj B", worst["contragredient"], tol),
        Check(name, "direct sum matches table", scalar_dev, tol),
    ]


def fourier_inversion_dev(tower: Tower) -> float:
    q, n = tower.q, tower.n
    fwd = asai.pairing_matrix(tower, 1)
    back = asai.pairing_matrix(tower, -1)
    basis = np.eye(q**n)
    return float(np.max(np.abs(basis @ fwd @ back - q**n * basis)))


def asai_suite(tower: Tower, tol: float = 1e-8) -> tuple[list[Check], list[dict]]:
    ctx = matgroup.group_context(tower)
    q, n = tower.q, tower.n
    rows = []
    worst = dict(route=0.0, dispersion=0.0, extended=0.0, dich=0.0, dual_prod=0.0, dual_conj=0.0, coset=0.0)
    agree = True
    for r in cuspidal.list_cuspidal(tower):
        try:
            d = asai.distinction(r, ctx)
        except (asai.CriteriaDisagreement, cuspidal.NonIntegralError):
            agree = False
            continue
        gb = asai.gamma_bessel(r, ctx=ctx)
        fe = asai.gamma_fe(r, ctx=ctx)
        gd = asai.gamma_dual(r, ctx)
        worst["route"] = max(worst["route"], abs(gb - fe.gamma))
        worst["dispersion"] = max(worst["dispersion"], fe.dispersion)
        worst["dual_conj"] = max(worst["dual_conj"], abs(gb.conjugate() - gd))
        if d.distinguished:
            worst["dich"] = max(worst["dich"], abs(gb + 1))
            worst["coset"] = max(worst["coset"], abs(d.coset_sum - (q**n - 1)))
        else:
            worst["dich"] = max(worst["dich"], abs(abs(gb) - q ** (n / 2)))
            worst["extended"] = max(worst["extended"], fe.extended_residual, fe.extended_dispersion)
            worst["dual_prod"] = max(worst["dual_prod"], abs(gb * gd - q**n))
        rows.append(dict(rep=r, distinction=d, gamma=gb, fe=fe, dual=gd))
    name = "asai"
    checks = [
        Check(name, "Fourier inversion F_psi^-1 F_psi = q^n", fourier_inversion_dev(tower), 1e-10),
        Check(name, "four distinction criteria agree", agree),
        Check(name, "gamma_bessel = gamma_fe", worst["route"], tol),
        Check(name, "FE ratio constant (phi(0) = 0)", worst["dispersion"], tol),
        Check(name, "FE holds for phi(0) != 0 when not distinguished", worst["extended"], tol),
        Check(name, "gamma = -1 or |gamma| = q^{n/2}", worst["dich"], tol),
        Check(name, "gamma(pi) gamma(pi~, psi^-1) = q^n (not distinguished)", worst["dual_prod"], 1e-6),
        Check(name, "conj gamma(pi) = gamma(pi~, psi^-1)", worst["dual_conj"], tol),
        Check(name, "coset sum = q^n - 1 (distinguished)", worst["coset"], 1e-6),
    ]
    return checks, rows


def sample_lambdas(count: int = 20, seed: int = 0) -> list[complex]:
    """Half on the unit circle, half off it."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        phase = np.exp(2j * np.pi * rng.random())
        radius = 1.0 if i % 2 == 0 else float(rng.uniform(0.2, 5.0))
        out.append(complex(radius * phase))
    return out


def level_zero_suite(tower: Tower | None = None, rows: list[dict] | None = None, seed: int = 0) -> list[Check]:
    lambdas = sample_lambdas(20, seed)
    eq3, c3_ok, closed, poles_ok, const_ok = 0.0, True, True, True, True
    qs = [2, 3] if tower is None else [tower.q]
    for q in qs:
        for n in (2, 3):
            for lam in lambdas:
                res = level_zero.epsilon_check(n, lam, q)
                eq3 = max(eq3, res.eq3_deviation)
                c3_ok &= res.c3 == n and abs(res.c2_vol - 1 / lam) < 1e-10
                closed &= res.closed_form_matches
                poles_ok &= len(level_zero.distinct_poles(level_zero.asai_L(n, lam))) == n
                const_ok &= level_zero.local_gamma_vol(n, lam, 2.5 - 1j, 0, q).is_constant()
    fed = True
    for row in rows or []:
        if row["distinction"].distinguished:
            for lam in lambdas[:5]:
                res = level_zero.epsilon_check(
                    tower.n, lam, tower.q, gamma_finite=row["gamma"], c1=row["distinction"].coset_sum
                )
                fed &= res.c3 == tower.n
    name = "level_zero"
    return [
        Check(name, "cross-multiplied epsilon identity (20 lambdas, n = 2, 3)", eq3, 1e-10),
        Check(name, "epsilon monomial with c3 = n, c2 = 1/lambda", c3_ok),
        Check(name, "epsilon matches closed form", closed),
        Check(name, "L-factor has n distinct poles", poles_ok),
        Check(name, "vol*gamma is s-independent when c1 = 0", const_ok),
        Check(name, "finite-field distinguished reps feed epsilon_check", fed),
    ]


def run_all(tower: Tower, seed: int = 0) -> tuple[list[Check], dict]:
    t0 = time.perf_counter()
    checks = field_suite(tower, seed)
    checks += matgroup_suite(tower, seed)
    checks += cuspidal_suite(tower)
    checks += bessel_suite(tower, seed)
    asai_checks, rows = asai_suite(tower)
    checks += asai_checks
    checks += level_zero_suite(tower, rows, seed)
    return checks, {"seconds": time.perf_counter() - t0, "orbits": len(rows)}
