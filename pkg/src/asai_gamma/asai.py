"""Asai zeta sums, gamma factor (two routes) and the distinction criteria.

Z(W, phi; psi) = sum_{g in N_n(F)\\H} W(g) phi(e_n g)

The gamma factor is the constant with

    gamma * Z(W, phi; psi) = Z(W~, F_psi phi; psi^{-1})

for phi vanishing at 0.  :func:`gamma_fe` recovers it as that ratio over a
spanning set of Whittaker functions and test functions; :func:`gamma_bessel`
evaluates the closed form sum_g B(g) psi((g^{-1})_{n,1}).  Each route is the
oracle for the other.

Throughout, ``sign=-1`` means "use psi^{-1} (and psi_E^{-1})".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .bessel import bessel_table
from .cuspidal import (
    CuspidalRep,
    as_integer,
    avg_over,
    character_table,
    contragredient,
)
from .matgroup import GroupContext, Mat, group_context

FE_TOL = 1e-8
ZERO_DENOM = 1e-6
MAX_TRANSLATES = 5000
SAMPLED_TRANSLATES = 200


class CriteriaDisagreement(AssertionError):
    """The distinction criteria returned different verdicts."""


class FunctionalEquationError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# functions on F^n


def vectors(q: int, n: int) -> np.ndarray:
    """All of F^n as F level codes, first coordinate most significant."""
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64)


def vector_index(x, q: int) -> int:
    out = 0
    for c in x:
        out = out * q + int(c)
    return out


@dataclass(frozen=True, eq=False)
class SchwartzFn:
    n: int
    q: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.values) != self.q**self.n:
            raise ValueError("table length must be q^n")

    def __call__(self, x) -> complex:
        return complex(self.values[vector_index(x, self.q)])

    def __add__(self, other: SchwartzFn) -> SchwartzFn:
        return SchwartzFn(self.n, self.q, self.values + other.values)

    def __mul__(self, c) -> SchwartzFn:
        return SchwartzFn(self.n, self.q, c * self.values)

    __rmul__ = __mul__

    @property
    def at_zero(self) -> complex:
        return complex(self.values[0])

    @classmethod
    def delta(cls, x, q: int) -> SchwartzFn:
        n = len(x)
        v = np.zeros(q**n, dtype=complex)
        v[vector_index(x, q)] = 1
        return cls(n, q, v)

    @classmethod
    def constant(cls, n: int, q: int, c: complex = 1) -> SchwartzFn:
        return cls(n, q, np.full(q**n, c, dtype=complex))


def delta0(n: int, q: int) -> SchwartzFn:
    return SchwartzFn.delta([0] * n, q)


def phi_n(n: int, q: int) -> SchwartzFn:
    """Indicator of e_n = (0, ..., 0, 1)."""
    return SchwartzFn.delta([0] * (n - 1) + [1], q)


def pairing_matrix(tower, sign: int = 1) -> np.ndarray:
    """M[x, y] = psi(sign <x, y>) over F^n."""
    tF = tower.tables["F"]
    vs = vectors(tower.q, tower.n)
    acc = tF.mul[vs[:, None, 0], vs[None, :, 0]]
    for i in range(1, tower.n):
        acc = tF.add[acc, tF.mul[vs[:, None, i], vs[None, :, i]]]
    psi = tF.psi[acc]
    return psi if sign == 1 else psi.conj()


def fourier(tower, phi: SchwartzFn, sign: int = 1) -> SchwartzFn:
    """(F phi)(y) = sum_x phi(x) psi(sign <x, y>)."""
    return SchwartzFn(phi.n, phi.q, phi.values @ pairing_matrix(tower, sign))


# ---------------------------------------------------------------------------
# Whittaker functions as combinations of right translates of B


@dataclass(frozen=True, eq=False)
class WhittakerElem:
    """W(g) = sum_i c_i B(g h_i), h_i given as element indices of G."""

    rep: CuspidalRep
    terms: tuple[tuple[complex, int], ...]
    sign: int = 1

    @classmethod
    def translate(cls, rep: CuspidalRep, h: Mat | int = None, sign: int = 1) -> WhittakerElem:
        ctx = group_context(rep.tower)
        if h is None:
            h = ctx.index_of(Mat.from_rows([[int(i == j) for j in range(rep.n)] for i in range(rep.n)]))
        elif isinstance(h, Mat):
            h = ctx.index_of(h)
        return cls(rep, ((1.0, int(h)),), sign)

    def __add__(self, other: WhittakerElem) -> WhittakerElem:
        return WhittakerElem(self.rep, self.terms + other.terms, self.sign)

    def __rmul__(self, c) -> WhittakerElem:
        return WhittakerElem(self.rep, tuple((c * a, h) for a, h in self.terms), self.sign)

    def values(self, idx: np.ndarray, ctx: GroupContext | None = None) -> np.ndarray:
        ctx = ctx or group_context(self.rep.tower)
        B = _bessel_cached(self.rep, ctx, self.sign)
        idx = np.asarray(idx)
        out = np.zeros(idx.shape, dtype=complex)
        for c, h in self.terms:
            out += c * B[ctx.mul(idx, h)]
        return out

    def __call__(self, g: Mat) -> complex:
        ctx = group_context(self.rep.tower)
        return complex(self.values(np.array([ctx.index_of(g)]), ctx)[0])


@dataclass(frozen=True, eq=False)
class TildeW:
    """W~(g) = W(omega_n . transpose(g)^{-1})."""

    inner: object

    def values(self, idx: np.ndarray, ctx: GroupContext | None = None) -> np.ndarray:
        ctx = ctx or group_context(self.inner.rep.tower)
        return self.inner.values(ctx.tilde[np.asarray(idx)], ctx)

    @property
    def rep(self):
        return self.inner.rep


def tilde(W) -> TildeW:
    return TildeW(W)


_BESSEL_CACHE: dict = {}


def _bessel_cached(rep: CuspidalRep, ctx: GroupContext, sign: int) -> np.ndarray:
    key = (rep.tower.key, rep.k, sign, id(ctx))
    if key not in _BESSEL_CACHE:
        _BESSEL_CACHE[key] = bessel_table(rep, ctx, sign)
    return _BESSEL_CACHE[key]


def e_to_f(ctx: GroupContext) -> np.ndarray:
    """E level code -> F level code, -1 off F."""
    out = np.full(ctx.Q, -1, dtype=np.int64)
    out[ctx.f_to_e] = np.arange(ctx.q)
    return out


def last_row_index(ctx: GroupContext, idx: np.ndarray) -> np.ndarray:
    """Index into F^n of e_n g for g in H."""
    rows = e_to_f(ctx)[ctx.elems[idx, -1, :]]
    if np.any(rows < 0):
        raise ValueError("element not in GL_n(F)")
    return rows @ (ctx.q ** np.arange(ctx.n - 1, -1, -1))


def zeta(W, phi: SchwartzFn, ctx: GroupContext | None = None) -> complex:
    """Z(W, phi) = sum over canonical N_n(F)\\H reps of W(g) phi(e_n g)."""
    ctx = ctx or group_context(W.rep.tower)
    reps = ctx.coset_table.rep_index
    return complex(np.sum(W.values(reps, ctx) * phi.values[last_row_index(ctx, reps)]))


# ---------------------------------------------------------------------------
# gamma


def gamma_bessel(rep: CuspidalRep, sign: int = 1, ctx: GroupContext | None = None) -> complex:
    """sum_{g in N_n(F)\\H} B(g) psi(<e_n g^{-1}, e_1>)."""
    ctx = ctx or group_context(rep.tower)
    reps = ctx.coset_table.rep_index
    B = _bessel_cached(rep, ctx, sign)
    corner = e_to_f(ctx)[ctx.elems[ctx.inv[reps], -1, 0]]
    psi = ctx.tF.psi[corner]
    if sign == -1:
        psi = psi.conj()
    return complex(np.sum(B[reps] * psi))


def gamma_dual(rep: CuspidalRep, ctx: GroupContext | None = None) -> complex:
    """gamma(pi~, psi^{-1})."""
    return gamma_bessel(contragredient(rep), sign=-1, ctx=ctx)


@dataclass
class FEReport:
    gamma: complex
    dispersion: float  # max |ratio - gamma| over pairs with phi(0) = 0
    pairs: int  # usable pairs with phi(0) = 0
    translates: int
    extended_dispersion: float  # same over phi with phi(0) != 0
    extended_residual: float  # max |gamma Z - Z~| over phi with phi(0) != 0
    extended_pairs: int

    @property
    def ok(self) -> bool:
        return self.dispersion < FE_TOL


def translate_set(ctx: GroupContext, limit: int = MAX_TRANSLATES) -> np.ndarray:
    """Canonical N_n(E)\\G reps when few enough, else a seeded sample (identity first)."""
    if len(ctx.elems) // len(ctx.N_E) <= limit:
        return ctx.coset_reps_E
    tw = ctx.tower
    rng = np.random.default_rng([tw.p, tw.f, tw.n, tw.z_log])
    picks = rng.choice(len(ctx.elems), size=SAMPLED_TRANSLATES - 1, replace=False)
    ident = ctx.index_of(Mat.from_rows([[int(i == j) for j in range(ctx.n)] for i in range(ctx.n)]))
    return np.concatenate([[ident], picks])


def gamma_fe(rep: CuspidalRep, sign: int = 1, ctx: GroupContext | None = None, translates=None) -> FEReport:
    """gamma as the constant ratio Z(W~, F phi) / Z(W, phi).

    W runs over right translates of B by ``translates`` (default
    :func:`translate_set`), phi over point indicators at nonzero x.  The
    extended set adds delta_0 to every point indicator and also uses the
    constant function; there the equation only holds for non-distinguished
    representations.
    """
    ctx = ctx or group_context(rep.tower)
    tw, n, q = rep.tower, rep.n, rep.tower.q
    reps = ctx.coset_table.rep_index
    hs = translate_set(ctx) if translates is None else np.asarray(translates)
    B = _bessel_cached(rep, ctx, sign)

    W = B[ctx.mul(reps[None, :], hs[:, None])]  # (translates, cosets)
    Wt = B[ctx.mul(ctx.tilde[reps][None, :], hs[:, None])]

    rows = last_row_index(ctx, reps)
    size = q**n
    basis = np.eye(size, dtype=complex)[1:]  # delta_x, x != 0
    extended = np.vstack([basis + np.eye(size)[0], np.ones((1, size))])
    pm = pairing_matrix(tw, sign)

    def sides(phis):
        z1 = W @ phis[:, rows].T
        z2 = Wt @ (phis @ pm)[:, rows].T
        return z1, z2

    z1, z2 = sides(basis)
    usable = np.abs(z1) > ZERO_DENOM
    if not usable.any():
        raise FunctionalEquationError("every zeta sum vanished")
    ratios = z2[usable] / z1[usable]
    # anchor: identity translate, phi = indicator of e_n, where Z = 1
    ident = ctx.index_of(Mat.from_rows([[int(i == j) for j in range(n)] for i in range(n)]))
    anchor_row = int(np.nonzero(hs == ident)[0][0]) if np.any(hs == ident) else None
    if anchor_row is not None:
        col = vector_index([0] * (n - 1) + [1], q) - 1
        gamma = complex(z2[anchor_row, col] / z1[anchor_row, col])
    else:
        gamma = complex(ratios[0])
    dispersion = float(np.max(np.abs(ratios - gamma)))

    e1, e2 = sides(extended)
    ext_usable = np.abs(e1) > ZERO_DENOM
    ext_disp = float(np.max(np.abs(e2[ext_usable] / e1[ext_usable] - gamma))) if ext_usable.any() else 0.0
    residual = float(np.max(np.abs(gamma * e1 - e2)))
    return FEReport(gamma, dispersion, int(usable.sum()), len(hs), ext_disp, residual, int(ext_usable.sum()))


# ---------------------------------------------------------------------------
# distinction


@dataclass
class DistinctionReport:
    multiplicity: int
    gow: bool
    bessel_sym: bool
    coset_sum: complex
    gow_dev: float
    bessel_sym_dev: float

    @property
    def distinguished(self) -> bool:
        return self.multiplicity > 0


def coset_sum(rep: CuspidalRep, ctx: GroupContext | None = None) -> complex:
    ctx = ctx or group_context(rep.tower)
    B = _bessel_cached(rep, ctx, 1)
    return complex(np.sum(B[ctx.coset_table.rep_index]))


def distinction(rep: CuspidalRep, ctx: GroupContext | None = None, tol: float = 1e-6) -> DistinctionReport:
    """Run all four distinction criteria; raise if their verdicts differ."""
    ctx = ctx or group_context(rep.tower)
    mult = as_integer(avg_over(rep, "H", ctx), "avg over H")
    chi = character_table(rep, ctx)
    gow_dev = float(np.max(np.abs(chi[ctx.tau] - chi)))
    B = _bessel_cached(rep, ctx, 1)
    sym_dev = float(np.max(np.abs(B[ctx.frob_inv] - B)))
    cs = coset_sum(rep, ctx)
    target = ctx.q**ctx.n - 1
    if abs(cs - target) < tol:
        cs_verdict = True
    elif abs(cs) < tol:
        cs_verdict = False
    else:
        raise CriteriaDisagreement(f"coset sum {cs} is neither 0 nor {target}")
    report = DistinctionReport(mult, gow_dev < tol, sym_dev < tol, cs, gow_dev, sym_dev)
    verdicts = {mult > 0, report.gow, report.bessel_sym, cs_verdict}
    if mult not in (0, 1) or len(verdicts) != 1:
        raise CriteriaDisagreement(f"{rep}: {report}")
    return report
