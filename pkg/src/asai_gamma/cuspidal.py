"""Cuspidal representations of GL_n(E), n in {2, 3}, via their characters.

A cuspidal representation is labelled by a regular character theta_k of
K^x = F_{Q^n}^x (Q = q^2), up to the Frobenius orbit k -> kQ.  Its character
is given by Green's formula:

* regular elliptic g with eigenvalue alpha in K:  (-1)^(n-1) sum_i theta(alpha^(Q^i))
* g = z * (unipotent with k Jordan blocks):       (-1)^(n-1) theta(z) prod_{i<k} (1 - Q^i)
* anything else:                                  0

For n <= 3 these three cases exhaust the support.  Nothing here builds a
representation space; every check is a character computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field_tower import MultChar, Tower
from .matgroup import (
    CentralTimesUnipotent,
    ClassKind,
    GroupContext,
    Mat,
    RegularElliptic,
    class_data,
    class_kind_from_key,
    group_context,
)

INTEGRAL_TOL = 1e-6


class NotRegularError(ValueError):
    pass


class NonIntegralError(ArithmeticError):
    """A character average that should be a dimension is not an integer."""


@dataclass(frozen=True)
class CuspidalRep:
    tower: Tower
    k: int  # smallest exponent in the Frobenius orbit

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def Q(self) -> int:
        return self.tower.Q

    @property
    def theta(self) -> MultChar:
        return self.tower.mult_char(self.k)

    @property
    def orbit(self) -> list[int]:
        return self.tower.theta_orbit(self.k)

    @property
    def dim(self) -> int:
        out = 1
        for i in range(1, self.n):
            out *= self.Q**i - 1
        return out

    def __repr__(self):
        return f"CuspidalRep(q={self.tower.q}, n={self.n}, orbit={self.orbit})"


def new_cuspidal(tower: Tower, k: int) -> CuspidalRep:
    if not tower.is_regular(k):
        raise NotRegularError(f"theta_{k} is not regular (orbit {tower.theta_orbit(k)})")
    return CuspidalRep(tower, tower.theta_orbit(k)[0])


def list_cuspidal(tower: Tower) -> list[CuspidalRep]:
    """One representation per Frobenius orbit of regular characters."""
    return [
        CuspidalRep(tower, k)
        for k in range(tower.order)
        if tower.is_regular(k) and tower.theta_orbit(k)[0] == k
    ]


def contragredient(rep: CuspidalRep) -> CuspidalRep:
    return new_cuspidal(rep.tower, -rep.k)


def is_self_dual(rep: CuspidalRep) -> bool:
    return contragredient(rep) == rep


@lru_cache(maxsize=None)
def class_value(rep: CuspidalRep, kind: ClassKind) -> complex:
    tw, n = rep.tower, rep.n
    sign = (-1) ** (n - 1)
    if isinstance(kind, RegularElliptic):
        a = kind.alpha
        return sign * sum(tw.eval_theta(rep.theta, tw.pow(a, rep.Q**i)) for i in range(n))
    if isinstance(kind, CentralTimesUnipotent):
        prod = 1
        for i in range(1, kind.k_blocks):
            prod *= 1 - rep.Q**i
        return sign * prod * tw.eval_theta(rep.theta, kind.z)
    return 0j


def character(rep: CuspidalRep, g: Mat) -> complex:
    """chi_pi(g) for a single invertible matrix over E."""
    if rep.n not in (2, 3):
        raise ValueError("character formula only for n in {2, 3}")
    return class_value(rep, class_data(rep.tower, g))


def character_table(rep: CuspidalRep, ctx: GroupContext | None = None) -> np.ndarray:
    """chi_pi on every element of G, in the context's element order."""
    ctx = ctx or group_context(rep.tower)
    key, table = ctx.class_keys
    keys = sorted(table)
    values = np.array([class_value(rep, class_kind_from_key(table[kv])) for kv in keys])
    return values[np.searchsorted(keys, key)]


def inner_product(chi: np.ndarray, chi2: np.ndarray) -> complex:
    return complex(np.vdot(chi2, chi) / len(chi))


def avg_over(rep: CuspidalRep, subgroup, ctx: GroupContext | None = None) -> complex:
    """(1/|S|) sum_{s in S} chi(s).

    ``subgroup`` is one of ``"H"``, ``"P_F"``, ``"P_E"``, ``"N_E"``, ``"N_F"``,
    a block composition like ``(1, 2)`` naming a parabolic radical, or an array
    of element indices into the context.
    """
    ctx = ctx or group_context(rep.tower)
    idx = subgroup_indices(ctx, subgroup)
    chi = character_table(rep, ctx)
    return complex(chi[idx].mean())


def subgroup_indices(ctx: GroupContext, subgroup) -> np.ndarray:
    if isinstance(subgroup, str):
        return getattr(ctx, subgroup)
    if isinstance(subgroup, tuple):
        return ctx.radical(subgroup)
    return np.asarray(subgroup)


def as_integer(value: complex, what: str = "average", tol: float = INTEGRAL_TOL) -> int:
    r = round(value.real)
    if abs(value - r) >= tol:
        raise NonIntegralError(f"{what} = {value!r} is not an integer within {tol}")
    return int(r)


def multiplicity(rep: CuspidalRep, subgroup, ctx: GroupContext | None = None) -> int:
    """dim of the S-fixed vectors, checked to be integral."""
    return as_integer(avg_over(rep, subgroup, ctx), f"avg over {subgroup!r}")


def restricted_norm(rep: CuspidalRep, subgroup, ctx: GroupContext | None = None) -> float:
    """(1/|S|) sum |chi(s)|^2; equals 1 iff the restriction is irreducible."""
    ctx = ctx or group_context(rep.tower)
    chi = character_table(rep, ctx)[subgroup_indices(ctx, subgroup)]
    return float(np.mean(np.abs(chi) ** 2))
