"""Finite field tower F_p <= F = F_q <= E = F_{q^2} <= K = F_{q^{2n}}.

Every element of the tower lives in K and is stored as a plain ``int`` code:
``0`` is the zero element and ``1 + j`` is ``g**j`` for the fixed primitive
element ``g`` of K.  Integer order of codes is therefore the canonical element
order (zero first, then ascending discrete log), which every enumeration in the
package relies on.

Addition goes through a Zech logarithm table, multiplication is addition of
logs.  Subfields are recognised through Frobenius: ``x`` lies in F_{q^k}
iff ``x**(q**k) == x``.

For vectorised work each level (F, E or K) also has a *level code*: ``0`` for
zero and ``1 + j`` for ``h**j`` where ``h`` generates that level's
multiplicative group.  :class:`FieldTables` carries dense numpy lookup tables
in level codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

ZERO = 0
ONE = 1
DEFAULT_BUDGET = 10**7
LEVELS = ("F", "E", "K")


class TowerError(ValueError):
    """Invalid tower parameters or an element outside the requested level."""


def _poly_mulmod(a, b, modulus, p):
    # a, b: coefficient lists (low degree first) of length d; modulus monic, degree d
    d = len(modulus) - 1
    prod = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * modulus[i]) % p
    return prod[:d]


def _poly_powmod(base, e, modulus, p):
    d = len(modulus) - 1
    result = [1] + [0] * (d - 1)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    return result


def is_primitive(modulus, p):
    """True if ``x`` has multiplicative order ``p**d - 1`` modulo ``modulus``.

    A full-order ``x`` forces the quotient ring to be a field, so this also
    certifies irreducibility.
    """
    d = len(modulus) - 1
    if d == 1:
        # x = -c0 must generate F_p^*
        root = (-modulus[0]) % p
        if root == 0:
            return False
        order = p - 1
        return all(pow(root, order // r, p) != 1 for r in factorint(order)) if order > 1 else True
    order = p**d - 1
    x = [0, 1] + [0] * (d - 2)
    one = [1] + [0] * (d - 1)
    if _poly_powmod(x, order, modulus, p) != one:
        return False
    return all(_poly_powmod(x, order // r, modulus, p) != one for r in factorint(order))


def smallest_primitive_poly(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree ``d``.

    Coefficients are listed low degree first and compared as tuples with values
    in ``0..p-1``; the leading 1 is included in the returned tuple.
    """
    for low in itertools.product(range(p), repeat=d):
        if low[0] == 0:
            continue
        modulus = low + (1,)
        if is_primitive(modulus, p):
            return modulus
    raise TowerError(f"no primitive polynomial of degree {d} over F_{p}")  # unreachable


@dataclass(frozen=True)
class MultChar:
    """theta(g**j) = exp(2*pi*i*k*j / order)."""

    k: int
    order: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.order)

    def inverse(self) -> MultChar:
        return MultChar(-self.k, self.order)

    def __mul__(self, other: MultChar) -> MultChar:
        return MultChar(self.k + other.k, self.order)


class Tower:
    """The tower F_p <= F_q <= F_{q^2} <= F_{q^{2n}} with Zech tables.

    Immutable after construction.  Use :func:`build_tower` to construct.
    """

    def __init__(self, p: int, f: int, n: int, z_log: int | None = None, budget: int = DEFAULT_BUDGET):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise TowerError(f"p={p!r} is not prime")
        if not isinstance(f, int) or f < 1:
            raise TowerError(f"f={f!r} must be a positive integer")
        if n not in (2, 3):
            raise TowerError(f"n={n!r} must be 2 or 3")
        self.p = p
        self.f = f
        self.n = n
        self.q = p**f
        self.Q = self.q**2
        self.size = self.q ** (2 * n)
        self.order = self.size - 1
        if self.order > budget:
            raise TowerError(f"|K^x| = {self.order} exceeds budget {budget}")
        self.degree = 2 * n * f
        self.modulus = smallest_primitive_poly(p, self.degree)

        d = self.degree
        exp_table = np.zeros(self.order, dtype=np.int64)
        log_table = np.full(self.size, -1, dtype=np.int64)
        vec = [1] + [0] * (d - 1)
        weights = [p**i for i in range(d)]
        for j in range(self.order):
            code = sum(c * w for c, w in zip(vec, weights))
            exp_table[j] = code
            log_table[code] = j
            # multiply by x and reduce by the monic modulus
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [(v - top * m) % p for v, m in zip(vec, self.modulus[:-1])]
        self.exp_table = exp_table
        self.log_table = log_table

        # zech[j] = log(1 + g^j), -1 when 1 + g^j == 0
        digits = (exp_table[:, None] // np.array(weights)[None, :]) % p
        digits[:, 0] = (digits[:, 0] + 1) % p
        summed = digits @ np.array(weights)
        self.zech = log_table[summed]
        self.minus_one_log = 0 if p == 2 else self.order // 2

        self.roots = np.exp(2j * np.pi * np.arange(self.order) / self.order)
        self.proots = np.exp(2j * np.pi * np.arange(p) / p)

        self.step = {
            "F": self.order // (self.q - 1),
            "E": self.order // (self.Q - 1),
            "K": 1,
        }
        if z_log is None:
            z_log = self.step["E"]
        z = self.from_log(z_log)
        if not self.in_level(z, "E") or self.in_level(z, "F"):
            raise TowerError(f"z = g^{z_log} must lie in E but not in F")
        self.z_log = z_log % self.order
        self.z = z
        self._psi_denominator = self.inv(self.sub(z, self.frob(z, 1)))

    def __repr__(self):
        return f"Tower(p={self.p}, f={self.f}, n={self.n}, z_log={self.z_log})"

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.p, self.f, self.n, self.z_log)

    # -- element plumbing -------------------------------------------------

    def from_log(self, j: int) -> int:
        return 1 + j % self.order

    @staticmethod
    def log(x: int) -> int:
        if x == ZERO:
            raise ZeroDivisionError("log of zero")
        return x - 1

    @property
    def gen(self) -> int:
        return self.from_log(1)

    def from_vector(self, coeffs) -> int:
        """Element with polynomial coordinates ``coeffs`` (low degree first)."""
        code = sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))
        j = self.log_table[code]
        return ZERO if j < 0 else 1 + int(j)

    def to_vector(self, x: int) -> list[int]:
        if x == ZERO:
            return [0] * self.degree
        code = int(self.exp_table[x - 1])
        return [(code // self.p**i) % self.p for i in range(self.degree)]

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` in the prime field."""
        return self.from_vector([c % self.p])

    def elements(self, level: str = "K"):
        """All elements of ``level`` in canonical order."""
        step = self.step[level]
        return [ZERO] + [1 + j for j in range(0, self.order, step)]

    def level_size(self, level: str) -> int:
        return {"F": self.q, "E": self.Q, "K": self.size}[level]

    def in_level(self, x: int, level: str) -> bool:
        return x == ZERO or (x - 1) % self.step[level] == 0

    def check_level(self, x: int, level: str) -> None:
        if not self.in_level(x, level):
            raise TowerError(f"element {x} is not in {level}")

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        d = (b - a) % self.order
        zj = int(self.zech[d])
        if zj < 0:
            return ZERO
        return 1 + (a - 1 + zj) % self.order

    def neg(self, a: int) -> int:
        if a == ZERO:
            return ZERO
        return 1 + (a - 1 + self.minus_one_log) % self.order

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return 1 + (a + b - 2) % self.order

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return 1 + (-(a - 1)) % self.order

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == ZERO:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return ONE if e == 0 else ZERO
        return 1 + ((a - 1) * e) % self.order

    def frob(self, x: int, j: int = 1) -> int:
        """x ** (q ** j)."""
        if x == ZERO:
            return ZERO
        return 1 + ((x - 1) * pow(self.q, j % (2 * self.n), self.order)) % self.order

    def sum(self, items) -> int:
        acc = ZERO
        for x in items:
            acc = self.add(acc, x)
        return acc

    def trace_to_prime(self, x: int) -> int:
        """Tr_{F/F_p}(x) as an integer in ``0..p-1`` (x must lie in F)."""
        self.check_level(x, "F")
        t = self.sum(self.pow(x, self.p**i) for i in range(self.f))
        return self.to_vector(t)[0]

    def trace_E_F(self, x: int) -> int:
        return self.add(x, self.frob(x, 1))

    # -- additive characters ------------------------------------------------

    def psi_F(self, x: int, sign: int = 1) -> complex:
        """exp(2 pi i Tr(x) / p), or its inverse when ``sign == -1``."""
        return complex(self.proots[(sign * self.trace_to_prime(x)) % self.p])

    def psi_E_arg(self, x: int) -> int:
        """(x - x^q) / (z - z^q), an element of F."""
        self.check_level(x, "E")
        return self.mul(self.sub(x, self.frob(x, 1)), self._psi_denominator)

    def psi_E(self, x: int, sign: int = 1) -> complex:
        return self.psi_F(self.psi_E_arg(x), sign)

    def psi(self, x: int, level: str, sign: int = 1) -> complex:
        return self.psi_F(x, sign) if level == "F" else self.psi_E(x, sign)

    # -- multiplicative characters ------------------------------------------

    def mult_char(self, k: int) -> MultChar:
        return MultChar(k, self.order)

    def eval_theta(self, theta: MultChar, x: int) -> complex:
        if x == ZERO:
            raise ZeroDivisionError("multiplicative character evaluated at 0")
        return complex(self.roots[(theta.k * (x - 1)) % self.order])

    def theta_orbit(self, k: int) -> list[int]:
        """Sorted Frobenius orbit {k Q^i mod Q^n - 1}."""
        return sorted({(k * self.Q**i) % self.order for i in range(self.n)})

    def is_regular(self, theta: MultChar | int) -> bool:
        k = theta.k if isinstance(theta, MultChar) else theta
        return len(self.theta_orbit(k)) == self.n

    # -- vectorised tables -------------------------------------------------

    def to_level(self, x: int, level: str) -> int:
        """Tower code -> level code."""
        if x == ZERO:
            return 0
        self.check_level(x, level)
        return 1 + (x - 1) // self.step[level]

    def from_level(self, c: int, level: str) -> int:
        """Level code -> tower code."""
        return ZERO if c == 0 else 1 + (c - 1) * self.step[level]

    @cached_property
    def tables(self) -> dict[str, FieldTables]:
        return {lvl: FieldTables.build(self, lvl) for lvl in ("F", "E")}


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Dense arithmetic and character tables for one level, in level codes."""

    level: str
    size: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] = 0 as a sentinel
    frob: np.ndarray  # x -> x^q
    psi: np.ndarray  # psi_F on F, psi_E on E
    to_tower: np.ndarray  # level code -> tower code

    @classmethod
    def build(cls, tower: Tower, level: str) -> FieldTables:
        elems = [tower.from_level(c, level) for c in range(tower.level_size(level))]
        size = len(elems)
        enc = {x: c for c, x in enumerate(elems)}
        add = np.empty((size, size), dtype=np.int64)
        mul = np.empty((size, size), dtype=np.int64)
        for a, x in enumerate(elems):
            for b, y in enumerate(elems):
                add[a, b] = enc[tower.add(x, y)]
                mul[a, b] = enc[tower.mul(x, y)]
        neg = np.array([enc[tower.neg(x)] for x in elems])
        inv = np.array([0] + [enc[tower.inv(x)] for x in elems[1:]])
        frob = np.array([enc[tower.frob(x, 1)] for x in elems])
        psi = np.array([tower.psi(x, level) for x in elems])
        return cls(level, size, add, mul, neg, inv, frob, psi, np.array(elems))


_TOWER_CACHE: dict[tuple, Tower] = {}


def build_tower(p: int, f: int, n: int, z_log: int | None = None, budget: int = DEFAULT_BUDGET) -> Tower:
    """Deterministic tower for (p, f, n); cached per parameter set."""
    key = (p, f, n, z_log, budget)
    if key not in _TOWER_CACHE:
        _TOWER_CACHE[key] = Tower(p, f, n, z_log=z_log, budget=budget)
    return _TOWER_CACHE[key]

