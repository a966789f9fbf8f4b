"""Level-zero Asai L-, gamma- and epsilon-factors as exact Laurent algebra.

All factors are rational functions of T = q^{-s}; X = q^s = T^{-1}.  The
Haar volume constant is never evaluated, so the gamma and epsilon factors
are carried as vol*gamma and vol*epsilon.  lambda is a concrete nonzero
complex number (the central character at the uniformiser).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

COEFF_TOL = 1e-12
IDENTITY_TOL = 1e-10


class UnsupportedError(NotImplementedError):
    pass


class EpsilonError(ArithmeticError):
    pass


def _fmt(c: complex) -> str:
    c = complex(c)
    if abs(c.imag) < COEFF_TOL:
        return f"{c.real:.12g}"
    if abs(c.real) < COEFF_TOL:
        return f"{c.imag:.12g}j"
    return f"({c.real:.12g}{c.imag:+.12g}j)"


class LaurentPoly:
    """Finite sum of c_k T^k, k in Z, complex coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        self.coeffs = {int(k): complex(c) for k, c in coeffs.items() if abs(c) >= COEFF_TOL}

    @classmethod
    def monomial(cls, c, k: int) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def T(cls) -> LaurentPoly:
        return cls({1: 1})

    def __add__(self, other) -> LaurentPoly:
        other = _lift(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _lift(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _lift(other)
        out: dict[int, complex] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (self - _lift(other)).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def low(self) -> int:
        return min(self.coeffs)

    @property
    def high(self) -> int:
        return max(self.coeffs)

    def coeff(self, k: int) -> complex:
        return self.coeffs.get(k, 0j)

    def substitute(self, a, e: int) -> LaurentPoly:
        """T -> a * T^e."""
        return LaurentPoly({k * e: c * complex(a) ** k for k, c in self.coeffs.items()})

    def shift(self, m: int) -> LaurentPoly:
        return LaurentPoly({k + m: c for k, c in self.coeffs.items()})

    def __call__(self, t: complex) -> complex:
        return sum(c * t**k for k, c in self.coeffs.items())

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Division treating both as polynomials after shifting to exponent 0."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        shift = self.low - other.low
        num = self.shift(-self.low)
        den = other.shift(-other.low)
        lead = den.coeff(den.high)
        quot: dict[int, complex] = {}
        rem = num
        while not rem.is_zero() and rem.high >= den.high:
            k = rem.high - den.high
            c = rem.coeff(rem.high) / lead
            quot[k] = c
            rem = rem - den * LaurentPoly.monomial(c, k)
        return LaurentPoly(quot).shift(shift), rem.shift(self.low)

    def roots(self) -> np.ndarray:
        """Nonzero roots in T."""
        p = self.shift(-self.low)
        return np.roots([p.coeff(k) for k in range(p.high, -1, -1)])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = _fmt(self.coeffs[k])
            parts.append(c if k == 0 else f"{c}*T^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly({0: x})


class RationalFn:
    """num / den in T; normalised so den has lowest exponent 0 with coefficient 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _lift(num), _lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        lead = den.coeff(den.low)
        m = den.low
        scale = LaurentPoly.monomial(1 / lead, -m)
        self.num = num * scale
        self.den = den * scale

    def __add__(self, other) -> RationalFn:
        other = _rat(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> RationalFn:
        return self + (-_rat(other))

    def __mul__(self, other) -> RationalFn:
        other = _rat(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        other = _rat(other)
        return RationalFn(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        other = _rat(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def substitute(self, a, e: int) -> RationalFn:
        return RationalFn(self.num.substitute(a, e), self.den.substitute(a, e))

    def reduce(self) -> RationalFn | LaurentPoly:
        """The Laurent polynomial num/den when den divides num, else self."""
        quot, rem = self.num.divmod(self.den)
        if rem.max_abs() < IDENTITY_TOL * max(1.0, self.num.max_abs()):
            return quot
        return self

    def as_laurent(self) -> LaurentPoly | None:
        r = self.reduce()
        return r if isinstance(r, LaurentPoly) else None

    def is_monomial(self) -> bool:
        r = self.as_laurent()
        return r is not None and r.is_monomial()

    def is_constant(self) -> bool:
        r = self.as_laurent()
        return r is not None and (r.is_zero() or set(r.coeffs) == {0})

    def poles(self) -> np.ndarray:
        return self.den.roots()

    def __call__(self, t: complex) -> complex:
        return self.num(t) / self.den(t)

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def _rat(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


T = LaurentPoly.T()


def asai_L(n: int, lam: complex, distinguished: bool = True) -> RationalFn:
    """(1 - lam T^n)^{-1} for a level-zero representation from (lam, pi), pi distinguished."""
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if not distinguished:
        raise UnsupportedError("level-zero Asai L-factor is only available for distinguished pi")
    return RationalFn(1, 1 - LaurentPoly.monomial(lam, n))


def distinct_poles(rf: RationalFn, tol: float = 1e-8) -> list[complex]:
    out: list[complex] = []
    for r in rf.poles():
        if all(abs(r - s) > tol for s in out):
            out.append(complex(r))
    return out


def q_ns_minus_n(n: int, q: int) -> LaurentPoly:
    """q^{n(s-1)} = q^{-n} T^{-n}."""
    return LaurentPoly.monomial(q ** (-n), -n)


def local_gamma_vol(n: int, lam: complex, gamma_finite: complex, c1: complex, q: int) -> RationalFn:
    """vol * gamma(s) = c1 q^{n(s-1)} / (lam - q^{n(s-1)}) + gamma_finite."""
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    x = q_ns_minus_n(n, q)
    return RationalFn(c1 * x, lam - x) + gamma_finite


def contragredient_L_at_1_minus_s(n: int, lam: complex, q: int) -> RationalFn:
    """L(1 - s, sigma~) = asai_L(n, 1/lam) with T -> q^{-1} T^{-1}."""
    return asai_L(n, 1 / lam).substitute(1 / q, -1)


def epsilon_vol(n: int, lam: complex, gamma_finite: complex, c1: complex, q: int) -> RationalFn:
    """vol * epsilon(s) = vol * gamma(s) * L(s) / L(1 - s, sigma~)."""
    return local_gamma_vol(n, lam, gamma_finite, c1, q) * asai_L(n, lam) / contragredient_L_at_1_minus_s(n, lam, q)


def epsilon_closed_form(n: int, lam: complex, gamma_finite: complex, c1: complex, q: int) -> RationalFn:
    """[lam^{-1} q^{-n} (c1 - gamma) X^n + gamma] X^n / (X^n - lam), X = T^{-1}."""
    xn = LaurentPoly.monomial(1, -n)
    top = (xn * (q ** (-n) * (c1 - gamma_finite) / lam) + gamma_finite) * xn
    return RationalFn(top, xn - lam)


@dataclass
class EpsilonResult:
    n: int
    lam: complex
    q: int
    c2_vol: complex  # coefficient of the epsilon monomial
    c3: int  # power of X = q^s
    eq3_deviation: float
    closed_form_matches: bool
    epsilon: LaurentPoly


def eq3_sides(n: int, lam: complex, gamma: complex, c1: complex, c2: complex, c3: int, q: int):
    """Both sides of the cross-multiplied epsilon identity as Laurent polys in T.

    q^{-n}(c1 - gamma) X^{2n} + lam gamma X^n  vs  c2 lam X^{c3+n} - c2 lam^2 X^{c3}
    """
    X = lambda k: LaurentPoly.monomial(1, -k)  # noqa: E731
    lhs = X(2 * n) * (q ** (-n) * (c1 - gamma)) + X(n) * (lam * gamma)
    rhs = X(c3 + n) * (c2 * lam) - X(c3) * (c2 * lam**2)
    return lhs, rhs


def epsilon_check(n: int, lam: complex, q: int, gamma_finite: complex = -1, c1: complex | None = None) -> EpsilonResult:
    """Derive vol*epsilon for a distinguished level-zero representation and check it.

    Raises :class:`EpsilonError` if vol*epsilon is not a monomial c2 X^c3 or
    if c3 != n, gamma_finite != c1/(1 - q^n) or c2 lam != -gamma_finite.
    """
    if c1 is None:
        c1 = q**n - 1
    eps = epsilon_vol(n, lam, gamma_finite, c1, q).as_laurent()
    if eps is None or not eps.is_monomial():
        raise EpsilonError(f"vol*epsilon is not a monomial for n={n}, lambda={lam}")
    (t_exp, c2), = eps.coeffs.items()
    c3 = -t_exp
    lhs, rhs = eq3_sides(n, lam, gamma_finite, c1, c2, c3, q)
    dev = (lhs - rhs).max_abs()
    closed = epsilon_closed_form(n, lam, gamma_finite, c1, q) == RationalFn(eps)
    if c3 != n:
        raise EpsilonError(f"c3 = {c3}, expected {n}")
    if abs(gamma_finite - c1 / (1 - q**n)) > IDENTITY_TOL:
        raise EpsilonError("gamma_finite != c1 / (1 - q^n)")
    if abs(c2 * lam + gamma_finite) > IDENTITY_TOL:
        raise EpsilonError("c2 * lambda != -gamma_finite")
    if dev > IDENTITY_TOL:
        raise EpsilonError(f"cross-multiplied identity off by {dev}")
    return EpsilonResult(n, lam, q, complex(c2), c3, dev, closed, eps)
