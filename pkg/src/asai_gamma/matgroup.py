"""Matrices over the tower, enumeration of GL_n / N_n / P_n, coset tables.

Two layers live here.

* Scalar: :class:`Mat` holds tower codes and the module-level functions
  (``matmul``, ``inverse``, ``char_poly``, ``class_data`` ...) work on one
  matrix at a time.  This is the reference path.
* Vectorised: :class:`MatArith` works on ``(N, n, n)`` arrays of level codes
  through the dense tables of :class:`~asai_gamma.field_tower.FieldTables`,
  and :class:`GroupContext` enumerates G = GL_n(E) once and precomputes index
  maps (products with N_n(E), inverse, tau, tilde, conjugacy keys) used by the
  character, Bessel and gamma computations.

Matrix codes are row-lex: the (0, 0) entry is the most significant digit, so
sorting codes sorts matrices in the canonical order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .field_tower import DEFAULT_BUDGET, ONE, ZERO, Tower, TowerError


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured element budget."""


class SingularMatrixError(ValueError):
    pass


def gl_order(n: int, s: int) -> int:
    out = 1
    for i in range(n):
        out *= s**n - s**i
    return out


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetError(f"{what} has {count} elements, budget is {budget}")


# ---------------------------------------------------------------------------
# scalar layer


@dataclass(frozen=True)
class Mat:
    level: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def from_rows(cls, rows, level: str = "E") -> Mat:
        return cls(level, tuple(tuple(int(x) for x in r) for r in rows))


def identity(n: int, level: str = "E") -> Mat:
    return Mat.from_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], level)


def omega(n: int, level: str = "E") -> Mat:
    """Longest Weyl element: ones on the anti-diagonal."""
    return Mat.from_rows([[ONE if i + j == n - 1 else ZERO for j in range(n)] for i in range(n)], level)


def check_entries(tower: Tower, g: Mat) -> None:
    for row in g.rows:
        for x in row:
            tower.check_level(x, g.level)


def matmul(tower: Tower, a: Mat, b: Mat) -> Mat:
    n = a.n
    level = a.level if a.level == b.level else "K"
    return Mat.from_rows(
        [[tower.sum(tower.mul(a[i, k], b[k, j]) for k in range(n)) for j in range(n)] for i in range(n)],
        level,
    )


def transpose(g: Mat) -> Mat:
    return Mat(g.level, tuple(zip(*g.rows)))


def frob_mat(tower: Tower, g: Mat, j: int = 1) -> Mat:
    return Mat.from_rows([[tower.frob(x, j) for x in row] for row in g.rows], g.level)


def scale(tower: Tower, c: int, g: Mat) -> Mat:
    return Mat.from_rows([[tower.mul(c, x) for x in row] for row in g.rows], g.level)


def mat_sub(tower: Tower, a: Mat, b: Mat) -> Mat:
    return Mat.from_rows([[tower.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)], a.level)


def det(tower: Tower, g: Mat) -> int:
    """Determinant by Gaussian elimination."""
    m = [list(r) for r in g.rows]
    n = len(m)
    d = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != ZERO), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = tower.neg(d)
        d = tower.mul(d, m[c][c])
        inv = tower.inv(m[c][c])
        for r in range(c + 1, n):
            if m[r][c] != ZERO:
                factor = tower.mul(m[r][c], inv)
                m[r] = [tower.sub(x, tower.mul(factor, y)) for x, y in zip(m[r], m[c])]
    return d


def rank(tower: Tower, g: Mat) -> int:
    m = [list(r) for r in g.rows]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != ZERO), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = tower.inv(m[r][c])
        for i in range(rows):
            if i != r and m[i][c] != ZERO:
                factor = tower.mul(m[i][c], inv)
                m[i] = [tower.sub(x, tower.mul(factor, y)) for x, y in zip(m[i], m[r])]
        r += 1
    return r


def inverse(tower: Tower, g: Mat) -> Mat:
    """Gauss-Jordan inverse; raises :class:`SingularMatrixError`."""
    n = g.n
    m = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(g.rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != ZERO), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = tower.inv(m[c][c])
        m[c] = [tower.mul(inv, x) for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != ZERO:
                factor = m[r][c]
                m[r] = [tower.sub(x, tower.mul(factor, y)) for x, y in zip(m[r], m[c])]
    return Mat.from_rows([row[n:] for row in m], g.level)


def tau(tower: Tower, g: Mat) -> Mat:
    """transpose(frob(g))^{-1}."""
    return inverse(tower, transpose(frob_mat(tower, g)))


def tilde_arg(tower: Tower, g: Mat) -> Mat:
    """omega_n . transpose(g)^{-1}, the argument used by W~(g) = W(tilde_arg(g))."""
    return matmul(tower, omega(g.n, g.level), inverse(tower, transpose(g)))


def char_poly(tower: Tower, g: Mat) -> tuple[int, ...]:
    """det(xI - g) as monic coefficients, low degree first."""
    n = g.n
    coeffs = [ZERO] * n + [ONE]
    for m in range(1, n + 1):
        e = tower.sum(
            det(tower, Mat.from_rows([[g[i, j] for j in idx] for i in idx], g.level))
            for idx in itertools.combinations(range(n), m)
        )
        coeffs[n - m] = e if m % 2 == 0 else tower.neg(e)
    return tuple(coeffs)


def poly_eval(tower: Tower, coeffs, x: int) -> int:
    acc = ZERO
    for c in reversed(coeffs):
        acc = tower.add(tower.mul(acc, x), c)
    return acc


def is_unipotent_upper(g: Mat) -> bool:
    return all(
        g[i, j] == (ONE if i == j else ZERO) for i in range(g.n) for j in range(g.n) if i >= j
    )


# -- conjugacy data ----------------------------------------------------------


@dataclass(frozen=True)
class CentralTimesUnipotent:
    z: int
    k_blocks: int


@dataclass(frozen=True)
class RegularElliptic:
    alpha: int


@dataclass(frozen=True)
class Other:
    pass


ClassKind = CentralTimesUnipotent | RegularElliptic | Other


def _binomial_power(tower: Tower, a: int, n: int) -> tuple[int, ...]:
    # (x - a)^n, low degree first
    coeffs = [ONE]
    for _ in range(n):
        shifted = [ZERO] + coeffs
        scaled = [tower.mul(tower.neg(a), c) for c in coeffs] + [ZERO]
        coeffs = [tower.add(x, y) for x, y in zip(shifted, scaled)]
    return tuple(coeffs)


@lru_cache(maxsize=None)
def classify_poly(tower: Tower, coeffs: tuple[int, ...]):
    """('elliptic', alpha) | ('central', a) | ('other', None) for a char poly over E."""
    n = len(coeffs) - 1
    if n not in (2, 3):
        raise ValueError("conjugacy data only for n in {2, 3}")
    roots = [a for a in tower.elements("E") if poly_eval(tower, coeffs, a) == ZERO]
    if not roots:
        # degree <= 3 without a root in E is irreducible, its roots lie in K
        for j in range(tower.order):
            alpha = tower.from_log(j)
            if poly_eval(tower, coeffs, alpha) == ZERO:
                return "elliptic", alpha
        raise AssertionError("irreducible polynomial without a root in K")
    if len(roots) == 1 and _binomial_power(tower, roots[0], n) == coeffs:
        return "central", roots[0]
    return "other", None


def class_data(tower: Tower, g: Mat) -> ClassKind:
    n = g.n
    if n not in (2, 3):
        raise ValueError("class_data only for n in {2, 3}")
    if det(tower, g) == ZERO:
        raise SingularMatrixError("class_data of a singular matrix")
    kind, x = classify_poly(tower, char_poly(tower, g))
    if kind == "elliptic":
        return RegularElliptic(x)
    if kind == "central":
        s = mat_sub(tower, scale(tower, tower.inv(x), g), identity(n, g.level))
        return CentralTimesUnipotent(x, n - rank(tower, s))
    return Other()


def psi_N(tower: Tower, u: Mat, sign: int = 1) -> complex:
    """psi(sum of superdiagonal entries) with psi = psi_F on F, psi_E on E."""
    if not is_unipotent_upper(u):
        raise ValueError("psi_N needs an upper unipotent matrix")
    s = tower.sum(u[i, i + 1] for i in range(u.n - 1))
    return tower.psi(s, u.level, sign)


def enumerate_unipotent(tower: Tower, n: int, level: str):
    elems = tower.elements(level)
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for vals in itertools.product(elems, repeat=len(slots)):
        rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for (i, j), v in zip(slots, vals):
            rows[i][j] = v
        yield Mat.from_rows(rows, level)


def enumerate_gl(tower: Tower, n: int, level: str, budget: int = DEFAULT_BUDGET):
    """Invertible n x n matrices over ``level`` in row-lex element order."""
    _check_budget(gl_order(n, tower.level_size(level)), budget, f"GL_{n}({level})")
    elems = tower.elements(level)
    for vals in itertools.product(elems, repeat=n * n):
        g = Mat.from_rows([vals[i * n:(i + 1) * n] for i in range(n)], level)
        if det(tower, g) != ZERO:
            yield g


# ---------------------------------------------------------------------------
# vectorised layer


class MatArith:
    """Arithmetic on stacks of matrices in level codes."""

    def __init__(self, tables, n: int):
        self.t = tables
        self.n = n
        self.s = tables.size
        self.weights = self.s ** np.arange(n * n - 1, -1, -1, dtype=np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n, s = self.n, self.s
        add, mul = self.t.add.ravel(), self.t.mul.ravel()
        a, b = np.broadcast_arrays(a, b)
        # contiguous column copies make the table lookups several times faster
        ac = [[np.ascontiguousarray(a[..., i, k]) * s for k in range(n)] for i in range(n)]
        bc = [[np.ascontiguousarray(b[..., k, j]) for j in range(n)] for k in range(n)]
        out = np.empty(a.shape, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = mul.take(ac[i][0] + bc[0][j])
                for k in range(1, n):
                    acc = add.take(acc * s + mul.take(ac[i][k] + bc[k][j]))
                out[..., i, j] = acc
        return out

    def det(self, a: np.ndarray) -> np.ndarray:
        m = a.shape[-1]
        if m == 1:
            return a[..., 0, 0]
        add, mul, neg = self.t.add, self.t.mul, self.t.neg
        acc = None
        for j in range(m):
            minor = np.delete(np.delete(a, 0, axis=-2), j, axis=-1)
            term = mul[a[..., 0, j], self.det(minor)]
            if j % 2:
                term = neg[term]
            acc = term if acc is None else add[acc, term]
        return acc

    def inverse(self, a: np.ndarray) -> np.ndarray:
        n = self.n
        d = self.det(a)
        if np.any(d == 0):
            raise SingularMatrixError("singular matrix in stack")
        dinv = self.t.inv[d]
        out = np.empty(a.shape, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                minor = np.delete(np.delete(a, j, axis=-2), i, axis=-1)
                c = self.det(minor) if n > 1 else np.ones_like(d)
                if (i + j) % 2:
                    c = self.t.neg[c]
                out[..., i, j] = self.t.mul[c, dinv]
        return out

    def transpose(self, a: np.ndarray) -> np.ndarray:
        return np.swapaxes(a, -1, -2)

    def frob(self, a: np.ndarray) -> np.ndarray:
        return self.t.frob[a]

    def encode(self, a: np.ndarray) -> np.ndarray:
        flat = a.reshape(a.shape[:-2] + (self.n * self.n,))
        return flat @ self.weights

    def decode(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        digits = (codes[..., None] // self.weights) % self.s
        return digits.reshape(codes.shape + (self.n, self.n))

    def char_poly_coeffs(self, a: np.ndarray) -> np.ndarray:
        """Elementary symmetric functions e_1..e_n of the eigenvalues, shape (..., n)."""
        add, n = self.t.add, self.n
        out = []
        for m in range(1, n + 1):
            acc = None
            for idx in itertools.combinations(range(n), m):
                sub = a[..., list(idx), :][..., :, list(idx)]
                d = self.det(sub)
                acc = d if acc is None else add[acc, d]
            out.append(acc)
        return np.stack(out, axis=-1)

    def all_matrices(self, budget: int) -> np.ndarray:
        total = self.s ** (self.n * self.n)
        _check_budget(total, 8 * budget, "matrix space")
        return self.decode(np.arange(total, dtype=np.int64))

    def unipotent_stack(self) -> np.ndarray:
        n = self.n
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        count = self.s ** len(slots)
        out = np.zeros((count, n, n), dtype=np.int64)
        for i in range(n):
            out[:, i, i] = 1
        for r, vals in enumerate(itertools.product(range(self.s), repeat=len(slots))):
            for (i, j), v in zip(slots, vals):
                out[r, i, j] = v
        return out

    def psi_N(self, u: np.ndarray) -> np.ndarray:
        acc = u[..., 0, 1]
        for i in range(1, self.n - 1):
            acc = self.t.add[acc, u[..., i, i + 1]]
        return self.t.psi[acc]


def canonical_reps(arith: MatArith, elems: np.ndarray, scalars=None) -> np.ndarray:
    """For each element g, the smallest code in its left orbit {u g : u in N_n}.

    Left multiplication by upper unipotent u adds to row i an arbitrary
    combination of the rows below it, independently for each i, so the
    row-lex minimum is reached by minimising each row on its own.
    ``scalars`` restricts the entries of u (level codes of a subfield).
    """
    n, s, t = arith.n, arith.s, arith.t
    row_w = s ** np.arange(n - 1, -1, -1, dtype=np.int64)
    if scalars is None:
        scalars = range(s)
    total = np.zeros(len(elems), dtype=np.int64)
    for i in range(n):
        best = None
        for coeffs in itertools.product(scalars, repeat=n - 1 - i):
            row = elems[:, i, :]
            for c, j in zip(coeffs, range(i + 1, n)):
                if c:
                    row = t.add[row, t.mul[c, elems[:, j, :]]]
            code = row @ row_w
            best = code if best is None else np.minimum(best, code)
        total += best * s ** (n * (n - 1 - i))
    return total


@dataclass(frozen=True, eq=False)
class CosetTable:
    """Canonical representatives of N_n(F) \\ GL_n(F)."""

    reps: tuple[Mat, ...]
    rep_index: np.ndarray  # positions of reps inside the context's G

    def __len__(self):
        return len(self.reps)


class GroupContext:
    """G = GL_n(E) enumerated once, with the index maps everything else uses.

    Element indices refer to positions in ``self.elems`` (row-lex order).
    """

    def __init__(self, tower: Tower, budget: int = DEFAULT_BUDGET):
        self.tower = tower
        self.budget = budget
        n = self.n = tower.n
        self.q, self.Q = tower.q, tower.Q
        self.order_G = gl_order(n, self.Q)
        _check_budget(self.order_G, budget, f"GL_{n}(E)")
        self.tE = tower.tables["E"]
        self.tF = tower.tables["F"]
        self.arith = MatArith(self.tE, n)
        a = self.arith
        everything = a.all_matrices(budget)
        dets = a.det(everything)
        self.elems = everything[dets != 0]
        self.codes = a.encode(self.elems)
        assert len(self.elems) == self.order_G
        # F level code c -> E level code
        self.f_to_e = np.array([0] + [1 + (c - 1) * (self.q + 1) for c in range(1, self.q)])

        self.unip_E = a.unipotent_stack()
        self.N_E = self.index(self.unip_E)
        self.psiN_E = a.psi_N(self.unip_E)
        unip_F = self.f_to_e[MatArith(self.tF, n).unipotent_stack()]
        self.N_F = self.index(unip_F)

    # -- lookups --------------------------------------------------------------

    def index(self, mats: np.ndarray) -> np.ndarray:
        codes = self.arith.encode(mats)
        idx = np.searchsorted(self.codes, codes)
        idx = np.minimum(idx, len(self.codes) - 1)
        if not np.all(self.codes[idx] == codes):
            raise SingularMatrixError("matrix not in GL_n(E)")
        return idx

    def mat(self, i: int) -> Mat:
        tE = self.tE
        return Mat.from_rows([[int(tE.to_tower[x]) for x in row] for row in self.elems[i]], "E")

    def index_of(self, g: Mat) -> int:
        tw = self.tower
        arr = np.array([[tw.to_level(x, "E") for x in row] for row in g.rows], dtype=np.int64)
        return int(self.index(arr[None])[0])

    def mul(self, i, j) -> np.ndarray:
        """Indices of elems[i] @ elems[j] (broadcasting)."""
        return self.index(self.arith.matmul(self.elems[i], self.elems[j]))

    # -- derived maps ---------------------------------------------------------

    @cached_property
    def inv(self) -> np.ndarray:
        return self.index(self.arith.inverse(self.elems))

    @cached_property
    def transposed(self) -> np.ndarray:
        return self.index(self.arith.transpose(self.elems))

    @cached_property
    def frob(self) -> np.ndarray:
        return self.index(self.arith.frob(self.elems))

    @cached_property
    def tau(self) -> np.ndarray:
        """g -> transpose(frob(g))^{-1}."""
        return self.inv[self.transposed[self.frob]]

    @cached_property
    def frob_inv(self) -> np.ndarray:
        """g -> frob(g)^{-1}."""
        return self.inv[self.frob]

    @cached_property
    def omega(self) -> int:
        w = np.zeros((self.n, self.n), dtype=np.int64)
        for i in range(self.n):
            w[i, self.n - 1 - i] = 1
        return int(self.index(w[None])[0])

    @cached_property
    def tilde(self) -> np.ndarray:
        """g -> omega . transpose(g)^{-1}."""
        return self.mul(self.omega, self.inv[self.transposed])

    @cached_property
    def H(self) -> np.ndarray:
        """Indices of GL_n(F) inside G, in row-lex order."""
        in_F = np.isin(self.elems, self.f_to_e).all(axis=(1, 2))
        return np.nonzero(in_F)[0]

    def _last_row_mask(self) -> np.ndarray:
        last = self.elems[:, -1, :]
        target = np.zeros(self.n, dtype=np.int64)
        target[-1] = 1
        return (last == target).all(axis=1)

    @cached_property
    def P_E(self) -> np.ndarray:
        """Mirabolic subgroup P_n(E): last row (0, ..., 0, 1)."""
        return np.nonzero(self._last_row_mask())[0]

    @cached_property
    def P_F(self) -> np.ndarray:
        return np.intersect1d(self.P_E, self.H)

    def radical(self, blocks: tuple[int, ...]) -> np.ndarray:
        """Unipotent radical of the standard parabolic with block sizes ``blocks``."""
        if sum(blocks) != self.n or len(blocks) < 2:
            raise ValueError("need a proper composition of n")
        block_of = np.repeat(np.arange(len(blocks)), blocks)
        u = self.unip_E
        keep = np.ones(len(u), dtype=bool)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if block_of[i] == block_of[j]:
                    keep &= u[:, i, j] == 0
        return self.N_E[keep]

    def proper_compositions(self) -> list[tuple[int, ...]]:
        out = []
        for cuts in range(1, self.n):
            for pos in itertools.combinations(range(1, self.n), cuts):
                edges = (0,) + pos + (self.n,)
                out.append(tuple(b - a for a, b in zip(edges, edges[1:])))
        return out

    @cached_property
    def coset_table(self) -> CosetTable:
        """Canonical reps of N_n(F) \\ H, plus each H element's rep position."""
        h = self.elems[self.H]
        best = canonical_reps(self.arith, h, self.f_to_e)
        rep_codes = np.unique(best)
        rep_index = np.searchsorted(self.codes, rep_codes)
        reps = tuple(self.mat(int(i)) for i in rep_index)
        return CosetTable(reps, rep_index)

    @cached_property
    def coset_reps_E(self) -> np.ndarray:
        """Canonical reps of N_n(E) \\ G as indices into G."""
        best = canonical_reps(self.arith, self.elems)
        return np.searchsorted(self.codes, np.unique(best))

    # -- conjugacy keys -------------------------------------------------------

    @cached_property
    def class_keys(self) -> tuple[np.ndarray, dict[int, tuple]]:
        """Per-element class key and the key -> (kind, value, k_blocks) table.

        Keys combine the characteristic polynomial with the number of Jordan
        blocks when the polynomial is (x - a)^n.
        """
        a, n, tw, tE = self.arith, self.n, self.tower, self.tE
        coeffs = a.char_poly_coeffs(self.elems)
        poly_code = coeffs @ (self.Q ** np.arange(n - 1, -1, -1))
        uniq, inverse = np.unique(poly_code, return_inverse=True)
        info = []
        for pc in uniq:
            e = [(int(pc) // self.Q ** (n - 1 - m)) % self.Q for m in range(n)]
            e_tower = [int(tE.to_tower[c]) for c in e]
            poly = [ZERO] * n + [ONE]
            for m in range(1, n + 1):
                poly[n - m] = e_tower[m - 1] if m % 2 == 0 else tw.neg(e_tower[m - 1])
            info.append(classify_poly(tw, tuple(poly)))
        kinds = np.array([{"elliptic": 0, "central": 1, "other": 2}[k] for k, _ in info])
        eig = np.array([tw.to_level(x, "E") if k == "central" else 0 for k, x in info])
        kind = kinds[inverse]
        central = np.nonzero(kind == 1)[0]
        kblocks = np.zeros(len(self.elems), dtype=np.int64)
        if len(central):
            g = self.elems[central]
            lam = eig[inverse[central]]
            s = g.copy()
            for i in range(n):
                s[:, i, i] = tE.add[g[:, i, i], tE.neg[lam]]
            zero_s = (s == 0).all(axis=(1, 2))
            if n == 2:
                kb = np.where(zero_s, 2, 1)
            else:
                sq_zero = (a.matmul(s, s) == 0).all(axis=(1, 2))
                kb = np.where(zero_s, 3, np.where(sq_zero, 2, 1))
            kblocks[central] = kb
        key = inverse * (n + 1) + kblocks
        table = {}
        for kval in np.unique(key):
            pid, kb = divmod(int(kval), n + 1)
            k, x = info[pid]
            table[int(kval)] = (k, x, kb)
        return key, table


_CONTEXTS: dict[tuple, GroupContext] = {}


def group_context(tower: Tower, budget: int = DEFAULT_BUDGET) -> GroupContext:
    key = (tower.key, budget)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = GroupContext(tower, budget)
    return _CONTEXTS[key]


def coset_reps(tower: Tower, budget: int = DEFAULT_BUDGET) -> CosetTable:
    return group_context(tower, budget).coset_table


def class_kind_from_key(entry: tuple) -> ClassKind:
    kind, x, kb = entry
    if kind == "elliptic":
        return RegularElliptic(x)
    if kind == "central":
        return CentralTimesUnipotent(x, kb)
    return Other()


__all__ = [
    "BudgetError",
    "CentralTimesUnipotent",
    "ClassKind",
    "CosetTable",
    "GroupContext",
    "Mat",
    "MatArith",
    "Other",
    "RegularElliptic",
    "SingularMatrixError",
    "TowerError",
    "char_poly",
    "class_data",
    "coset_reps",
    "det",
    "enumerate_gl",
    "enumerate_unipotent",
    "frob_mat",
    "gl_order",
    "group_context",
    "identity",
    "inverse",
    "matmul",
    "omega",
    "psi_N",
    "rank",
    "tau",
    "tilde_arg",
    "transpose",
]
