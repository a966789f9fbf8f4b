"""Concrete values and small contracts across modules."""

import cmath
import subprocess
import sys

import numpy as np
import pytest

from asai_gamma import asai, bessel, cli
from asai_gamma import cuspidal as cu
from asai_gamma import level_zero as lz
from asai_gamma import matgroup as mg
from asai_gamma.field_tower import build_tower


@pytest.mark.parametrize("args,order,E,F", [((2, 1, 2), 15, 4, 2), ((3, 1, 2), 80, 9, 3), ((2, 1, 3), 63, 4, 2)])
def test_tower_sizes(args, order, E, F):
    tw = build_tower(*args)
    assert tw.order == order
    assert len(tw.elements("E")) == E and len(tw.elements("F")) == F
    assert len(set(tw.exp_table.tolist())) == order


def test_frobenius_fixes_F_and_zero(t32):
    for c in t32.elements("F"):
        assert t32.frob(c, 1) == c
    assert all(t32.frob(0, j) == 0 for j in range(5))


def test_psi_F_values(t22, t32):
    assert t22.psi_F(0) == 1 and abs(t22.psi_F(1) + 1) < 1e-12
    assert abs(t32.psi_F(1) - cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_psi_E_at_z(t22, t32):
    for tw in (t22, t32):
        assert tw.psi_E_arg(tw.z) == 1
        assert abs(tw.psi_E(tw.z) - 1) > 1e-6


def test_multiplicative_characters(t22):
    triv, th, inv = t22.mult_char(0), t22.mult_char(1), t22.mult_char(1).inverse()
    assert all(t22.eval_theta(triv, x) == 1 for x in range(1, 16))
    assert abs(t22.eval_theta(th, t22.gen) - cmath.exp(2j * cmath.pi / 15)) < 1e-12
    assert (th * inv).k == 0
    assert not t22.is_regular(0) and not t22.is_regular(5) and t22.is_regular(1)


def test_small_group_counts(t22, t23):
    assert sum(1 for _ in mg.enumerate_gl(t22, 2, "F")) == 6
    assert sum(1 for _ in mg.enumerate_gl(t23, 3, "F")) == 168
    assert sum(1 for _ in mg.enumerate_unipotent(t22, 2, "E")) == 4
    assert sum(1 for _ in mg.enumerate_unipotent(t22, 3, "E")) == 64
    assert sum(1 for _ in mg.enumerate_unipotent(t22, 2, "F")) == 2


def test_psi_N_examples(t22):
    assert mg.psi_N(t22, mg.identity(2)) == 1
    u = mg.Mat.from_rows([[1, 1], [0, 1]], "F")
    assert abs(mg.psi_N(t22, u) + 1) < 1e-12
    for u in mg.enumerate_unipotent(t22, 3, "F"):
        assert abs(mg.psi_N(t22, mg.Mat.from_rows(u.rows, "E")) - 1) < 1e-12


def test_companion_matrix_root(t22):
    for a in t22.elements("E")[1:]:
        for b in t22.elements("E"):
            g = mg.Mat.from_rows([[0, 1], [a, b]])
            kind = mg.class_data(t22, g)
            if isinstance(kind, mg.RegularElliptic):
                al = kind.alpha
                # alpha^2 = b alpha + a
                assert t22.mul(al, al) == t22.add(t22.mul(b, al), a)


def test_tau_and_omega(t22, ctx22):
    one = mg.identity(2)
    assert mg.tau(t22, one) == one
    assert mg.omega(2).rows == ((0, 1), (1, 0))
    for i in ctx22.H:
        g = ctx22.mat(int(i))
        assert mg.tau(t22, g) == mg.inverse(t22, mg.transpose(g))


def test_dimensions(t22, t23, ctx22):
    assert cu.new_cuspidal(t22, 1).dim == 3
    assert cu.new_cuspidal(t23, 1).dim == 45
    rep = cu.new_cuspidal(t22, 1)
    u = mg.Mat.from_rows([[1, 1], [0, 1]])
    assert abs(cu.character(rep, mg.identity(2)) - 3) < 1e-12
    assert abs(cu.character(rep, u) + 1) < 1e-12
    chi = cu.character_table(rep, ctx22)
    assert abs(np.sum(np.abs(chi) ** 2) - 180) < 1e-9


def test_contragredient_character(ctx22):
    for rep in cu.list_cuspidal(ctx22.tower):
        assert np.allclose(cu.character_table(cu.contragredient(rep), ctx22), cu.character_table(rep, ctx22).conj())


def test_bessel_values(ctx22, t22):
    rep = cu.new_cuspidal(t22, 1)
    B = bessel.bessel_table(rep, ctx22)
    assert abs(B[ctx22.index_of(mg.identity(2))] - 1) < 1e-12
    assert np.allclose(B[ctx22.N_E], ctx22.psiN_E)


def test_fourier_examples(t32):
    q, n = 3, 2
    one = asai.fourier(t32, asai.delta0(n, q))
    assert np.allclose(one.values, 1)
    back = asai.fourier(t32, asai.SchwartzFn.constant(n, q))
    assert np.allclose(back.values, q**n * asai.delta0(n, q).values)
    fn = asai.fourier(t32, asai.phi_n(n, q))
    for idx, y in enumerate(asai.vectors(q, n)):
        assert abs(fn.values[idx] - t32.psi_F(t32.from_level(int(y[-1]), "F"))) < 1e-12


def test_zeta_constant_vanishes_when_not_distinguished(ctx32):
    for rep in cu.list_cuspidal(ctx32.tower)[:8]:
        W = asai.WhittakerElem.translate(rep)
        assert abs(asai.zeta(W, asai.SchwartzFn.constant(2, 3), ctx32)) < 1e-10


def test_tilde_involution(ctx22):
    assert np.array_equal(ctx22.tilde[ctx22.tilde], np.arange(len(ctx22.elems)))
    rep = cu.list_cuspidal(ctx22.tower)[0]
    W = asai.WhittakerElem.translate(rep, 33)
    reps = ctx22.coset_table.rep_index
    assert np.allclose(asai.tilde(asai.tilde(W)).values(reps, ctx22), W.values(reps, ctx22))
    assert abs(asai.tilde(asai.WhittakerElem.translate(rep)).values(np.array([ctx22.index_of(mg.identity(2))]))[0]
               - bessel.bessel_table(rep, ctx22)[ctx22.omega]) < 1e-12


def test_level_zero_examples():
    T = lz.T
    assert lz.asai_L(2, 1) == lz.RationalFn(1, 1 - T * T)
    with pytest.raises(lz.UnsupportedError):
        lz.asai_L(2, 1, distinguished=False)
    assert lz.epsilon_check(2, 1, 2).c3 == 2
    assert abs(lz.epsilon_check(2, 3, 2).c2_vol - 1 / 3) < 1e-12
    assert (1 - T) * (1 + T) == 1 - T * T
    assert (T * T).substitute(0.5, -1) == lz.LaurentPoly({-2: 0.25})
    assert lz.LaurentPoly({5: 3}).is_monomial() and not (1 + T).is_monomial()
    assert lz.local_gamma_vol(2, 1.7, -1, 0, 3).is_constant()


def test_gamma_pole_at_lambda():
    # vol*gamma has its pole where q^{n(s-1)} = lambda
    n, q, lam = 2, 3, 0.7 + 0.2j
    g = lz.local_gamma_vol(n, lam, -1, q**n - 1, q)
    for t in g.poles():
        assert abs(q ** (-n) * t ** (-n) - lam) < 1e-9


def test_substitution_of_contragredient_L():
    n, q, lam, t = 3, 2, 1.3 - 0.4j, 0.8 + 0.1j
    L = lz.contragredient_L_at_1_minus_s(n, lam, q)
    assert abs(L(t) - 1 / (1 - (1 / lam) * (q * t) ** (-n))) < 1e-12


VERIFY_SNIPPET = """
import time
from asai_gamma.cli import cmd_verify
from asai_gamma.config import RunConfig
t0 = time.perf_counter()
code, _ = cmd_verify(RunConfig(p=2, n=2).validate())
print(code, time.perf_counter() - t0)
"""


def test_cli_examples():
    out = subprocess.run([sys.executable, "-c", VERIFY_SNIPPET], capture_output=True, text=True, check=True)
    code, secs = out.stdout.split()
    assert int(code) == 0 and float(secs) < 1.0
    assert len(cli.cmd_gamma(cli.RunConfig())) == 6
