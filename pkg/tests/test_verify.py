import pytest

from asai_gamma import verify


def test_run_all_q2_n2(t22):
    checks, info = verify.run_all(t22)
    failed = [c.line() for c in checks if not c.passed]
    assert not failed
    assert info["orbits"] == 6


def test_run_all_q3_n2(t32):
    checks, _ = verify.run_all(t32)
    assert all(c.passed for c in checks)


def test_check_line_format():
    c = verify.Check("s", "x", 2e-3, 1e-8)
    assert not c.passed and c.line().startswith("[FAIL] s: x")
    assert verify.Check("s", "y", True).line() == "[PASS] s: y"


def test_sample_lambdas_mix_circle_and_off():
    lams = verify.sample_lambdas(20)
    on = [abs(abs(x) - 1) < 1e-12 for x in lams]
    assert sum(on) == 10 and len(set(lams)) == 20


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (2, 2)])
@pytest.mark.parametrize("n", [2, 3])
def test_fourier_inversion_dev(p, f, n):
    from asai_gamma.field_tower import build_tower

    assert verify.fourier_inversion_dev(build_tower(p, f, n)) < 1e-10
