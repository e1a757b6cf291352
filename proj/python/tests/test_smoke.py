import math
from fractions import Fraction

import pytest

import bk2


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def diagonal_oracle(n):
    # integral_0^1 prod_{k=1}^n (x + y - k) dy, expanded in x and y jointly.
    # Polynomials in (x, y) as dict {(i, j): coeff}.
    p = {(0, 0): Fraction(1)}
    for k in range(1, n + 1):
        q = {}
        for (i, j), c in p.items():
            for di, dj, f in ((1, 0, 1), (0, 1, 1), (0, 0, -k)):
                key = (i + di, j + dj)
                q[key] = q.get(key, Fraction(0)) + c * f
        p = q
    coeffs = [Fraction(0)] * (n + 1)
    for (i, j), c in p.items():
        coeffs[i] += c / (j + 1)
    return coeffs


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
def test_diagonal_coeffs(n):
    assert bk2.diagonal_coeffs(n) == diagonal_oracle(n)


def test_exact_values():
    assert bk2.eval_exact(2, 0) == Fraction(5, 6)
    assert bk2.eval_exact(3, Fraction(3, 2)) == 0
    assert bk2.eval_exact(2, "1") == Fraction(-1, 6)


def test_scaled_value_matches_exact():
    n = 12
    x = Fraction(7, 3)
    exact = bk2.eval_exact(n, x) * (-1) ** n / math.factorial(n)
    v = bk2.scaled_value(n, x)
    assert abs(float(v["re"]) - float(exact)) < 1e-25
    assert float(v["error_bound"]) < 1e-30


def test_zeros():
    zs = bk2.real_zeros(3)
    assert [z["k"] for z in zs] == [1, 2, 3]
    assert zs[1]["lo"] == zs[1]["hi"] == Fraction(3, 2)
    s = math.sqrt(3) / 2
    assert abs(float(zs[0]["value"]) - (1.5 - s)) < 1e-15
    big = bk2.zero_large_n(10**6, 1)
    assert 0.93 < float(big["value"]) < 0.932


def test_series_and_conjecture_helpers():
    s = bk2.expansion("small-zero", k=1, order=3)
    assert s["gauge"] == "ONE_OVER_LOG_N"
    g = 0.5772156649015329
    assert abs(float(s["coeffs"][2]) - (g * g - math.pi**2 / 6)) < 1e-15
    assert bk2.hessenberg_charpoly(1) == [Fraction(5, 6), Fraction(-2), Fraction(1)]
    assert bk2.modulus_identity_residual(7, Fraction(1, 3), 2) == 0
    assert [c[0] for c in bk2.criteria()] == [f"C{i:02d}" for i in range(1, 11)]


def test_attractor_and_errors():
    roots = bk2.attractor_roots(20, 1)
    assert len(roots) == 20
    assert all(abs(r.imag) < 1e-20 and 0 < r.real < 1 for r in roots)
    with pytest.raises(ValueError):
        bk2.diagonal_coeffs(-1)
