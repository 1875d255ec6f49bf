"""Smoke test for the `appell` extension module; run with pytest."""

from fractions import Fraction

import appell


def frac(pair):
    re, im = pair
    return Fraction(re), Fraction(im)


def test_riesz_basis_is_orthogonal_and_in_the_kernel():
    basis = appell.hdr_basis(1, 3, 2)
    assert len(basis) == 7
    for label, f in basis:
        assert label["s"] == 1 and label["k"] == 2
        assert f.dirac_plus().is_zero() and f.dirac_minus().is_zero()
        assert f.degree() == 2 and f.grades() == [1]
    for i, (_, f) in enumerate(basis):
        for j, (_, g) in enumerate(basis):
            re, im = frac(f.inner(g))
            assert im == 0
            assert (re > 0) if i == j else (re == 0)


def test_clifford_products():
    e1 = appell.Multivector.basis_vector(3, 1)
    e2 = appell.Multivector.basis_vector(3, 2)
    minus_one = appell.Multivector(3, [((), -1)])
    assert e1 * e1 == minus_one
    assert e1 * e2 == -(e2 * e1)
    assert (e1 * e2).grades() == [2]


def test_json_round_trip_and_operators():
    x = [appell.Poly.coordinate(3, i) for i in (1, 2, 3)]
    p = x[0] * x[0] - x[1] * x[1]
    assert p.laplacian().is_zero()
    q = appell.Poly.from_json(p.to_json())
    assert q == p
    value = p.evaluate(["2", "1/2", 0])
    assert value.terms() == [{"indices": [], "re": "15/4", "im": "0"}]


def test_gram_and_harmonics():
    basis = appell.harmonic_basis(3, 2)
    assert len(basis) == 5
    g = appell.gram([f for _, f in basis])
    assert g["size"] == 5
    for i in range(5):
        for j in range(5):
            if i != j:
                assert Fraction(g["entries"][i][j]) == 0


def test_gmt_and_dims():
    basis = appell.gmt_basis([1, 3], 3, 1)
    assert all(f.dirac().is_zero() for _, _, f in basis)
    rows = appell.dims(3, 2)
    assert len(rows) == 4 * 3


def test_taylor_round_trip():
    basis = appell.hdr_basis(1, 3, 1, field="complex")
    g = basis[0][1] + basis[2][1]
    coeffs = appell.taylor(g, 1, 1)
    assert appell.reconstruct(coeffs, 3, "complex") == g


def test_verify_reports():
    reports = appell.verify("kernel", m=3, kmax=2)
    assert all(r["passed"] for r in reports)
