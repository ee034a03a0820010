import pytest
import sympy
from hypothesis import given, strategies as st

from brauer import BrauerError, QPolynomial, congruent_mod_phi, cyclotomic, defect, parse_poly, phi_part

x = sympy.symbols("x")
coeff_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=8)


def to_sympy(p: QPolynomial):
    return sympy.Poly(list(reversed(p.coefficients)) or [0], x)


def from_sympy(expr) -> QPolynomial:
    return QPolynomial(reversed(sympy.Poly(expr, x).all_coeffs()))


def test_small_cyclotomics():
    assert cyclotomic(1) == parse_poly("q - 1")
    assert cyclotomic(2) == parse_poly("q + 1")


def test_phi30_coefficients():
    assert cyclotomic(30) == parse_poly("q^8 + q^7 - q^5 - q^4 - q^3 + q + 1")


@pytest.mark.parametrize("d", [1, 2, 3, 7, 12, 14, 15, 18, 20, 24, 30, 105])
def test_cyclotomic_matches_sympy(d):
    assert cyclotomic(d) == from_sympy(sympy.cyclotomic_poly(d, x))


def test_cyclotomic_rejects_zero():
    with pytest.raises(BrauerError) as exc:
        cyclotomic(0)
    assert exc.value.token == "invalid-argument"


def test_product_over_divisors():
    for n in (1, 6, 30, 60):
        prod = QPolynomial.constant(1)
        for d in sympy.divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == QPolynomial.monomial(n) - 1


def test_phi_part_examples():
    assert phi_part(parse_poly("q^2 - 1"), 2) == 1
    assert phi_part(parse_poly("q + 1") * parse_poly("q^6 - q^3 + 1"), 18) == 1
    assert phi_part(cyclotomic(14) ** 3 * parse_poly("q - 1"), 14) == 3


def test_phi_part_of_zero():
    with pytest.raises(BrauerError):
        phi_part(QPolynomial(), 3)


def test_defect_examples():
    d = 9
    assert defect(QPolynomial.constant(1), cyclotomic(d), d) == 1
    assert defect(cyclotomic(d), cyclotomic(d), d) == 0
    assert defect(cyclotomic(12), cyclotomic(12) ** 2 * cyclotomic(2), 12) == 1


def test_defect_inconsistent():
    with pytest.raises(BrauerError) as exc:
        defect(cyclotomic(5) ** 2, cyclotomic(5), 5)
    assert exc.value.token == "inconsistent-input"


def test_congruence_examples():
    q = QPolynomial.monomial(1)
    for d in (1, 5, 18):
        assert congruent_mod_phi(q, q, d)
    assert congruent_mod_phi(q, QPolynomial.constant(1), 1)
    assert not congruent_mod_phi(q + 1, QPolynomial.constant(1), 1)
    assert congruent_mod_phi(cyclotomic(18) * q**3 + 5, QPolynomial.constant(5), 18)


def test_parse_round_trip():
    p = parse_poly("q^8 + q^7 - 2*q + 1")
    assert p.coefficients == (1, -2, 0, 0, 0, 0, 0, 1, 1)
    assert parse_poly(str(p)) == p
    assert p(2) == 256 + 128 - 4 + 1


@pytest.mark.parametrize("bad", ["", "q^", "2q", "q**2", "x+1", "q+-1"])
def test_parse_rejects(bad):
    with pytest.raises(BrauerError):
        parse_poly(bad)


def test_inexact_division():
    with pytest.raises(BrauerError):
        parse_poly("q^2 + 1").exact_div(parse_poly("q - 1"))


@given(coeff_lists, coeff_lists)
def test_ring_operations_match_sympy(a, b):
    p, r = QPolynomial(a), QPolynomial(b)
    assert to_sympy(p + r) == to_sympy(p) + to_sympy(r)
    assert to_sympy(p * r) == to_sympy(p) * to_sympy(r)
    assert to_sympy(p - r) == to_sympy(p) - to_sympy(r)


@given(coeff_lists.filter(any), st.integers(1, 40))
def test_phi_part_matches_sympy(a, d):
    p = QPolynomial(a)
    sp = to_sympy(p)
    phi = sympy.Poly(sympy.cyclotomic_poly(d, x), x)
    k = 0
    while True:
        quo, rem = sp.div(phi)
        if not rem.is_zero:
            break
        sp, k = quo, k + 1
    assert phi_part(p, d) == k


@given(coeff_lists, coeff_lists, st.integers(1, 30))
def test_congruence_matches_sympy(a, b, d):
    p1, p2 = QPolynomial(a), QPolynomial(b)
    diff = to_sympy(p1) - to_sympy(p2)
    expected = diff.is_zero or diff.rem(sympy.Poly(sympy.cyclotomic_poly(d, x), x)).is_zero
    assert congruent_mod_phi(p1, p2, d) == expected


@given(coeff_lists.filter(any), st.integers(1, 30), st.integers(0, 3))
def test_phi_part_of_product(a, d, k):
    p = QPolynomial(a)
    assert phi_part(p * cyclotomic(d) ** k, d) == phi_part(p, d) + k
