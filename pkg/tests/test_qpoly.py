from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coinwalk.errors import InexactDivision
from coinwalk.qpoly import QPoly, binomial, format_poly, return_prob

F = Fraction


def pascal_triangle(rows):
    """Independent oracle: Pascal's rule only, no factorials."""
    tri = [[1]]
    for n in range(1, rows):
        prev = tri[-1]
        row = [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]
        tri.append(row)
    return tri


class TestBinomial:
    def test_empty_product(self):
        assert binomial(0, 0) == 1

    def test_small_by_hand(self):
        assert binomial(4, 2) == 6

    def test_against_pascal_oracle(self):
        tri = pascal_triangle(31)
        for n in range(31):
            for k in range(n + 1):
                assert binomial(n, k) == tri[n][k]
        assert binomial(30, 15) == 155117520 == tri[30][15]

    def test_total_above_n(self):
        assert binomial(3, 5) == 0
        assert binomial(0, 1) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)
        with pytest.raises(ValueError):
            binomial(3, -2)


class TestReturnProb:
    def test_values(self):
        assert return_prob(0) == 1
        assert return_prob(1) == F(1, 2)
        assert return_prob(3) == F(5, 16)

    def test_recurrence(self):
        # u_{2k} = u_{2k-2} * (2k-1)/(2k), exactly
        for k in range(1, 65):
            assert return_prob(k) == return_prob(k - 1) * F(2 * k - 1, 2 * k)


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=8
)
small_polys = st.lists(small_fractions, max_size=13).map(QPoly)
nonzero_polys = small_polys.filter(bool)


class TestQPoly:
    def test_canonical_form(self):
        assert QPoly((1, 2, 0, 0)) == QPoly((1, 2))
        assert QPoly((0,)).degree == -1
        assert QPoly().is_zero()
        assert QPoly((0, 0, 3)).degree == 2

    def test_coeff_beyond_degree(self):
        p = QPoly((1, 2))
        assert p.coeff(5) == 0

    def test_eval_and_derivative(self):
        p = QPoly((3, 0, 1))  # 3 + q^2
        assert p(2) == 7
        assert p.derivative() == QPoly((0, 2))

    def test_parity_split(self):
        p = QPoly((1, 2, 3, 4))
        assert p.even_part() + p.odd_part() == p
        assert p.even_part() == QPoly((1, 0, 3))

    def test_divide_exact_factorization(self):
        assert QPoly((-1, 0, 1)).divide_exact(QPoly((1, 1))) == QPoly((-1, 1))

    def test_divide_exact_synthetic(self):
        num = QPoly((F(3, 8), F(1, 2), F(1, 4), F(1, 2), F(3, 8)))
        want = QPoly((F(3, 8), F(1, 8), F(1, 8), F(3, 8)))
        assert num.divide_exact(QPoly((1, 1))) == want

    def test_divide_inexact_raises(self):
        with pytest.raises(InexactDivision) as err:
            QPoly((1, 1)).divide_exact(QPoly((0, 1)))
        assert err.value.remainder == QPoly((1,))

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QPoly((1,)).divmod(QPoly())

    def test_format(self):
        assert str(QPoly((F(3, 8), F(1, 8), F(1, 8), F(3, 8)))) == "3/8 + 1/8 q + 1/8 q^2 + 3/8 q^3"
        assert str(QPoly()) == "0"
        assert str(QPoly((0, -1, 1))) == "-q + q^2"
        assert format_poly(QPoly((0, 0, F(-3, 2))), var="x") == "-3/2 x^2"

    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(small_polys, nonzero_polys)
    def test_exact_division_roundtrip(self, a, b):
        assert (a * b).divide_exact(b) == a

    @given(small_polys, nonzero_polys)
    def test_divmod_invariant(self, a, b):
        quot, rem = a.divmod(b)
        assert quot * b + rem == a
        assert rem.degree < b.degree or rem.is_zero()
