import pytest

from mil import linalg
from mil.errors import ContextMismatch, DimensionMismatch, ParseError, ZeroPolynomial
from mil.poly import Poly, RingCtx, degree_and_components, poly_arith


class TestRingCtx:
    """Tests for rings, orders and monomial enumeration"""

    def test_rejects_duplicate_names(self, f3):
        """Test variable names must be distinct"""
        with pytest.raises(ParseError):
            RingCtx(f3, ('x', 'x'))

    def test_rejects_too_many_variables(self, f3):
        """Test the variable cap"""
        with pytest.raises(DimensionMismatch):
            RingCtx(f3, tuple(f'x{i}' for i in range(17)))

    def test_rejects_bad_weights(self, f3):
        """Test weights must be positive integers, one per variable"""
        with pytest.raises(ParseError):
            RingCtx(f3, ('x', 'y'), weights=(1, 0))
        with pytest.raises(ParseError):
            RingCtx(f3, ('x', 'y'), weights=(1,))

    def test_monomial_counts(self, r3):
        """Test there are C(d + 2, 2) monomials of degree d in three variables"""
        assert [len(r3.monomials(d)) for d in range(5)] == [1, 3, 6, 10, 15]
        assert r3.monomials(-1) == []

    def test_grevlex_degree_two(self, r3):
        """Test x^2 > xy > y^2 > xz > yz > z^2"""
        assert r3.monomials(2) == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    def test_lex(self, r3):
        """Test lex puts x z before y^2"""
        lex = r3.with_order('lex')
        assert lex.key((1, 0, 1)) > lex.key((0, 2, 0))
        assert r3.key((1, 0, 1)) < r3.key((0, 2, 0))

    def test_weighted_monomials(self, f3):
        """Test weighted enumeration with weights (1, 2)"""
        ring = RingCtx(f3, ('s', 't'), weights=(1, 2))
        assert sorted(ring.monomials(4)) == [(0, 2), (2, 1), (4, 0)]
        assert ring.monomials(3) == [(3, 0), (1, 1)]

    def test_descending_key_reverses(self, r3):
        """Test sorting by descending_key lists monomials largest first"""
        monos = r3.monomials(3)
        assert sorted(monos, key=r3.descending_key) == monos


class TestPoly:
    """Tests for polynomial arithmetic"""

    def test_parse_and_print(self, r3):
        """Test terms print largest first with the coefficient prefix"""
        f = r3.parse('z^2 + 2*x*y - x^2')
        assert str(f) == '2*x^2 + 2*x*y + z^2'
        assert r3.parse(str(f)) == f

    def test_extension_coefficients(self, f9):
        """Test coefficients with several digits are parenthesized"""
        ring = RingCtx(f9, ('x', 'y'))
        assert str(ring.parse('(1 + a)*x + a*y')) == '(a+1)*x + a*y'

    def test_arithmetic(self, r2):
        """Test (x + y)^3 = x^3 + y^3 in characteristic 3"""
        x, y = r2.gens()
        assert (x + y) ** 3 == x ** 3 + y ** 3
        assert (x + y) * (x - y) == x ** 2 - y ** 2
        assert x - x == 0
        assert 1 - x == -(x - 1)

    def test_poly_arith(self, r2):
        """Test the named polynomial operations"""
        x, y = r2.gens()
        assert poly_arith('add', x, y) == x + y
        assert poly_arith('scalar_mul', r2.field.element(2), x) == -x
        assert poly_arith('pow', x, 2) == x * x
        with pytest.raises(ValueError):
            poly_arith('div', x, y)

    def test_rejects_negative_power(self, r2):
        """Test exponents must be natural numbers"""
        with pytest.raises(ValueError):
            r2.var(0) ** -1

    def test_different_rings(self, f3, r2):
        """Test polynomials from different rings do not combine"""
        other = RingCtx(f3, ('u', 'v'))
        with pytest.raises(ContextMismatch):
            r2.var(0) + other.var(0)

    def test_lead_term(self, r3):
        """Test the leading monomial follows grevlex"""
        f = r3.parse('x*z + 2*y^2 + z^3')
        assert f.lead_monomial == (0, 0, 3)
        assert (f - r3.parse('z^3')).lead_monomial == (0, 2, 0)
        assert (f - r3.parse('z^3')).lead_coefficient == 2

    def test_zero_polynomial(self, r2):
        """Test the zero polynomial has neither degree nor leading term"""
        with pytest.raises(ZeroPolynomial):
            r2.zero().degree()
        with pytest.raises(ZeroPolynomial):
            r2.zero().lead_monomial

    def test_homogeneous_components(self, r2):
        """Test splitting into homogeneous parts"""
        f = r2.parse('x^2 + y + 1 + x*y')
        degree, parts = degree_and_components(f)
        assert degree == 2
        assert parts == [r2.one(), r2.parse('y'), r2.parse('x^2 + x*y')]
        assert not f.is_homogeneous()
        assert parts[2].is_homogeneous()

    def test_coefficient(self, r2):
        """Test coefficient lookup returns field scalars"""
        f = r2.parse('2*x*y')
        assert f.coefficient((1, 1)).code == 2
        assert f.coefficient((2, 0)).is_zero()


class TestSubstitution:
    """Tests for linear substitution and composition"""

    def test_substitute_swap(self, r2):
        """Test the swap matrix exchanges x and y"""
        f = r2.parse('x^2 + 2*y')
        assert f.substitute([[0, 1], [1, 0]]) == r2.parse('y^2 + 2*x')

    def test_substitute_is_right_action(self, r3):
        """Test f(N)(M) = f(N M)"""
        field = r3.field
        n_mat = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
        m_mat = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
        f = r3.parse('x^2*y + z^3 + x*y*z')
        assert f.substitute(n_mat).substitute(m_mat) == f.substitute(linalg.matmul(field, n_mat, m_mat))

    def test_substitute_wrong_size(self, r2):
        """Test the matrix must be n by n"""
        with pytest.raises(DimensionMismatch):
            r2.var(0).substitute([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_compose_into_other_ring(self, f3, r2):
        """Test composing into a weighted ring"""
        target = RingCtx(f3, ('s', 't'), weights=(1, 2))
        s, t = target.gens()
        f = r2.parse('x*y + y')
        assert f.compose([s, t]) == s * t + t
        with pytest.raises(DimensionMismatch):
            f.compose([s])

    def test_embed(self, f3, r2):
        """Test embedding moves variable i to the given position"""
        big = RingCtx(f3, ('u', 'x', 'y'))
        assert r2.parse('x*y^2').embed(big, [1, 2]) == big.parse('x*y^2')

    def test_constant_poly_equality(self, r2):
        """Test polynomials compare equal to constants"""
        assert Poly(r2, {(0, 0): 2}) == 2
        assert r2.zero() == 0
