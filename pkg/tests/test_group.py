import pytest

from mil import linalg
from mil.errors import ContextMismatch, DimensionMismatch, NotInvertible, OrderCapExceeded
from mil.field import FieldSpec
from mil.group import SquareMatrix, classify_element, classify_group, closure, element_order, one_minus_g_height

SWAP = [['0', '1'], ['1', '0']]
CYCLE = [['0', '1', '0'], ['0', '0', '1'], ['1', '0', '0']]
KLEIN_G = [[1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 1, 0, 0, 0],
           [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 1], [0, 0, 0, 0, 0, 1]]
KLEIN_H = [[1, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
           [0, 0, 0, 1, 0, 1], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]


class TestLinalg:
    """Tests for dense linear algebra over finite fields"""

    def test_rank_and_nullspace(self, f3):
        """Test rank plus nullity equals the column count"""
        m = [[1, 2, 0], [2, 1, 0], [0, 0, 1]]
        assert linalg.rank(f3, m) == 2
        kernel = linalg.nullspace(f3, m, 3)
        assert len(kernel) == 1
        assert linalg.matmul(f3, m, linalg.transpose(kernel)) == [[0], [0], [0]]

    def test_determinant_and_inverse(self, f9):
        """Test the inverse of an F_9 matrix multiplies back to the identity"""
        a = f9.parse('a').code
        m = [[a, 1], [0, 1]]
        assert linalg.determinant(f9, m) == a
        assert linalg.matmul(f9, m, linalg.inverse(f9, m)) == linalg.identity(2)
        assert linalg.inverse(f9, [[1, 1], [1, 1]]) is None

    def test_column_rank(self, f2):
        """Test the column rank of a stack of matrices"""
        assert linalg.column_rank(f2, [[[1, 0], [0, 0]], [[1, 0], [0, 0]]]) == 1
        assert linalg.column_rank(f2, []) == 0


class TestSquareMatrix:
    """Tests for matrix values"""

    def test_from_strings(self, f9):
        """Test entries may use the extension generator"""
        m = SquareMatrix.from_strings(f9, [['a', '0'], ['0', '2*a']])
        assert m.determinant.code == 1
        assert m.to_strings() == [['a', '0'], ['0', '2*a']]
        assert str(m) == '[[a, 0], [0, 2*a]]'

    def test_rejects_non_square(self, f3):
        """Test non-square input is refused"""
        with pytest.raises(DimensionMismatch):
            SquareMatrix(f3, [[1, 0]])

    def test_inverse(self, f3, matrix):
        """Test inversion and singular input"""
        m = matrix(f3, [['1', '1'], ['0', '1']])
        assert (m * m.inverse()).is_identity()
        with pytest.raises(NotInvertible):
            matrix(f3, [['1', '1'], ['1', '1']]).inverse()

    def test_power(self, f3, matrix):
        """Test the 3-cycle cubes to the identity"""
        m = matrix(f3, CYCLE)
        assert (m ** 3).is_identity()
        assert element_order(m) == 3

    def test_mixed_fields(self, f3, f9):
        """Test matrices over different fields do not multiply"""
        with pytest.raises(ContextMismatch):
            SquareMatrix.identity(f3, 2) * SquareMatrix.identity(f9, 2)


class TestClosure:
    """Tests for enumerating a group from its generators"""

    def test_swap(self, f3, matrix):
        """Test the swap generates a group of order 2"""
        group = closure([matrix(f3, SWAP)])
        assert group.order == 2
        assert group.elements[0].is_identity()

    def test_klein(self, f2):
        """Test the Klein generators g and h generate a group of order 4"""
        group = closure([SquareMatrix(f2, KLEIN_G), SquareMatrix(f2, KLEIN_H)])
        assert group.order == 4
        assert all(element_order(g) <= 2 for g in group)

    def test_braun(self, braun):
        """Test the Braun group has order 12"""
        assert braun.group.order == 12
        assert braun.group.classification.in_SL

    def test_order_cap(self, f9, matrix):
        """Test an order above the cap is refused"""
        gens = [matrix(f9, [['a', '0'], ['0', '2*a']]), matrix(f9, [['1', '1'], ['0', '1']])]
        with pytest.raises(OrderCapExceeded):
            closure(gens, cap=5)

    def test_order_cap_from_env(self, f3, matrix, monkeypatch):
        """Test MIL_ORDER_CAP sets the default cap"""
        monkeypatch.setenv('MIL_ORDER_CAP', '2')
        with pytest.raises(OrderCapExceeded):
            closure([matrix(f3, CYCLE)])

    def test_rejects_singular(self, f3, matrix):
        """Test singular generators are refused"""
        with pytest.raises(NotInvertible):
            closure([matrix(f3, [['1', '0'], ['0', '0']])])

    def test_rejects_mixed_sizes(self, f3, matrix):
        """Test generators must share a size"""
        with pytest.raises(DimensionMismatch):
            closure([matrix(f3, SWAP), matrix(f3, CYCLE)])

    def test_group_axioms(self, f9, matrix):
        """Test closure, inverses and Lagrange on the Braun group"""
        gens = [matrix(f9, [['a', '0'], ['0', '2*a']]), matrix(f9, [['1', '1'], ['0', '1']])]
        group = closure(gens)
        assert all(g * h in group for g in group for h in group)
        assert all(g.inverse() in group for g in group)
        assert all(group.order % element_order(g) == 0 for g in group)

    def test_cosets(self, f2):
        """Test coset representatives of <g> in the Klein group"""
        group = closure([SquareMatrix(f2, KLEIN_G), SquareMatrix(f2, KLEIN_H)])
        sub = group.subgroup([SquareMatrix(f2, KLEIN_G)])
        assert sub.order == 2
        reps = group.coset_representatives(sub)
        assert len(reps) == 2
        assert reps[0].is_identity()

    def test_subgroup_rejects_outsiders(self, f2):
        """Test subgroup generators must be group elements"""
        group = closure([SquareMatrix(f2, KLEIN_G)])
        with pytest.raises(ContextMismatch):
            group.subgroup([SquareMatrix(f2, KLEIN_H)])
        assert group.subgroup([]).order == 1


class TestClassification:
    """Tests for element and group classification"""

    def test_swap_odd_characteristic(self, f3, matrix):
        """Test the swap over F_3 is a pseudoreflection but not a transvection"""
        c = classify_element(matrix(f3, SWAP))
        assert c.is_pseudoreflection
        assert not c.is_transvection
        assert c.determinant.code == 2

    def test_swap_characteristic_two(self, f2, matrix):
        """Test the swap over F_2 is a transvection"""
        c = classify_element(matrix(f2, SWAP))
        assert c.is_pseudoreflection
        assert c.is_transvection

    def test_klein_generator(self, f2):
        """Test the Klein generator g has rank(g - I) = 2"""
        c = classify_element(SquareMatrix(f2, KLEIN_G))
        assert c.rank_g_minus_I == 2
        assert not c.is_pseudoreflection
        assert c.to_dict()['order'] == 2

    def test_height(self, f2, f3, matrix):
        """Test the height of (1 - g)R"""
        assert one_minus_g_height(SquareMatrix.identity(f3, 3)) == 0
        assert one_minus_g_height(matrix(f3, SWAP)) == 1
        assert one_minus_g_height(SquareMatrix(f2, KLEIN_H)) == 2

    def test_a3(self, f3, matrix):
        """Test A_3 is cyclic, modular and in SL without pseudoreflections"""
        c = classify_group(closure([matrix(f3, CYCLE)]))
        assert (c.order, c.in_SL, c.has_pseudoreflection, c.modular, c.cyclic) == (3, True, False, True, True)

    def test_klein6(self, f2):
        """Test the six-dimensional Klein action is not cyclic"""
        c = classify_group(closure([SquareMatrix(f2, KLEIN_G), SquareMatrix(f2, KLEIN_H)]))
        assert (c.order, c.in_SL, c.has_pseudoreflection, c.modular, c.cyclic) == (4, True, False, True, False)
        assert c.to_dict()['transvections'] == []

    def test_trivial_group(self, f3):
        """Test the trivial group is nonmodular and cyclic"""
        c = classify_group(closure([SquareMatrix.identity(f3, 2)]))
        assert (c.order, c.in_SL, c.modular, c.cyclic) == (1, True, False, True)

    def test_klein3_transvections(self, klein3):
        """Test every non-identity element of the 3-dimensional Klein action is a transvection"""
        c = klein3.group.classification
        assert c.transvections == (1, 2, 3)

    def test_reflection_in_f9(self):
        """Test diag(a, 1) over F_9 is a non-transvection pseudoreflection of order 4"""
        f9 = FieldSpec(3, 2)
        c = classify_element(SquareMatrix.from_strings(f9, [['a', '0'], ['0', '1']]))
        assert c.is_pseudoreflection and not c.is_transvection
        assert c.element_order == 4
