import pytest

from oracles import det_permutations

from charp import data
from charp.commutator import (SymbolicMatrix, commutator, det, family_positions, ideal_from_family,
                              indeterminate_matrices, jacobian, var_name)
from charp.dsl import parse_poly
from charp.ring import RingCtx


def test_one_by_one():
    ring, X, Y = indeterminate_matrices(1, 2)
    assert ring.variables == ("x11", "y11")
    assert commutator(X, Y).entry(1, 1).is_zero()


@pytest.mark.parametrize("n,count", [(3, 18), (4, 32)])
def test_variable_count(n, count):
    ring, _, _ = indeterminate_matrices(n, 2)
    assert ring.nvars == count


def test_large_n_names_are_unambiguous():
    assert var_name("x", 1, 11, 11) == "x_1_11"
    assert var_name("y", 2, 3, 4) == "y23"


def test_c11_for_n3():
    ring, X, Y = indeterminate_matrices(3, 7)
    assert commutator(X, Y).entry(1, 1) == parse_poly(ring, data.A3_GENERATORS[(1, 1)])


def test_displayed_A4_generators():
    ring, X, Y = indeterminate_matrices(4, 5)
    C = commutator(X, Y)
    for (i, j), text in data.A4_GENERATORS.items():
        assert C.entry(i, j) == parse_poly(ring, text)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_trace_is_zero(n):
    _, X, Y = indeterminate_matrices(n, 3)
    assert commutator(X, Y).trace().is_zero()


def test_family_orders():
    assert family_positions(3, "trace-adjusted-cross") == [(1, 1), (2, 2), (3, 1), (1, 3)]
    assert family_positions(4, "trace-adjusted-cross") == [
        (1, 1), (2, 2), (3, 3), (4, 1), (3, 2), (2, 3), (1, 4)]
    assert family_positions(2, "anti-diagonal") == [(2, 1), (1, 2)]
    assert len(family_positions(4, "off-diagonal")) == 12


def test_ideal_from_family_counts():
    ring, X, Y = indeterminate_matrices(3, 2)
    assert len(ideal_from_family(commutator(X, Y), "trace-adjusted-cross")) == 4
    ring, X, Y = indeterminate_matrices(4, 2)
    assert len(ideal_from_family(commutator(X, Y), "trace-adjusted-cross")) == 7


def test_unknown_family():
    with pytest.raises(ValueError):
        family_positions(3, "upper")


def test_jacobian_small():
    r = RingCtx(3, ("x", "y"))
    J = jacobian([parse_poly(r, "x^2 + y")], ["x", "y"])
    assert J.entries == ((parse_poly(r, "2*x"), r.one()),)


def test_jacobian_of_constants():
    r = RingCtx(3, ("x", "y"))
    J = jacobian([r.const(2), r.one()], ["x", "y"])
    assert all(e.is_zero() for row in J.entries for e in row)


def test_jacobian_of_T_matches_display():
    r = RingCtx(7, tuple(data.W_VARS + data.Z_VARS))
    F = [parse_poly(r, s) for s in data.T_GENERATORS]
    J = jacobian(F, data.T_JACOBIAN_VARS).transpose()
    shown = [[parse_poly(r, s) for s in row] for row in data.T_JACOBIAN_MATRIX]
    assert [list(row) for row in J.entries] == shown
    assert det(J) == parse_poly(r, data.T_TEST_ELEMENT) ** 2


def test_A3_minor():
    ring, X, Y = indeterminate_matrices(3, 5)
    C = commutator(X, Y)
    gens = [C.entry(i, j) for i, j in family_positions(3, "trace-adjusted-cross")]
    M = jacobian(gens, data.A3_JACOBIAN_VARS)
    assert det(M) == -parse_poly(ring, data.A3_TEST_ELEMENT)


def test_identity_determinant():
    r = RingCtx(3, ("x",))
    M = SymbolicMatrix(tuple(tuple(r.one() if i == j else r.zero() for j in range(4)) for i in range(4)))
    assert det(M) == r.one()


def test_det_matches_permutation_expansion():
    ring, X, Y = indeterminate_matrices(3, 3)
    M = commutator(X, Y)
    assert det(M) == det_permutations(M.entries)


def test_matrix_validation():
    r = RingCtx(2, ("x",))
    with pytest.raises(ValueError):
        SymbolicMatrix(((r.one(),), (r.one(), r.one())))
    with pytest.raises(ValueError):
        det(SymbolicMatrix(((r.one(), r.one()),)))
