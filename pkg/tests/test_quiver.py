"""Quiver presentations: path closure, relations, admissibility.

Dimensions are frozen from hand counts of the normal-form paths.
"""

import pytest

from perfcat.algebra import Algebra
from perfcat.errors import (
    InfiniteDimensional,
    MalformedRelation,
    PerfcatError,
)
from perfcat.linalg import Field, QQ

F5 = Field.prime(5)


def loop(field, relations, **kw):
    return Algebra.from_quiver(field, ["v"], [("x", "v", "v")], relations, **kw)


# -- basic closures ---------------------------------------------------------------


def test_single_vertex_no_arrows():
    a = Algebra.from_quiver(QQ, ["*"], [])
    assert a.dim == 1
    assert a.labels == ["e_*"]
    assert a.presentation.admissible is True


def test_disjoint_vertices():
    a = Algebra.from_quiver(QQ, [0, 1, 2], [])
    assert a.dim == 3
    assert a.unit == [1, 1, 1]
    assert a.radical().dim == 0


def test_loop_truncated_at_square():
    a = loop(QQ, [[("x", "x")]])
    assert a.dim == 2
    assert a.labels == ["e_v", "x"]
    x = a.basis_element(1)
    assert a.multiply(x, x) == a.zero_vector()
    assert a.presentation.admissible is True
    assert a.presentation.basis_degrees == [0, 1]


def test_loop_truncated_at_cube():
    a = loop(QQ, [[("x", "x", "x")]])
    assert a.dim == 3
    x = a.basis_element(1)
    assert a.multiply(x, x) == a.basis_element(2)
    assert a.multiply(a.basis_element(2), x) == a.zero_vector()


def test_kronecker_products():
    a = Algebra.from_quiver(QQ, [0, 1], [("a", 0, 1), ("b", 0, 1)])
    assert a.dim == 4
    assert a.labels == ["e_0", "e_1", "a", "b"]
    e0, e1 = a.basis_element(0), a.basis_element(1)
    ar, br = a.basis_element(2), a.basis_element(3)
    # paths compose left to right: e0 * a = a = a * e1
    assert a.multiply(e0, ar) == ar
    assert a.multiply(ar, e1) == ar
    assert a.multiply(ar, e0) == a.zero_vector()
    assert a.multiply(ar, br) == a.zero_vector()
    assert a.presentation.admissible is True


def test_a3_with_zero_composite():
    a = Algebra.from_quiver(QQ, [0, 1, 2], [("a", 0, 1), ("b", 1, 2)],
                            [[("a", "b")]])
    assert a.dim == 5
    assert a.labels == ["e_0", "e_1", "e_2", "a", "b"]


def test_a3_free_has_composite_path():
    a = Algebra.from_quiver(QQ, [0, 1, 2], [("a", 0, 1), ("b", 1, 2)])
    assert a.dim == 6
    assert "a*b" in a.labels
    ar = a.basis_element(a.labels.index("a"))
    br = a.basis_element(a.labels.index("b"))
    ab = a.basis_element(a.labels.index("a*b"))
    assert a.multiply(ar, br) == ab
    assert a.multiply(br, ar) == a.zero_vector()


def test_commuting_square():
    a = Algebra.from_quiver(
        QQ, [0, 1, 2, 3],
        [("a", 0, 1), ("b", 0, 2), ("c", 1, 3), ("d", 2, 3)],
        [[(1, ("a", "c")), (-1, ("b", "d"))]])
    assert a.dim == 9  # 4 vertices + 4 arrows + one diagonal
    ac = a.multiply(a.basis_element(4), a.basis_element(6))
    bd = a.multiply(a.basis_element(5), a.basis_element(7))
    assert ac == bd
    assert any(ac)
    assert a.presentation.admissible is True


def test_quiver_over_prime_field_with_coefficients():
    a = loop(F5, [[(1, ("x", "x")), ("1/2", ("x",))]])
    # x^2 = -1/2 x = 2x mod 5
    x = a.basis_element(1)
    assert a.multiply(x, x) == [0, 2]
    assert a.presentation.admissible is False


# -- inhomogeneous relations and restarts -------------------------------------------


def test_idempotent_loop_relation():
    a = loop(QQ, [[(1, ("x", "x")), (-1, ("x",))]])
    assert a.dim == 2
    x = a.basis_element(1)
    assert a.multiply(x, x) == x
    assert a.presentation.admissible is False
    assert a.radical().dim == 0


def test_derived_relation_collapses_loop():
    # x^3 = 0 plus x^2 = x forces x = 0
    a = loop(QQ, [[("x", "x", "x")], [(1, ("x", "x")), (-1, ("x",))]])
    assert a.dim == 1
    assert a.labels == ["e_v"]


def test_mixed_degree_relation_beyond_closure_degree():
    # x^2 = x^3: multiplying repeatedly gives x^2 = x^4 = ...; with x^5 = 0
    # everything from degree 2 up dies.
    a = loop(QQ, [[(1, ("x", "x")), (-1, ("x", "x", "x"))],
                  [("x",) * 5]])
    assert a.dim == 2
    x = a.basis_element(1)
    assert a.multiply(x, x) == a.zero_vector()


# -- malformed input -------------------------------------------------------------


def test_unknown_arrow_rejected():
    with pytest.raises(MalformedRelation):
        loop(QQ, [[("y", "x")]])


def test_non_composable_path_rejected():
    with pytest.raises(MalformedRelation):
        Algebra.from_quiver(QQ, [0, 1], [("a", 0, 1)], [[("a", "a")]])


def test_mixed_endpoints_rejected():
    with pytest.raises(MalformedRelation):
        Algebra.from_quiver(
            QQ, [0, 1, 2], [("a", 0, 1), ("b", 0, 2)],
            [[(1, ("a",)), (1, ("b",))]])


def test_empty_path_rejected():
    with pytest.raises(MalformedRelation):
        loop(QQ, [[(1, ())]])


def test_bad_arrow_spec_rejected():
    with pytest.raises(MalformedRelation):
        Algebra.from_quiver(QQ, [0], [("a", 0, 1)])  # target vertex missing
    with pytest.raises(MalformedRelation):
        Algebra.from_quiver(QQ, [0, 0], [])  # duplicate vertex
    with pytest.raises(MalformedRelation):
        Algebra.from_quiver(QQ, [0], [("a", 0, 0), ("a", 0, 0)])  # dup arrow


def test_zero_coefficient_terms_are_dropped():
    a = loop(QQ, [[(0, ("x",)), (1, ("x", "x"))]])
    assert a.dim == 2  # behaves exactly like the x^2 truncation


# -- infinite dimensionality -------------------------------------------------------


def test_free_loop_is_infinite():
    with pytest.raises(InfiniteDimensional):
        loop(QQ, [], max_path_length=5)


def test_default_cap_reports_infinite():
    with pytest.raises(InfiniteDimensional):
        Algebra.from_quiver(QQ, [0], [("x", 0, 0), ("y", 0, 0)],
                            [[("x", "y")]], max_path_length=6)


# -- admissibility and the radical shortcut ----------------------------------------


def test_admissible_radical_is_arrow_ideal():
    a = Algebra.from_quiver(QQ, [0, 1], [("a", 0, 1), ("b", 0, 1)])
    r = a.radical()
    assert r.dim == 2
    assert r.contains(a.basis_element(2))
    assert r.contains(a.basis_element(3))


def test_non_admissible_falls_back_to_honest_radical():
    a = loop(QQ, [[(1, ("x", "x")), (-1, ("x",))]])
    assert a.presentation.admissible is False
    # x is a nontrivial idempotent, so the algebra is semisimple: k x k
    assert a.radical().dim == 0


def test_path_budget_guard():
    arrows = [(c, 0, 0) for c in "vwxyz"]
    with pytest.raises((InfiniteDimensional, PerfcatError)):
        Algebra.from_quiver(QQ, [0], arrows, [], max_path_length=8)
