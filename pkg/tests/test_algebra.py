"""Structure-constant algebras: arithmetic, radicals, quotients, idempotents.

Radical dimensions and block shapes below were worked out by hand for each
example (they are small enough to check on paper) and frozen here.
"""

from fractions import Fraction

import pytest

from perfcat.algebra import Algebra, Ideal
from perfcat.errors import (
    FieldMismatch,
    NotAssociative,
    NotIdempotent,
    NotSemisimple,
    PerfcatError,
    UnitFails,
)
from perfcat.linalg import Basis, Field, Matrix, QQ
from perfcat.semisimple import (
    _poly_roots,
    _radical_char0,
    block_decomposition,
    is_division_algebra,
    lifted_decomposition,
    number_of_simples,
)
from util import (
    kronecker,
    matrix_algebra,
    quaternion_algebra,
    split_field_ext,
    truncated_poly,
)

F2 = Field.prime(2)
F5 = Field.prime(5)


# -- construction and arithmetic -----------------------------------------------------


def test_one_dimensional_field_algebra():
    k = Algebra.from_structure_constants(QQ, [[[1]]], [1], name="k")
    assert k.dim == 1
    assert k.multiply([Fraction(3)], [Fraction(1, 2)]) == [Fraction(3, 2)]
    assert k.nilpotency_index() == 1
    assert k.is_separable() is True


def test_truncated_poly_arithmetic():
    a = truncated_poly(QQ, 3)
    x = a.basis_element(1)
    assert a.multiply(x, x) == a.basis_element(2)
    assert a.power(x, 3) == a.zero_vector()
    assert a.power(x, 0) == a.unit
    assert a.is_idempotent(a.unit)
    assert not a.is_idempotent(x)


def test_associativity_rejected():
    # x*x = 1 but x*y etc. chosen to break (x x) x = x (x x)
    table = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 0, 1], [0, 1, 0], [0, 1, 0]],
    ]
    with pytest.raises(NotAssociative):
        Algebra.from_structure_constants(QQ, table, [1, 0, 0])


def test_unit_law_rejected():
    table = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    with pytest.raises(UnitFails):
        Algebra.from_structure_constants(QQ, table, [0, 1])


def test_dense_table_round_trip():
    a = truncated_poly(QQ, 2)
    t = a.table
    assert t[1][1] == [0, 0]
    assert t[0][1] == [0, 1]
    again = Algebra.from_structure_constants(QQ, t, a.unit, a.labels)
    assert again.table == t


# -- radical, nilpotency, semisimple quotient ---------------------------------------


def test_radical_of_semisimple_is_zero():
    kk = Algebra.from_structure_constants(
        QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], name="k+k")
    assert kk.radical().dim == 0
    assert kk.nilpotency_index() == 1
    s, proj, sec = kk.semisimple_quotient()
    assert s.dim == 2


def test_radical_of_truncated_poly():
    a = truncated_poly(QQ, 3)
    r = a.radical()
    assert r.dim == 2
    span = Basis(QQ, 3)
    for v in r.basis_vectors():
        span.extend(v)
    assert span.contains([0, 1, 0]) and span.contains([0, 0, 1])
    assert a.nilpotency_index() == 3
    s, proj, sec = a.semisimple_quotient()
    assert s.dim == 1
    # proj is a retraction of sec
    assert sec @ proj == Matrix.identity(QQ, 1)


def test_radical_of_kronecker():
    a = kronecker(QQ)
    r = a.radical()
    assert r.dim == 2
    assert a.nilpotency_index() == 2
    assert number_of_simples(a) == 2


def test_radical_over_small_prime_field():
    # Gram matrix vanishes identically mod 2; the lifted trace chain is what
    # actually finds the answer here.
    a = truncated_poly(F2, 2)
    r = a.radical()
    assert r.dim == 1
    assert r.basis_vectors() == [[0, 1]]


def test_radical_matrix_algebra_mod_p():
    assert matrix_algebra(F5, 2).radical().dim == 0


def test_semisimple_quotient_projection_identities():
    a = kronecker(QQ)
    s, proj, sec = a.semisimple_quotient()
    assert s.dim == 2
    assert sec @ proj == Matrix.identity(QQ, s.dim)
    # the section is multiplicative modulo the radical: check on products
    for x in range(s.dim):
        for y in range(s.dim):
            lift = a.multiply(sec.rows[x], sec.rows[y])
            down = s.multiply(s.basis_element(x), s.basis_element(y))
            assert proj.vecmat(lift) == down


def test_separability():
    assert split_field_ext().is_separable() is True
    with pytest.raises(NotSemisimple):
        truncated_poly(QQ, 2).is_separable()
    assert matrix_algebra(F5, 2).is_separable() is True


# -- opposite, tensor, enveloping, corner --------------------------------------------


def test_opposite_reverses_products():
    a = kronecker(QQ)
    op = a.opposite()
    e0 = a.basis_element(0)
    ar = a.basis_element(2)
    assert a.multiply(e0, ar) == ar
    assert op.multiply(e0, ar) == a.zero_vector()
    assert op.multiply(ar, e0) == ar


def test_tensor_product_dimensions_and_radical():
    a = truncated_poly(QQ, 2)
    t = a.tensor_product(a)
    assert t.dim == 4
    # rad(A(x)B) = rad A (x) B + A (x) rad B has dimension 1*2 + 2*1 - 1
    assert t.radical().dim == 3
    assert t.nilpotency_index() == 3


def test_tensor_field_mismatch():
    with pytest.raises(FieldMismatch):
        truncated_poly(QQ, 2).tensor_product(truncated_poly(F5, 2))


def test_enveloping_hint_matches_direct_computation():
    a = truncated_poly(QQ, 2)
    env = a.enveloping()
    assert env.dim == 4
    hinted = env.radical()
    direct = _radical_char0(env)
    span = Basis(QQ, env.dim)
    for v in direct:
        span.extend(v)
    assert span.dim == hinted.dim
    assert all(span.contains(r) for r in hinted.basis_vectors())


def test_corner_at_unit_and_at_vertex():
    a = kronecker(QQ)
    whole, rows = a.corner(a.unit)
    assert whole.dim == a.dim
    c, rows = a.corner(a.basis_element(0))
    assert c.dim == 1
    assert rows == [a.basis_element(0)]
    zero, _ = a.corner(a.zero_vector())
    assert zero.dim == 0
    with pytest.raises(NotIdempotent):
        a.corner(a.basis_element(2))


def test_corner_multiplication_matches_ambient():
    a = matrix_algebra(QQ, 2)
    e = [1, 0, 0, 0]  # E11
    c, rows = a.corner(e)
    assert c.dim == 1
    assert c.unit == [1]
    prod = c.multiply([2], [3])
    ambient = a.multiply([2 * r for r in rows[0]], [3 * r for r in rows[0]])
    assert ambient == [6 * r for r in rows[0]]
    assert prod == [6]


def test_center():
    assert len(matrix_algebra(QQ, 2).center_basis()) == 1
    assert len(truncated_poly(QQ, 2).center_basis()) == 2
    assert len(kronecker(QQ).center_basis()) == 1


# -- blocks, idempotent lifting, division recognition --------------------------------


def test_blocks_of_matrix_algebra():
    m2 = matrix_algebra(QQ, 2)
    blocks = block_decomposition(m2)
    assert [(b.matrix_size, b.division_dim) for b in blocks] == [(2, 1)]
    e = blocks[0].idempotents
    assert m2.multiply(e[0], e[1]) == m2.zero_vector()
    assert [sum(col) for col in zip(e[0], e[1])] == m2.unit


def test_blocks_of_product_algebra():
    kk = Algebra.from_structure_constants(
        QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], name="k+k")
    blocks = block_decomposition(kk)
    assert len(blocks) == 2
    assert all(b.matrix_size == 1 and b.division_dim == 1 for b in blocks)


def test_blocks_of_quaternions():
    h = quaternion_algebra(QQ, -1, -1)
    blocks = block_decomposition(h)
    assert [(b.matrix_size, b.division_dim) for b in blocks] == [(1, 4)]


def test_lifted_idempotents_kronecker():
    a = kronecker(QQ)
    lb = lifted_decomposition(a)
    idems = [e for b in lb for e in b.idempotents]
    assert len(idems) == 2
    total = a.zero_vector()
    for e in idems:
        assert a.is_idempotent(e)
        total = [x + y for x, y in zip(total, e)]
    assert total == a.unit
    assert a.multiply(idems[0], idems[1]) == a.zero_vector()


def test_lifted_idempotents_nontrivial_radical():
    # A3 quiver with the composite killed: three vertices stay orthogonal
    a = Algebra.from_quiver(QQ, [0, 1, 2], [("a", 0, 1), ("b", 1, 2)],
                            [[("a", "b")]])
    assert a.dim == 5
    lb = lifted_decomposition(a)
    idems = [e for b in lb for e in b.idempotents]
    assert len(idems) == 3
    for x in idems:
        for y in idems:
            want = x if x is y else a.zero_vector()
            assert a.multiply(x, y) == want


def test_division_recognition():
    assert is_division_algebra(quaternion_algebra(QQ, -1, -1)) is True
    assert is_division_algebra(matrix_algebra(QQ, 2)) is False
    assert is_division_algebra(split_field_ext()) is True
    assert is_division_algebra(truncated_poly(QQ, 2)) is False
    # finite division rings are fields: a noncommutative simple mod-p algebra
    assert is_division_algebra(matrix_algebra(F2, 2)) is False


def test_division_recognition_finite_field_extension():
    f4 = Algebra.from_structure_constants(
        F2, [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], [1, 0], name="F4")
    assert is_division_algebra(f4) is True


def test_division_recognition_declines_indefinite_case():
    # i^2 = 2, j^2 = 3: ramified at 2, so a genuine division algebra, but the
    # trace-zero norm form is indefinite and recognition honestly gives up.
    h = quaternion_algebra(QQ, 2, 3)
    assert is_division_algebra(h) is None


# -- ideals ---------------------------------------------------------------------------


def test_ideal_membership_and_flags():
    a = kronecker(QQ)
    r = a.radical()
    assert r.is_ideal()
    assert r.contains(a.basis_element(2))
    assert not r.contains(a.basis_element(0))
    assert r.nilpotency_index() == 2


def test_non_nilpotent_ideal_raises():
    kk = Algebra.from_structure_constants(
        QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], name="k+k")
    i = Ideal(kk, [[1, 0]])
    assert i.is_ideal()
    with pytest.raises(PerfcatError):
        i.nilpotency_index()


def test_non_ideal_detected():
    a = matrix_algebra(QQ, 2)
    i = Ideal(a, [[0, 1, 0, 0]])  # span{E12} is not two-sided
    assert not i.is_ideal()


# -- polynomial roots (used by the eigen-splitter) ------------------------------------


def test_poly_roots_over_q():
    # (X - 2)(X + 1/3)(X^2 + 1), ascending coefficients
    f = [Fraction(-2, 3), Fraction(-5, 3), Fraction(1, 3), Fraction(-5, 3),
         Fraction(1)]
    assert _poly_roots(QQ, f) == [Fraction(-1, 3), Fraction(2)]


def test_poly_roots_large_prime():
    p = 2147483647
    fp = Field.prime(p)
    f = [35 % p, (-12) % p, 1]  # (X-5)(X-7)
    assert _poly_roots(fp, f) == [5, 7]


def test_poly_roots_small_prime():
    f7 = Field.prime(7)
    assert _poly_roots(f7, [3, 0, 1]) == [2, 5]  # X^2 = 4 mod 7
