"""Multiplication tensors on a pair of 3-dimensional spaces: quotient maps,
slice ranks, the determinant cubic, nondegeneracy verdicts, and the
15-dimensional directed algebra.

The frozen values were derived by hand before being asserted: expanding the
3x3 contraction determinant for the three-parameter family gives

    (a^3 + b^3 + c^3) * xyz  -  a*b*c * (x^3 + y^3 + z^3)

on either side, and the rank <= 1 locus of that family works out to "at most
one nonzero parameter, or all three cubes equal and nonzero".  The finite
field counts (124 nonzero functionals over F_5, 342 over F_7) and the
algebra's dimension table were counted directly.
"""

import itertools
from fractions import Fraction

import pytest

from perfcat.errors import (
    DegenerateParameters,
    PerfcatError,
    ShapeMismatch,
    UnsupportedField,
    ZeroFunctional,
)
from perfcat.gluing import collection_algebra
from perfcat.linalg import Basis, Field, QQ
from perfcat.modules import (
    DimensionBound,
    cartan_matrix,
    global_dimension,
    pd_bound,
    regular_module,
    simple_modules,
    submodule,
)
from perfcat.ncplane import (
    MONOMIALS,
    Cubic,
    MuTensor,
    check_nondegenerate,
    commutative_tensor,
    gamma_cubic,
    plane_algebra,
    sklyanin_tensor,
    slice_matrix,
    slice_rank_profile,
    vertex_idempotents,
)

F5 = Field.prime(5)
F7 = Field.prime(7)

#: Kernel rows v_0(x)u_0, v_0(x)u_1, v_0(x)u_2 — every contraction against a
#: functional on U lands in the first column (rank 1 everywhere), while a
#: functional on V gives its first coordinate times the identity.
FLAT_ROWS = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
]


# -- the cubic form ----------------------------------------------------------

def test_cubic_normalization_and_support():
    raw = Cubic(QQ, [-6, -6, -6, 0, 0, 0, 0, 0, 0, 36])
    norm = raw.normalized()
    assert norm.coeffs == [Fraction(c) for c in (1, 1, 1, 0, 0, 0, 0, 0, 0, -6)]
    assert norm.support() == ("x^3", "y^3", "z^3", "xyz")
    assert norm.coefficient("xyz") == Fraction(-6)
    assert str(norm) == "x^3 + y^3 + z^3 - 6*xyz"
    assert norm.normalized() == norm


def test_cubic_zero_form():
    zero = Cubic(QQ, [0] * 10)
    assert zero.is_zero()
    assert zero.normalized() == zero
    assert zero.support() == ()
    assert str(zero) == "0"
    with pytest.raises(ShapeMismatch):
        Cubic(QQ, [1, 2, 3])


def test_cubic_evaluate():
    # x^3 + 2*xyz at (1, 2, 3) = 1 + 12 = 13
    form = Cubic(QQ, [1, 0, 0, 0, 0, 0, 0, 0, 0, 2])
    assert form.evaluate([1, 2, 3]) == Fraction(13)
    assert form.evaluate([0, 5, 7]) == Fraction(0)
    with pytest.raises(ShapeMismatch):
        form.evaluate([1, 2])


# -- tensor construction -----------------------------------------------------

def test_commutative_tensor_invariants():
    t = commutative_tensor(QQ)
    assert (t.mu.nrows, t.mu.ncols) == (9, 6)
    assert t.mu.rank() == 6
    assert t.t.nrows == 3 and t.nu is t.t
    assert (t.t @ t.mu).is_zero()
    # the matrix kernel of mu is exactly the span of the stored rows
    left_kernel = t.mu.transpose().kernel_basis()
    assert len(left_kernel) == 3
    span = Basis(QQ, 9)
    for row in t.t.rows:
        span.extend(row)
    for row in left_kernel:
        assert span.contains(row)


def test_mu_tensor_rejects_dependent_rows():
    rows = [FLAT_ROWS[0], FLAT_ROWS[1], FLAT_ROWS[0]]
    with pytest.raises(DegenerateParameters):
        MuTensor(QQ, rows)


def test_mu_tensor_rejects_bad_shape():
    with pytest.raises(ShapeMismatch):
        MuTensor(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ShapeMismatch):
        MuTensor(QQ, FLAT_ROWS[:2])


def test_sklyanin_all_zero_raises():
    with pytest.raises(DegenerateParameters):
        sklyanin_tensor(QQ, 0, 0, 0)


def test_commutative_is_a_family_member():
    """Same kernel as the (1, -1, 0) member, row for row after scaling."""
    comm = commutative_tensor(QQ)
    skl = sklyanin_tensor(QQ, 1, -1, 0)

    def normalized_rows(t):
        out = []
        for row in t.t.rows:
            lead = next(c for c in row if c)
            out.append(tuple(x / lead for x in row))
        return sorted(out)

    assert normalized_rows(comm) == normalized_rows(skl)
    span = Basis(QQ, 9)
    for row in comm.t.rows:
        span.extend(row)
    for row in skl.t.rows:
        assert span.contains(row)


def test_pair_index_convention():
    assert MuTensor.pair_index(0, 0) == 0
    assert MuTensor.pair_index(1, 2) == 5
    assert MuTensor.pair_index(2, 0) == 6


# -- slice contractions -------------------------------------------------------

def test_slice_matrix_entries_frozen():
    t = sklyanin_tensor(QQ, 1, 2, 3)
    u_side = slice_matrix(t, [1, 0, 0], "u")
    assert u_side.rows == [[Fraction(0), Fraction(2), Fraction(0)],
                           [Fraction(3), Fraction(0), Fraction(0)],
                           [Fraction(0), Fraction(0), Fraction(1)]]
    v_side = slice_matrix(t, [1, 0, 0], "v")
    assert v_side.rows == [[Fraction(0), Fraction(1), Fraction(0)],
                           [Fraction(3), Fraction(0), Fraction(0)],
                           [Fraction(0), Fraction(0), Fraction(2)]]


def test_slice_rank_validation():
    t = commutative_tensor(QQ)
    with pytest.raises(ZeroFunctional):
        slice_rank_profile(t, [0, 0, 0])
    with pytest.raises(ShapeMismatch):
        slice_rank_profile(t, [1, 0])
    with pytest.raises(PerfcatError):
        slice_rank_profile(t, [1, 0, 0], side="w")


def test_slice_rank_known_values():
    ones = sklyanin_tensor(QQ, 1, 1, 1)
    assert slice_rank_profile(ones, [1, 0, 0], "u") == 3
    assert slice_rank_profile(ones, [1, 1, 1], "u") == 1
    comm = commutative_tensor(QQ)
    assert slice_rank_profile(comm, [1, 0, 0], "u") == 2
    assert slice_rank_profile(comm, [1, 1, 1], "v") == 2


def test_commutative_rank_exactly_two_exhaustive():
    """Every nonzero functional on either side contracts to rank 2, checked
    over all 124 functionals of F_5 and all 342 of F_7."""
    for field, count in ((F5, 124), (F7, 342)):
        t = commutative_tensor(field)
        seen = 0
        for ints in itertools.product(range(field.characteristic), repeat=3):
            if not any(ints):
                continue
            seen += 1
            for side in ("u", "v"):
                assert slice_rank_profile(t, list(ints), side) == 2
        assert seen == count


# -- nondegeneracy verdicts ---------------------------------------------------

def test_check_exhaustive_commutative_f5():
    verdict = check_nondegenerate(commutative_tensor(F5))
    assert verdict.ok
    assert verdict.kind == "passes_sampled"
    assert verdict.mode == "exhaustive"
    assert verdict.checked == 124


def test_check_exhaustive_finds_equal_cubes_failure_f7():
    verdict = check_nondegenerate(sklyanin_tensor(F7, 1, 1, 1))
    assert not verdict.ok
    assert verdict.kind == "fails_at"
    assert verdict.mode == "exhaustive"
    side, coords, rank = verdict.witness
    assert rank <= 1
    assert slice_rank_profile(sklyanin_tensor(F7, 1, 1, 1), coords, side) == rank


def test_check_family_proved_for_generic_parameters():
    for params in ((1, 2, 3), (1, 1, 0), (2, 0, 5)):
        verdict = check_nondegenerate(sklyanin_tensor(QQ, *params))
        assert verdict.ok
        assert verdict.kind == "proved_for_family"
    assert check_nondegenerate(commutative_tensor(QQ)).kind == "proved_for_family"


def test_check_family_equal_cubes_fails():
    for field, params in ((QQ, (1, 1, 1)), (QQ, (2, 2, 2)),
                          # 46^3 = 1 mod 103, so the cubes agree without the
                          # parameters being equal
                          (Field.prime(103), (1, 46, 1))):
        t = sklyanin_tensor(field, *params)
        verdict = check_nondegenerate(t, method="family")
        assert not verdict.ok
        side, coords, rank = verdict.witness
        assert slice_rank_profile(t, coords, side) == rank <= 1


def test_check_family_single_parameter_fails():
    for params in ((1, 0, 0), (0, 1, 0), (0, 0, 7)):
        t = sklyanin_tensor(QQ, *params)
        verdict = check_nondegenerate(t, method="family")
        assert not verdict.ok
        side, coords, rank = verdict.witness
        assert slice_rank_profile(t, coords, side) == rank <= 1


def test_family_locus_agrees_with_exhaustion():
    for a, b, c in itertools.product(range(2), range(5), range(5)):
        if not (a or b or c):
            continue
        t = sklyanin_tensor(F5, a, b, c)
        family = check_nondegenerate(t, method="family")
        exhaustive = check_nondegenerate(t, method="exhaustive")
        assert family.ok == exhaustive.ok, (a, b, c)


def test_check_sampled_modes():
    flat = MuTensor(QQ, FLAT_ROWS, name="flat")
    verdict = check_nondegenerate(flat, samples=20, seed=3)
    assert verdict.kind == "fails_at" and verdict.mode == "sampled"
    side, coords, rank = verdict.witness
    assert rank <= 1

    # same kernel as the symmetric tensor but without the family tag: the
    # check can only sample
    untagged = MuTensor(QQ, commutative_tensor(QQ).t.rows, name="untagged")
    verdict = check_nondegenerate(untagged, samples=25, seed=11)
    assert verdict.ok
    assert verdict.kind == "passes_sampled"
    assert verdict.mode == "sampled"
    assert verdict.checked == 25


def test_check_sampled_is_deterministic():
    flat = MuTensor(QQ, FLAT_ROWS, name="flat")
    first = check_nondegenerate(flat, samples=20, seed=3)
    second = check_nondegenerate(flat, samples=20, seed=3)
    assert first.witness == second.witness and first.checked == second.checked


def test_check_method_validation():
    with pytest.raises(UnsupportedField):
        check_nondegenerate(commutative_tensor(QQ), method="exhaustive")
    with pytest.raises(PerfcatError):
        check_nondegenerate(commutative_tensor(QQ), method="guess")
    with pytest.raises(PerfcatError):
        check_nondegenerate(MuTensor(QQ, FLAT_ROWS), method="family")


# -- the determinant cubic ----------------------------------------------------

def test_gamma_commutative_identically_zero():
    for field in (QQ, F5):
        t = commutative_tensor(field)
        assert gamma_cubic(t, "u").is_zero()
        assert gamma_cubic(t, "v").is_zero()


def test_gamma_sklyanin_123_frozen():
    t = sklyanin_tensor(QQ, 1, 2, 3)
    form = gamma_cubic(t, "u")
    assert not form.is_zero()
    assert form.coeffs == [Fraction(c) for c in (1, 1, 1, 0, 0, 0, 0, 0, 0, -6)]
    assert form.support() == ("x^3", "y^3", "z^3", "xyz")
    assert gamma_cubic(t, "v") == form
    assert str(form) == "x^3 + y^3 + z^3 - 6*xyz"


def test_gamma_family_closed_form():
    """gamma of the (a, b, c) member is
    (a^3+b^3+c^3)*xyz - abc*(x^3+y^3+z^3) up to scale, on both sides."""
    import random

    rng = random.Random(7)
    for _ in range(10):
        a, b, c = (rng.randint(-5, 5) for _ in range(3))
        if not (a or b or c):
            continue
        t = sklyanin_tensor(QQ, a, b, c)
        cubes = Fraction(a) ** 3 + Fraction(b) ** 3 + Fraction(c) ** 3
        prod = Fraction(a) * b * c
        expected = Cubic(QQ, [-prod, -prod, -prod, 0, 0, 0, 0, 0, 0, cubes])
        assert gamma_cubic(t, "u") == expected.normalized()
        assert gamma_cubic(t, "v") == expected.normalized()


def test_gamma_vanishing_matches_rank_drop():
    """Over F_5 the zero locus of the cubic is exactly the set of functionals
    whose slice misses full rank."""
    t = sklyanin_tensor(F5, 1, 2, 3)
    form = gamma_cubic(t, "u")
    for ints in itertools.product(range(5), repeat=3):
        if not any(ints):
            continue
        value = form.evaluate(list(ints))
        rank = slice_rank_profile(t, list(ints), "u")
        assert (value == 0) == (rank < 3), ints


def test_gamma_flat_tensor_sides_differ():
    flat = MuTensor(QQ, FLAT_ROWS, name="flat")
    assert gamma_cubic(flat, "u").is_zero()
    # on the V side the contraction is v*_0 times the identity, so the
    # determinant is the cube of the first coordinate
    v_side = gamma_cubic(flat, "v")
    assert v_side.support() == ("x^3",)
    assert v_side.coefficient("x^3") == Fraction(1)


# -- the 15-dimensional directed algebra --------------------------------------

def test_plane_algebra_commutative():
    alg = plane_algebra(commutative_tensor(QQ))
    assert alg.dim == 15
    assert len(simple_modules(alg)) == 3
    idems = vertex_idempotents(alg)
    assert cartan_matrix(alg, idems) == [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert global_dimension(alg) == DimensionBound.finite(2)
    # the trivial paths are orthogonal idempotents summing to the unit
    total = [sum(xs) for xs in zip(*idems)]
    assert total == alg.unit
    for i, e in enumerate(idems):
        assert alg.multiply(e, e) == e
        for j, f in enumerate(idems):
            if i != j:
                assert not any(alg.multiply(e, f))


def test_plane_algebra_sklyanin():
    alg = plane_algebra(sklyanin_tensor(QQ, 1, 2, 3))
    assert alg.dim == 15
    assert cartan_matrix(alg, vertex_idempotents(alg)) == \
        [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert global_dimension(alg) == DimensionBound.finite(2)


def test_plane_algebra_finite_field():
    alg = plane_algebra(commutative_tensor(F5))
    assert alg.dim == 15
    assert global_dimension(alg) == DimensionBound.finite(2)


def test_plane_algebra_relations_hold():
    t = sklyanin_tensor(QQ, 1, 2, 3)
    alg = plane_algebra(t)
    arrow = alg.presentation.arrow_vectors
    for row in t.t.rows:
        total = [QQ.zero()] * alg.dim
        for i in range(3):
            for j in range(3):
                coeff = row[3 * i + j]
                if coeff:
                    path = alg.multiply(arrow[f"u{j}"], arrow[f"v{i}"])
                    total = [x + coeff * y for x, y in zip(total, path)]
        assert not any(total)
    # a path outside the kernel survives
    assert any(alg.multiply(arrow["u0"], arrow["v0"]))


def test_plane_algebra_simple_pds():
    alg = plane_algebra(commutative_tensor(QQ))
    idems = vertex_idempotents(alg)
    expected = {0: 2, 1: 1, 2: 0}  # projective dimension per vertex
    seen = {}
    for simple in simple_modules(alg):
        vertex = next(k for k, e in enumerate(idems)
                      if not simple.act_matrix(e).is_zero())
        seen[vertex] = pd_bound(simple)
    assert seen == {k: DimensionBound.finite(v) for k, v in expected.items()}


def test_plane_vertex_projectives_form_strong_collection():
    """Sink-first vertex projectives reassemble the algebra: the collection
    algebra is again 15-dimensional with the same dimension table."""
    alg = plane_algebra(commutative_tensor(QQ))
    idems = vertex_idempotents(alg)
    reg = regular_module(alg)
    projectives = [
        submodule(reg, alg.lmul_matrix(idems[v]).rows, name=f"P{v}")[0]
        for v in (2, 1, 0)
    ]
    coll, assignment = collection_algebra(projectives)
    assert coll.dim == 15
    corner = [assignment[i].corner_idempotent for i in range(3)]
    assert cartan_matrix(coll, corner) == [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert {i: assignment[i].dim for i in range(3)} == {0: 10, 1: 4, 2: 1}


def test_plane_algebra_wrong_order_is_not_strong():
    from perfcat.errors import NotStrong

    alg = plane_algebra(commutative_tensor(QQ))
    idems = vertex_idempotents(alg)
    reg = regular_module(alg)
    projectives = [
        submodule(reg, alg.lmul_matrix(idems[v]).rows, name=f"P{v}")[0]
        for v in (0, 1, 2)
    ]
    with pytest.raises(NotStrong):
        collection_algebra(projectives)
