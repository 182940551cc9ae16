"""Truncation-endomorphism resolutions: construction, dimension counts,
global-dimension certification, the ordered collection checks, base-algebra
recovery, and the perfect embedding.

The frozen numbers (endomorphism dimensions, projective sizes, hom tables,
K-group ranks) were computed by hand from the truncation hom spaces — e.g.
for k[x]/(x^n) the maps T_i → T_j form a min(i, j)-dimensional space, so the
endomorphism algebra has dimension sum(min(i, j)) — before being asserted.
"""

import pytest

from perfcat.algebra import Algebra
from perfcat.auslander import (
    AuslanderData,
    build,
    embed_perf,
    generation_certificate,
    verify_collection,
    verify_endomorphism_recovery,
    verify_gldim,
)
from perfcat.complexes import (
    PerfComplex,
    derived_hom,
    one_term,
    validate_certificate,
)
from perfcat.errors import PerfcatError
from perfcat.linalg import Field, Matrix, QQ
from perfcat.modules import (
    DimensionBound,
    hom_space,
    indecomposable_projectives,
    regular_module,
)
from util import kronecker, quaternion_algebra, truncated_poly

F5 = Field.prime(5)


def product_kk(field=QQ):
    table = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    return Algebra.from_structure_constants(field, table, [1, 1],
                                            ["e1", "e2"], "kxk")


def a3_one_relation(field=QQ):
    """Path algebra of 1 → 2 → 3 with the length-two path killed (dim 5)."""
    return Algebra.from_quiver(field, [1, 2, 3],
                               [("a", 1, 2), ("b", 2, 3)],
                               relations=[[("a", "b")]], name="A3/ab")


_cache: dict = {}


def data(key) -> AuslanderData:
    if key not in _cache:
        makers = {
            "kx2": lambda: truncated_poly(QQ, 2),
            "kx3": lambda: truncated_poly(QQ, 3),
            "kx4": lambda: truncated_poly(QQ, 4),
            "kx3_f5": lambda: truncated_poly(F5, 3),
            "kron": lambda: kronecker(QQ),
            "kxk": lambda: product_kk(),
            "quat": lambda: quaternion_algebra(QQ, -1, -1),
            "a3": lambda: a3_one_relation(),
        }
        _cache[key] = build(makers[key]())
    return _cache[key]


# -- construction and frozen dimensions ----------------------------------------------


def test_kx2_shape():
    d = data("kx2")
    assert d.depth == 2
    assert d.endo.dim == 5
    assert [p.dim for p in d.projectives] == [2, 3]
    assert d.hom_dim_table() == [[1, 1], [1, 2]]
    assert [t.dim for t in d.truncations] == [1, 2]
    assert d.recovery_index == 1


@pytest.mark.parametrize("key,dim,pdims", [
    ("kx3", 14, [3, 5, 6]),
    ("kx4", 30, [4, 7, 9, 10]),
    ("kx3_f5", 14, [3, 5, 6]),
])
def test_truncated_poly_series(key, dim, pdims):
    d = data(key)
    assert d.endo.dim == dim
    assert [p.dim for p in d.projectives] == pdims
    n = d.depth
    assert d.hom_dim_table() == [[min(i, j) for j in range(1, n + 1)]
                                 for i in range(1, n + 1)]


def test_kronecker_shape():
    d = data("kron")
    assert d.depth == 2
    assert d.endo.dim == 11
    assert [p.dim for p in d.projectives] == [4, 7]
    assert d.hom_dim_table() == [[2, 3], [2, 4]]


def test_a3_shape():
    d = data("a3")
    assert d.endo.dim == 14
    assert [p.dim for p in d.projectives] == [6, 8]
    assert d.hom_dim_table() == [[3, 3], [3, 5]]


def test_semisimple_inputs_collapse():
    d = data("kxk")
    assert d.depth == 1
    assert d.endo.dim == 2
    assert len(d.collection) == 1
    assert d.collection[0].term_dims() == {0: 2}
    assert not d.transitions
    q = data("quat")
    assert q.depth == 1
    assert q.endo.dim == 4


def test_dimension_is_sum_of_hom_blocks():
    for key in ("kx3", "kron", "a3"):
        d = data(key)
        assert d.endo.dim == sum(sum(row) for row in d.hom_dim_table())


def test_collection_complexes_have_expected_terms():
    d = data("kx3")
    assert d.collection[0].term_dims() == {0: 3}
    assert d.collection[1].term_dims() == {0: 5, 1: 3}
    assert d.collection[2].term_dims() == {0: 6, 1: 5}


def test_hom_dims_onto_smaller_projectives():
    # maps P_i -> P_j for i >= j biject with maps T_i -> T_j, which factor
    # through the truncation of size dim T_j
    for key in ("kx3", "kron", "a3"):
        d = data(key)
        for i in range(d.depth):
            for j in range(i + 1):
                assert (len(hom_space(d.projectives[i], d.projectives[j]))
                        == d.truncations[j].dim)


def test_structured_projectives_match_regular_blocks():
    # the endomorphism algebra's basis is target-major, so Hom(T, T_s) sits
    # in the regular module as a contiguous coordinate block
    for key in ("kx3", "kron"):
        d = data(key)
        reg = regular_module(d.endo)
        zero = d.endo.field.zero()
        for s, plain in enumerate(d._plains):
            off = d._goffsets[s]
            w = plain.dim
            for i in range(d.endo.dim):
                big = reg.action(i)
                small = plain.action(i)
                for m in range(w):
                    row = big.rows[off + m]
                    assert row[off:off + w] == small.rows[m]
                    assert all(x == zero for x in row[:off])
                    assert all(x == zero for x in row[off + w:])


def test_build_is_deterministic():
    a = truncated_poly(QQ, 3)
    d1, d2 = build(a), build(a)
    assert d1.endo.labels == d2.endo.labels
    for i in range(d1.endo.dim):
        for j in range(d1.endo.dim):
            assert (d1.endo.structure_pairs(i, j)
                    == d2.endo.structure_pairs(i, j))
    for t1, t2 in zip(d1.transitions, d2.transitions):
        assert t1.matrix == t2.matrix


def test_build_without_checks_matches():
    a = kronecker(QQ)
    d1 = build(a)
    d2 = build(a, check=False)
    assert d1.endo.dim == d2.endo.dim
    assert [p.dim for p in d1.projectives] == [p.dim for p in d2.projectives]
    assert d1.endo.unit == d2.endo.unit


# -- global dimension -----------------------------------------------------------------


def test_gldim_certified_for_series():
    for key in ("kx2", "kx3", "kx4", "kx3_f5"):
        rep = verify_gldim(data(key))
        assert rep.ok
        assert rep.bound == DimensionBound.finite(2)
        assert rep.limit == data(key).depth + 1


def test_gldim_semisimple_case():
    rep = verify_gldim(data("kxk"))
    assert rep.ok
    assert rep.bound == DimensionBound.finite(0)


def test_gldim_refuses_blunt_cutoff():
    d = data("kx3")
    with pytest.raises(PerfcatError):
        verify_gldim(d, cutoff=d.depth + 1)


# -- the ordered collection ------------------------------------------------------------


CHECK_NAMES = [
    "projectives to the left",
    "one-directional between pieces",
    "self-homs in degree zero",
    "semisimple endomorphisms",
    "base maps onto endomorphisms",
    "generation certificate",
]


def test_collection_kx3_passes_all_checks():
    rep = verify_collection(data("kx3"))
    assert [name for name, _, _ in rep.checks] == CHECK_NAMES
    assert rep.ok
    assert rep.verdict == "pass"
    assert rep.first_failure is None
    assert rep.end_dims == [1, 1, 1]
    assert rep.kernel_dims == [2, 2, 2]
    assert rep.sod is not None and rep.sod.ok
    assert rep.sod.k0_ranks == [1, 1, 1]
    assert rep.sod.k0_total == 3


def test_collection_kronecker_passes():
    rep = verify_collection(data("kron"))
    assert rep.ok
    assert rep.end_dims == [2, 1]
    assert rep.sod.k0_ranks == [2, 1]
    assert rep.sod.k0_total == 3


def test_collection_a3_passes():
    rep = verify_collection(data("a3"))
    assert rep.ok
    assert rep.end_dims == [3, 2]
    assert rep.sod.k0_ranks == [3, 2]


def test_collection_semisimple_passes():
    for key in ("kxk", "quat"):
        rep = verify_collection(data(key))
        assert rep.ok
        assert len(rep.checks) == 6


def test_end_dims_bounded_by_semisimple_quotient():
    for key in ("kx2", "kx3", "kron", "a3", "quat"):
        d = data(key)
        top = d.truncations[0].dim
        rep = verify_collection(d)
        assert all(e <= top for e in rep.end_dims)


def test_level_summands_partition_each_piece():
    for key in ("kx3", "kron", "a3"):
        d = data(key)
        for i, k in enumerate(d.collection):
            pieces = d.level_summands(i)
            want = k.term_dims()
            got: dict = {}
            for p in pieces:
                for deg, w in p.term_dims().items():
                    got[deg] = got.get(deg, 0) + w
            assert got == want


def test_generation_certificate_replays():
    for key in ("kx3", "kron"):
        cert = generation_certificate(data(key))
        assert validate_certificate(cert)


def test_certificate_targets_cover_every_record():
    from perfcat.modules import _projective_records
    for key, count in (("kx3", 3), ("kron", 3), ("a3", 5)):
        d = data(key)
        cert = generation_certificate(d)
        assert len(cert.targets) == count
        assert count == len(_projective_records(d.endo))


# -- recovering the base algebra --------------------------------------------------------


def test_recovery_on_series():
    for key in ("kx2", "kx3", "kx4", "kx3_f5"):
        rep = verify_endomorphism_recovery(data(key))
        assert rep.ok, rep.witness
        assert rep.base_dim == rep.end_dim
        assert rep.injective and rep.surjective
        assert rep.multiplicative and rep.formal


def test_recovery_on_noncommutative_inputs():
    for key in ("kron", "a3", "quat", "kxk"):
        rep = verify_endomorphism_recovery(data(key))
        assert rep.ok, rep.witness


# -- the perfect embedding ---------------------------------------------------------------


def test_embed_truncation_tables_agree():
    d = data("kx3")
    emb = embed_perf(d)
    assert emb.ok
    base_table, endo_table, equal = emb.truncation_table
    assert equal
    assert base_table == [[1, 1, 1], [1, 2, 2], [1, 2, 3]]
    assert base_table == endo_table


def test_embed_record_profiles_agree():
    for key in ("kron", "a3"):
        emb = embed_perf(data(key))
        assert emb.ok
        for _, src, dst, same in emb.record_profiles:
            assert same
            assert src == dst


def test_embed_image_of_projective_is_recovery_projective():
    # a local base algebra has a single idempotent, so the one image is all
    # of Hom(T, L)
    d = data("kx3")
    emb = embed_perf(d)
    assert len(emb.images) == 1
    assert emb.images[0].term_dims() == {0: d.projectives[-1].dim}


def test_embed_apply_one_term():
    d = data("kx2")
    emb = embed_perf(d)
    p = indecomposable_projectives(d.base)[0]
    y = emb.apply(one_term(p))
    assert y.term_dims() == emb.images[0].term_dims()
    assert not y.differentials


def test_embed_apply_two_term_complex():
    # [L --x--> L] over k[x]/(x^2): the transported complex must keep every
    # derived-hom dimension
    d = data("kx2")
    emb = embed_perf(d)
    a = d.base
    p = indecomposable_projectives(a)[0]
    x = a.basis_element(1)
    c = PerfComplex(a, 0, [p, p], [a.lmul_matrix(x)], check=True)
    y = emb.apply(c)
    assert y.term_dims() == {0: 3, 1: 3}
    assert derived_hom(y, y).dims == derived_hom(c, c).dims
    sh_dims = derived_hom(y, emb.images[0]).dims
    assert sh_dims == derived_hom(c, one_term(p)).dims


def test_embed_apply_kronecker_arrow():
    d = data("kron")
    emb = embed_perf(d)
    a = d.base
    projs = sorted(indecomposable_projectives(a), key=lambda p: p.dim)
    tiny, big = projs  # e·L at the sink resp. the source vertex
    arrows = hom_space(tiny, big)
    assert len(arrows) == 2
    c = PerfComplex(a, 0, [tiny, big], [arrows[0].matrix], check=True)
    y = emb.apply(c)
    assert derived_hom(y, y).dims == derived_hom(c, c).dims


def test_embed_apply_rejects_foreign_complexes():
    d = data("kx2")
    emb = embed_perf(d)
    other = indecomposable_projectives(data("kx3").base)[0]
    with pytest.raises(PerfcatError):
        emb.apply(one_term(other))
