import sys
import time

sys.path.insert(0, "src")
sys.path.insert(0, "tests")

from perfcat.algebra import Algebra
from perfcat.errors import (CornerNotSemiorthogonal, NotIdempotent, NotStrong,
                            PerfcatError)
from perfcat.linalg import Field, Matrix, QQ
from perfcat.modules import (cartan_matrix, global_dimension,
                             indecomposable_projectives, is_smooth,
                             regular_module, simple_modules)
from perfcat.complexes import one_term
from perfcat.gluing import (Bimodule, GluedAlgebra, bimodule_pd,
                            collection_algebra, free_bimodule, glue,
                            induce_a, induce_b, split_gluing,
                            verify_gluing_sod, verify_regular_gluing,
                            verify_smooth_gluing, zero_bimodule)
from util import kronecker, truncated_poly

t0 = time.time()
k = Algebra.from_structure_constants(QQ, [[[1]]], [1], name="k")
k2 = Algebra.from_structure_constants(QQ, [[[1]]], [1], name="k'")

# 1. glue(k, k, 0) = k x k
g0 = glue(k, k2, zero_bimodule(k2, k))
print("glue(k,k,0): dim", g0.algebra.dim, "simples",
      len(simple_modules(g0.algebra)),
      "gldim", global_dimension(g0.algebra))

# 2. glue(k, k, k^2) = Kronecker
s2 = free_bimodule(k2, k, 2)
print("free bimodule dim:", s2.dim)
gk = glue(k, k2, s2)
print("glue(k,k,k2): dim", gk.algebra.dim)
print("  cartan(C) raw:", cartan_matrix(gk.algebra))
rep = verify_gluing_sod(gk)
print("  sod:", rep.verdict, "cartan ordered:", rep.cartan_c)
for name, ok, wit in rep.checks:
    print("   ", name, ok, wit or "")
sm = verify_smooth_gluing(gk)
print("  smooth:", sm.verdict, sm.bound_a, sm.bound_b, sm.bound_s, sm.bound_c)
rg = verify_regular_gluing(gk)
print("  regular:", rg.verdict, rg.bound_c)

# 3. glue(kx2, k, k)
kx2 = truncated_poly(QQ, 2)
one = Matrix.identity(QQ, 1)
zer = Matrix.zeros(QQ, 1, 1)
s1 = Bimodule(k, kx2, 1, [one], [one, zer], name="k")
g2 = glue(kx2, k, s1)
print("glue(kx2,k,k): dim", g2.algebra.dim)
rep2 = verify_gluing_sod(g2)
print("  sod:", rep2.verdict, rep2.first_failure)
sm2 = verify_smooth_gluing(g2)
print("  smooth:", sm2.verdict, "| A:", sm2.bound_a, "| S:", sm2.bound_s,
      "| C:", sm2.bound_c)
rg2 = verify_regular_gluing(g2)
print("  regular:", rg2.verdict, "| A:", rg2.bound_a, "| C:", rg2.bound_c)

# 4. split the Kronecker algebra at the sink
kr = kronecker(QQ)
e1 = kr.basis_element(1)
a_, b_, s_ = split_gluing(kr, e1)
print("split kronecker:", a_.dim, b_.dim, s_.dim)
try:
    split_gluing(kr, kr.basis_element(0))
    print("  BAD: source corner accepted")
except CornerNotSemiorthogonal as e:
    print("  source corner rejected:", e)
try:
    split_gluing(kr, kr.basis_element(2))
    print("  BAD: non-idempotent accepted")
except NotIdempotent:
    print("  non-idempotent rejected")

# 5. round trip: split(glue(A,B,S)) gives back equal tables
a2, b2, s2b = split_gluing(gk.algebra, gk.e_a)
print("round trip dims:", a2.dim, b2.dim, s2b.dim)
print("  tables equal:", a2.table == k.table, b2.table == k2.table,
      [m.rows for m in s2b.left_action] == [m.rows for m in s2.left_action],
      [m.rows for m in s2b.right_action] == [m.rows for m in s2.right_action])

# 6. induced modules
indb = induce_b(gk, regular_module(gk.b))
print("induce_b(regular k) dim:", indb.dim,
      "projective dims:", sorted(p.dim for p in indecomposable_projectives(gk.algebra)))
inda = induce_a(gk, regular_module(gk.a))
print("induce_a(regular A) dim:", inda.dim)

# 7. corrupted gluing: wrong orientation must fail with witness
bad = GluedAlgebra(kr, kr.basis_element(0),
                   kr.basis_element(1), (a_, b_, s_))
repbad = verify_gluing_sod(bad)
print("corrupted:", repbad.verdict, repbad.first_failure)

# 8. collection algebra of the Kronecker projectives (sink first)
projs = indecomposable_projectives(kr)
psink = min(projs, key=lambda p: p.dim)
psrc = max(projs, key=lambda p: p.dim)
calg, assign = collection_algebra([one_term(psink), one_term(psrc)])
print("collection algebra dim:", calg.dim,
      "cartan:", cartan_matrix(calg))
print("  assigned projective dims:", {i: m.dim for i, m in assign.items()})
try:
    collection_algebra([one_term(psrc), one_term(psink)])
    print("  BAD: wrong order accepted")
except NotStrong as e:
    print("  wrong order rejected:", e)

# 9. smoothness of glue with zero bimodule
sm0 = verify_smooth_gluing(g0)
print("glue(k,k,0) smooth:", sm0.verdict, sm0.bound_c)

print("elapsed:", round(time.time() - t0, 2), "s")
