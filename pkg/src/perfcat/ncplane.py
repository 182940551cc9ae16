"""Multiplication tensors on a pair of 3-dimensional spaces and the
15-dimensional directed algebra they present.

The central object is a surjection mu from the 9-dimensional tensor product
V (x) U onto a 6-dimensional quotient, recorded together with its kernel T
(always 3-dimensional here) and the inclusion nu of that kernel.  The basis
of V (x) U is ordered v_i (x) u_j |-> 3*i + j throughout.

Two families are built in: the symmetric tensor, whose kernel is spanned by
the commutators x_i (x) x_j - x_j (x) x_i, and a three-parameter family whose
kernel is spanned by a*x_i (x) x_{i+1} + b*x_{i+1} (x) x_i
+ c*x_{i+2} (x) x_{i+2} with indices mod 3.

`slice_rank_profile` contracts the kernel against a functional on either
factor and returns the rank of the resulting 3x3 matrix; the tensor is called
nondegenerate when every nonzero functional on either side gives rank at
least two.  `gamma_cubic` packages all those ranks at once: the determinant
of the contraction matrix is a cubic form in the functional's coordinates
whose zero locus consists of the functionals with a rank drop.  For the
three-parameter family the cubic works out to

    (a^3 + b^3 + c^3) * xyz  -  a*b*c * (x^3 + y^3 + z^3)

on both sides, which the tests pin down; it vanishes identically exactly for
the symmetric member (1, -1, 0) of the family up to scale.
"""

from __future__ import annotations

import itertools
import random

from .algebra import Algebra
from .errors import (DegenerateParameters, NotSurjective, PerfcatError,
                     ShapeMismatch, UnsupportedField, ZeroFunctional)
from .linalg import Basis, Field, Matrix

#: Degree-3 monomials in the functional coordinates, in reporting order.
MONOMIALS = (
    ("x^3", (3, 0, 0)), ("y^3", (0, 3, 0)), ("z^3", (0, 0, 3)),
    ("x^2y", (2, 1, 0)), ("x^2z", (2, 0, 1)), ("xy^2", (1, 2, 0)),
    ("xz^2", (1, 0, 2)), ("y^2z", (0, 2, 1)), ("yz^2", (0, 1, 2)),
    ("xyz", (1, 1, 1)),
)
_MONOMIAL_INDEX = {expts: k for k, (_, expts) in enumerate(MONOMIALS)}

#: Exhaustive nondegeneracy search is used whenever the field is finite with
#: at most this many points in the functional space.
_EXHAUSTIVE_LIMIT = 10 ** 6


class Cubic:
    """A homogeneous degree-3 form in three variables x, y, z.

    Coefficients are stored in the order of MONOMIALS.  `normalized` rescales
    so that the first nonzero coefficient in that order is one, which makes
    forms that agree up to a scalar compare equal.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = [field.coerce(c) for c in coeffs]
        if len(coeffs) != len(MONOMIALS):
            raise ShapeMismatch(
                f"a cubic needs {len(MONOMIALS)} coefficients, got {len(coeffs)}")
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, monomial: str):
        for (name, _), c in zip(MONOMIALS, self.coeffs):
            if name == monomial:
                return c
        raise KeyError(monomial)

    def support(self) -> tuple:
        return tuple(name for (name, _), c in zip(MONOMIALS, self.coeffs) if c)

    def normalized(self) -> "Cubic":
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        inv = self.field.inv(lead)
        return Cubic(self.field, [self.field.mul(inv, c) for c in self.coeffs])

    def evaluate(self, coords):
        """Value of the form at a point (three field elements)."""
        field = self.field
        pt = [field.coerce(x) for x in coords]
        if len(pt) != 3:
            raise ShapeMismatch("a cubic takes three coordinates")
        total = field.zero()
        for (_, expts), c in zip(MONOMIALS, self.coeffs):
            if not c:
                continue
            term = c
            for x, e in zip(pt, expts):
                for _ in range(e):
                    term = field.mul(term, x)
            total = field.add(total, term)
        return total

    def __eq__(self, other):
        if not isinstance(other, Cubic):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Cubic({self})"

    def __str__(self) -> str:
        parts = []
        for (name, _), c in zip(MONOMIALS, self.coeffs):
            if c:
                parts.append(name if c == self.field.one() else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


class MuTensor:
    """A surjection mu: V (x) U -> W together with its 3-dimensional kernel.

    Constructed from three spanning vectors of the kernel (rows of length 9,
    coordinates ordered v_i (x) u_j |-> 3*i + j).  mu is the quotient map by
    the kernel written in the free coordinates of its echelon form, so the
    matrix is 9x6 of rank 6 and t @ mu == 0 for every kernel row.  `family`
    tags the built-in constructions — ("commutative",) or ("sklyanin",
    (a, b, c)) — and unlocks the closed-form nondegeneracy decision.
    """

    __slots__ = ("field", "name", "family", "t", "mu", "free_columns")

    def __init__(self, field: Field, kernel_rows, name: str = "tensor",
                 family=None):
        rows = [[field.coerce(c) for c in row] for row in kernel_rows]
        if len(rows) != 3 or any(len(r) != 9 for r in rows):
            raise ShapeMismatch("kernel must be given by three rows of length 9")
        span = Basis(field, 9)
        for r in rows:
            span.extend(r)
        if span.dim < 3:
            raise DegenerateParameters(
                "kernel spanning vectors are linearly dependent")
        self.field = field
        self.name = name
        self.family = family
        self.t = Matrix(field, rows)
        free = [c for c in range(9) if c not in set(span.pivots())]
        mu_rows = []
        for k in range(9):
            unit = [field.one() if i == k else field.zero() for i in range(9)]
            res = span.residual(unit)
            mu_rows.append([res[c] for c in free])
        self.mu = Matrix(field, mu_rows)
        self.free_columns = tuple(free)

    @property
    def nu(self) -> Matrix:
        """Inclusion of the kernel into V (x) U (rows are the kernel basis)."""
        return self.t

    @staticmethod
    def pair_index(i: int, j: int) -> int:
        """Coordinate of v_i (x) u_j in the 9-dimensional tensor product."""
        return 3 * i + j

    def __repr__(self) -> str:
        return f"MuTensor({self.name} over {self.field})"


def commutative_tensor(field: Field) -> MuTensor:
    """The symmetric tensor: kernel spanned by the three commutators
    x_i (x) x_j - x_j (x) x_i (pairs in lexicographic order), so the quotient
    is the space of symmetric 2-tensors on a single 3-dimensional space."""
    one, zero = field.one(), field.zero()
    rows = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        row = [zero] * 9
        row[3 * i + j] = one
        row[3 * j + i] = field.neg(one)
        rows.append(row)
    return MuTensor(field, rows, name="commutative", family=("commutative",))


def sklyanin_tensor(field: Field, a, b, c) -> MuTensor:
    """Member (a, b, c) of the three-parameter family: kernel spanned by
    a*x_i (x) x_{i+1} + b*x_{i+1} (x) x_i + c*x_{i+2} (x) x_{i+2}, indices
    mod 3 and the first factor in V.  The three spanning vectors have
    disjoint supports, so they are dependent exactly when all parameters
    vanish; that raises DegenerateParameters."""
    a, b, c = field.coerce(a), field.coerce(b), field.coerce(c)
    if not (a or b or c):
        raise DegenerateParameters("family parameters are all zero")
    zero = field.zero()
    rows = []
    for i in range(3):
        row = [zero] * 9
        row[3 * i + (i + 1) % 3] = a
        row[3 * ((i + 1) % 3) + i] = b
        row[3 * ((i + 2) % 3) + (i + 2) % 3] = c
        rows.append(row)
    return MuTensor(field, rows, name=f"sklyanin({a},{b},{c})",
                    family=("sklyanin", (a, b, c)))


def slice_matrix(t: MuTensor, functional, side: str = "u") -> Matrix:
    """Contraction of the kernel against a functional on one factor.

    For side "u" the functional lives on U and row r, column i holds
    sum_j T_r[3*i+j] * functional[j] (a map T -> V); for side "v" it lives
    on V and row r, column j holds sum_i T_r[3*i+j] * functional[i]."""
    field = t.field
    if side not in ("u", "v"):
        raise PerfcatError(f"side must be 'u' or 'v', got {side!r}")
    coords = [field.coerce(x) for x in functional]
    if len(coords) != 3:
        raise ShapeMismatch("a functional has three coordinates")
    if not any(coords):
        raise ZeroFunctional("cannot contract against the zero functional")
    add, mul = field.add, field.mul
    rows = []
    for trow in t.t.rows:
        row = []
        for k in range(3):
            total = field.zero()
            for m in range(3):
                entry = trow[3 * k + m] if side == "u" else trow[3 * m + k]
                if entry:
                    total = add(total, mul(entry, coords[m]))
            row.append(total)
        rows.append(row)
    return Matrix(field, rows)


def slice_rank_profile(t: MuTensor, functional, side: str = "u") -> int:
    """Rank of the 3x3 contraction of the kernel against the functional."""
    return slice_matrix(t, functional, side).rank()


class NondegeneracyVerdict:
    """Outcome of a nondegeneracy check.

    kind is "fails_at" (a functional with slice rank <= 1 was found; witness
    holds (side, coordinates, rank)), "passes_sampled" (no failure among
    `checked` functionals per side — exhaustive when mode says so), or
    "proved_for_family" (the parameters avoid the documented degeneracy locus
    of a built-in family).
    """

    __slots__ = ("kind", "mode", "checked", "witness", "detail")

    def __init__(self, kind, mode, checked=0, witness=None, detail=""):
        self.kind = kind
        self.mode = mode
        self.checked = checked
        self.witness = witness
        self.detail = detail

    @property
    def ok(self) -> bool:
        return self.kind != "fails_at"

    @classmethod
    def fails_at(cls, mode, side, coords, rank, checked=0):
        return cls("fails_at", mode, checked=checked,
                   witness=(side, tuple(coords), rank),
                   detail=f"slice rank {rank} on side {side}")

    @classmethod
    def passes(cls, mode, checked):
        return cls("passes_sampled", mode, checked=checked)

    @classmethod
    def proved(cls, detail):
        return cls("proved_for_family", "family", detail=detail)

    def __repr__(self) -> str:
        if self.kind == "fails_at":
            side, coords, rank = self.witness
            return (f"FailsAt(side={side!r}, functional={coords}, rank={rank})")
        if self.kind == "passes_sampled":
            return f"PassesSampled({self.checked}, {self.mode})"
        return f"ProvedForFamily({self.detail})"


def _rank_le_one(t: MuTensor, coords, side) -> bool:
    return slice_matrix(t, coords, side).rank() <= 1


def _family_verdict(t: MuTensor) -> NondegeneracyVerdict:
    """Closed-form decision for the built-in families.

    The degeneracy locus of the three-parameter family: some nonzero
    functional has slice rank <= 1 exactly when at most one parameter is
    nonzero (a coordinate functional then kills two kernel rows at once) or
    when a^3 = b^3 = c^3 != 0 (a functional (1, w1, w2) built from cube
    roots of unity works, and the parameter ratios b/a, c/a supply those
    roots inside the field).  Everything else is rank >= 2 on both sides for
    every nonzero functional, over the field and all its extensions."""
    field = t.field
    if t.family is None:
        raise PerfcatError("tensor carries no family tag; use sampling")
    if t.family[0] == "commutative":
        a, b, c = field.one(), field.neg(field.one()), field.zero()
    else:
        a, b, c = t.family[1]
    one, zero = field.one(), field.zero()
    nonzero = [x for x in (a, b, c) if x]

    if len(nonzero) <= 1:
        for k in range(3):
            coords = [one if i == k else zero for i in range(3)]
            for side in ("u", "v"):
                mat = slice_matrix(t, coords, side)
                if mat.rank() <= 1:
                    return NondegeneracyVerdict.fails_at(
                        "family", side, coords, mat.rank())
        raise PerfcatError("no coordinate witness found for a near-zero family "
                           "member; this contradicts the documented locus")

    def cube(x):
        return field.mul(x, field.mul(x, x))

    if len(nonzero) == 3 and cube(a) == cube(b) == cube(c):
        eta1 = field.div(b, a)
        eta2 = field.div(c, a)
        roots = [one]
        for r in (eta1, eta2, field.mul(eta1, eta1), field.mul(eta2, eta2),
                  field.mul(eta1, eta2)):
            if r not in roots:
                roots.append(r)
        for w1, w2 in itertools.product(roots, repeat=2):
            coords = [one, w1, w2]
            for side in ("u", "v"):
                mat = slice_matrix(t, coords, side)
                if mat.rank() <= 1:
                    return NondegeneracyVerdict.fails_at(
                        "family", side, coords, mat.rank())
        raise PerfcatError("no cube-root witness found for an equal-cubes "
                           "family member; this contradicts the documented locus")

    return NondegeneracyVerdict.proved(
        f"parameters ({a}, {b}, {c}) have two or more nonzero entries "
        "and their cubes are not all equal")


def _random_functional(field: Field, rng) -> list:
    while True:
        if field.kind == "Fp":
            coords = [field.of_int(rng.randrange(field.characteristic))
                      for _ in range(3)]
        else:
            coords = [field.of_int(rng.randint(-9, 9)) for _ in range(3)]
        if any(coords):
            return coords


def check_nondegenerate(t: MuTensor, samples: int = 200, seed: int = 0,
                        method: str | None = None) -> NondegeneracyVerdict:
    """Decide (or probe) whether every nonzero functional on either factor
    contracts the kernel to a matrix of rank at least two.

    The method is chosen automatically: exhaustive enumeration over a finite
    field whose functional space is small enough, the closed-form family
    locus for the built-in families, and seeded random sampling otherwise.
    Pass method="exhaustive" / "family" / "sampled" to override."""
    field = t.field
    if method is None:
        p = field.characteristic
        if p and p ** 3 <= _EXHAUSTIVE_LIMIT:
            method = "exhaustive"
        elif t.family is not None:
            method = "family"
        else:
            method = "sampled"

    if method == "exhaustive":
        p = field.characteristic
        if not p:
            raise UnsupportedField(
                "exhaustive search needs a finite coefficient field")
        count = 0
        for ints in itertools.product(range(p), repeat=3):
            if not any(ints):
                continue
            count += 1
            coords = [field.of_int(x) for x in ints]
            for side in ("u", "v"):
                mat = slice_matrix(t, coords, side)
                if mat.rank() <= 1:
                    return NondegeneracyVerdict.fails_at(
                        "exhaustive", side, coords, mat.rank(), checked=count)
        return NondegeneracyVerdict.passes("exhaustive", count)

    if method == "family":
        return _family_verdict(t)

    if method == "sampled":
        rng = random.Random(seed)
        for n in range(1, samples + 1):
            coords = _random_functional(field, rng)
            for side in ("u", "v"):
                mat = slice_matrix(t, coords, side)
                if mat.rank() <= 1:
                    return NondegeneracyVerdict.fails_at(
                        "sampled", side, coords, mat.rank(), checked=n)
        return NondegeneracyVerdict.passes("sampled", samples)

    raise PerfcatError(f"unknown method {method!r}")


def gamma_cubic(t: MuTensor, side: str = "u") -> Cubic:
    """Determinant of the slice contraction as a cubic form in the
    functional's coordinates, normalized so the first nonzero coefficient in
    the MONOMIALS order is one.

    Nonzero functionals in its zero locus are exactly those whose slice has
    rank at most two; the form vanishes identically when no functional
    reaches full rank (the symmetric tensor is the standard example)."""
    field = t.field
    if side not in ("u", "v"):
        raise PerfcatError(f"side must be 'u' or 'v', got {side!r}")
    # forms[r][k][m]: coefficient of variable m in the (r, k) entry of the
    # contraction matrix, viewed as a linear form
    forms = []
    for trow in t.t.rows:
        row = []
        for k in range(3):
            if side == "u":
                row.append([trow[3 * k + m] for m in range(3)])
            else:
                row.append([trow[3 * m + k] for m in range(3)])
        forms.append(row)
    add, mul, neg = field.add, field.mul, field.neg
    coeffs = [field.zero()] * len(MONOMIALS)
    for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                       ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1)):
        for m0 in range(3):
            c0 = forms[0][perm[0]][m0]
            if not c0:
                continue
            for m1 in range(3):
                c1 = forms[1][perm[1]][m1]
                if not c1:
                    continue
                for m2 in range(3):
                    c2 = forms[2][perm[2]][m2]
                    if not c2:
                        continue
                    expts = [0, 0, 0]
                    expts[m0] += 1
                    expts[m1] += 1
                    expts[m2] += 1
                    term = mul(c0, mul(c1, c2))
                    if sign < 0:
                        term = neg(term)
                    k = _MONOMIAL_INDEX[tuple(expts)]
                    coeffs[k] = add(coeffs[k], term)
    return Cubic(field, coeffs).normalized()


def plane_algebra(t: MuTensor) -> Algebra:
    """The directed algebra on vertices F0 -> F1 -> F2 presented by the
    tensor: arrows u_0..u_2 from F0 to F1 and v_0..v_2 from F1 to F2, with
    one relation per kernel row — the length-2 path u_j * v_i stands for
    the tensor coordinate v_i (x) u_j.

    The result is 15-dimensional (three trivial paths, six arrows, and the
    6-dimensional quotient in length two), its quotient by the arrow ideal
    has three one-dimensional blocks, and every simple has a projective
    resolution of length at most two."""
    if t.mu.rank() != 6:
        raise NotSurjective("tensor does not map onto a 6-dimensional quotient")
    vertices = ("F0", "F1", "F2")
    arrows = ([(f"u{j}", "F0", "F1") for j in range(3)]
              + [(f"v{i}", "F1", "F2") for i in range(3)])
    relations = []
    for row in t.t.rows:
        terms = [(row[3 * i + j], (f"u{j}", f"v{i}"))
                 for i in range(3) for j in range(3) if row[3 * i + j]]
        relations.append(terms)
    alg = Algebra.from_quiver(t.field, vertices, arrows, relations,
                              name=f"plane({t.name})")
    assert alg.dim == 15, "independent relations must leave 15 normal paths"
    return alg


def vertex_idempotents(a: Algebra) -> list:
    """Basis vectors of the trivial paths of a quiver-presented algebra, in
    vertex order."""
    if a.presentation is None:
        raise PerfcatError("algebra carries no quiver presentation")
    vi = a.presentation.vertex_index
    return [a.basis_element(vi[v]) for v in a.presentation.vertices]
