"""Right modules over an Algebra: Hom spaces, projective covers, minimal
resolutions, Ext dimensions, global dimension, smoothness and regularity.

Conventions. Module elements are coordinate row vectors; the action of an
algebra element x is v |-> v @ act(x) where act(x) = sum_k x_k action(k). A
ModuleMap stores its matrix with shape dim(source) x dim(target), acting as
v |-> v @ F, so composition "f then g" is F @ G. Maps and module structures
are validated on algebra generators only: both conditions are linear in v and
multiplicative data on generators extends to all products, hence (with the
unit check) to the whole algebra.

Projective modules built here carry their summand structure (which idempotent,
with what multiplicity); Hom out of them is computed by the classical
isomorphism Hom(eA, N) = N.e instead of the general intertwining system.
"""

from __future__ import annotations

import threading
from random import Random

from .algebra import Algebra
from .errors import (
    AlgebraMismatch,
    IdempotentLiftingFailed,
    PerfcatError,
    ZeroModule,
)
from .linalg import Basis, Matrix
from .semisimple import lifted_decomposition


class RightModule:
    """A right module given by one action matrix per algebra basis element.

    Action matrices may be supplied as a list or produced lazily by a
    provider callable (index -> Matrix); they are cached either way.
    """

    def __init__(self, algebra: Algebra, dim: int, actions=None, *,
                 provider=None, name: str = "module", check: bool = True):
        self.algebra = algebra
        self.dim = dim
        self.name = name
        self._acts: dict[int, Matrix] = {}
        self._provider = provider
        if actions is not None:
            if len(actions) != algebra.dim:
                raise AlgebraMismatch("one action matrix per basis element required")
            for i, mat in enumerate(actions):
                if mat.nrows != dim or mat.ncols != dim:
                    raise AlgebraMismatch("action matrix has wrong shape")
                self._acts[i] = mat
        elif provider is None and algebra.dim > 0:
            raise AlgebraMismatch("either actions or a provider is required")
        if check:
            self._verify()

    def action(self, i: int) -> Matrix:
        mat = self._acts.get(i)
        if mat is None:
            mat = self._provider(i)
            self._acts[i] = mat
        return mat

    def act_matrix(self, x: list) -> Matrix:
        """Matrix of the action of the algebra element x (a coordinate vector)."""
        out = Matrix.zeros(self.algebra.field, self.dim, self.dim)
        for k, c in enumerate(x):
            if c:
                out = out + self.action(k).scale(c)
        return out

    def act(self, v: list, x: list) -> list:
        return self.act_matrix(x).vecmat(v)

    def _verify(self):
        a = self.algebra
        if self.dim == 0:
            return
        ident = Matrix.identity(a.field, self.dim)
        if self.act_matrix(a.unit) != ident:
            raise AlgebraMismatch("unit does not act as the identity")
        for g in a.generating_vectors():
            ag = self.act_matrix(g)
            for i in range(a.dim):
                prod = a.multiply(a.basis_element(i), g)
                if self.action(i) @ ag != self.act_matrix(prod):
                    raise AlgebraMismatch(
                        f"action is not multiplicative at basis element {i}")

    def __repr__(self):
        return f"RightModule({self.name}, dim={self.dim})"


class ModuleMap:
    """A homomorphism of right modules; matrix shape dim(source) x dim(target),
    acting on coordinate rows as v |-> v @ matrix."""

    def __init__(self, source: RightModule, target: RightModule, matrix: Matrix,
                 check: bool = True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if matrix.nrows != source.dim or matrix.ncols != target.dim:
            raise AlgebraMismatch("module map matrix has wrong shape")
        if check:
            if source.algebra is not target.algebra:
                raise AlgebraMismatch("module map across different algebras")
            for g in source.algebra.generating_vectors():
                if source.act_matrix(g) @ matrix != matrix @ target.act_matrix(g):
                    raise AlgebraMismatch("map does not commute with the action")

    def apply(self, v: list) -> list:
        return self.matrix.vecmat(v)

    def then(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, other.target, self.matrix @ other.matrix,
                         check=False)

    def rank(self) -> int:
        return self.matrix.rank()

    def kernel_rows(self) -> list:
        """Echelon basis of the kernel (rows in source coordinates)."""
        # kernel of v |-> v @ M is the left null space: transpose and take the
        # right kernel
        return self.matrix.transpose().kernel_basis()

    def is_iso(self) -> bool:
        return (self.source.dim == self.target.dim
                and self.rank() == self.source.dim)

    def __repr__(self):
        return f"ModuleMap({self.source.name} -> {self.target.name})"


# -- standard constructions -----------------------------------------------------------


def regular_module(a: Algebra, name: str | None = None) -> RightModule:
    return RightModule(a, a.dim, provider=lambda i: a.rmul_matrix(a.basis_element(i)),
                       name=name or f"{a.name} (regular)", check=False)


def zero_module(a: Algebra) -> RightModule:
    return RightModule(a, 0, provider=lambda i: Matrix.zeros(a.field, 0, 0),
                       name="0", check=False)


class _Span:
    """An echelon basis together with coordinate bookkeeping for exactly the
    rows that were accepted (Basis.coordinates slots count every attempt, so
    spans that skip dependent rows need the remap)."""

    def __init__(self, field, ncols, rows=()):
        self.basis = Basis(field, ncols)
        self.rows: list = []
        self._slots: list[int] = []
        self._attempts = 0
        for r in rows:
            self.add(r)

    def add(self, row) -> bool:
        ok = self.basis.extend(row)
        if ok:
            self.rows.append(list(row))
            self._slots.append(self._attempts)
        self._attempts += 1
        return ok

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        return self.basis.contains(v)

    def coordinates(self, v) -> list:
        full = self.basis.coordinates(v)
        return [full[s] for s in self._slots]


def submodule(parent: RightModule, rows: list, name: str = "submodule",
              _check_closed: bool = True) -> tuple[RightModule, ModuleMap]:
    """Module structure on a subspace closed under the action, with inclusion.

    rows must already be closed under the action of the algebra (kernels of
    maps and images of idempotents are; arbitrary subspaces are not).
    """
    a = parent.algebra
    span = _Span(a.field, parent.dim, rows)
    d = span.dim

    def provider(i):
        mat = parent.action(i)
        out = []
        for r in span.rows:
            w = mat.vecmat(r)
            if _check_closed and not span.contains(w):
                raise PerfcatError("subspace is not closed under the action")
            out.append(span.coordinates(w))
        return Matrix(a.field, out, d)

    sub = RightModule(a, d, provider=provider, name=name, check=False)
    incl = ModuleMap(sub, parent, Matrix(a.field, span.rows, parent.dim),
                     check=False)
    return sub, incl


def quotient_module(parent: RightModule, killed_rows: list,
                    name: str = "quotient") -> tuple[RightModule, ModuleMap]:
    """parent / span(killed_rows) with the projection map. killed_rows must be
    a subspace closed under the action."""
    a = parent.algebra
    span = _Span(a.field, parent.dim, killed_rows)
    pivots = set(span.basis.pivots())
    free = [j for j in range(parent.dim) if j not in pivots]
    d = len(free)

    def reduce_to_free(v):
        w = span.basis.residual(v)
        return [w[j] for j in free]

    def provider(i):
        mat = parent.action(i)
        out = []
        for j in free:
            unit = [a.field.zero()] * parent.dim
            unit[j] = a.field.one()
            out.append(reduce_to_free(mat.vecmat(unit)))
        return Matrix(a.field, out, d)

    quot = RightModule(a, d, provider=provider, name=name, check=False)
    proj_rows = []
    for t in range(parent.dim):
        unit = [a.field.zero()] * parent.dim
        unit[t] = a.field.one()
        proj_rows.append(reduce_to_free(unit))
    proj = ModuleMap(parent, quot, Matrix(a.field, proj_rows, d), check=False)
    return quot, proj


def radical_span_rows(m: RightModule) -> list:
    """Echelon basis of m·rad(A) (the radical of the module)."""
    a = m.algebra
    span = _Span(a.field, m.dim)
    for r in a.radical().basis_vectors():
        mat = m.act_matrix(r)
        for row in mat.rows:
            span.add(row)
    return span.rows


# -- indecomposable projectives --------------------------------------------------------


class _ProjectiveRecord:
    """One lifted idempotent e with the data of the right ideal eA."""

    def __init__(self, algebra: Algebra, index: int, idempotent: list,
                 division_dim: int):
        self.algebra = algebra
        self.index = index
        self.idempotent = idempotent
        self.division_dim = division_dim
        span = _Span(algebra.field, algebra.dim)
        for k in range(algebra.dim):
            span.add(algebra.multiply(idempotent, algebra.basis_element(k)))
        self.span = span
        self.dim = span.dim
        self._act_cache: dict[int, Matrix] = {}
        self._corner_rows = None

    def action(self, i: int) -> Matrix:
        mat = self._act_cache.get(i)
        if mat is None:
            a = self.algebra
            b = a.basis_element(i)
            out = [self.span.coordinates(a.multiply(r, b)) for r in self.span.rows]
            mat = Matrix(a.field, out, self.dim)
            self._act_cache[i] = mat
        return mat

    def corner_rows(self) -> list:
        """Basis of e·A·e in ambient coordinates (used to close submodule
        generators over the corner when counting cover multiplicities)."""
        if self._corner_rows is None:
            a = self.algebra
            e = self.idempotent
            span = _Span(a.field, a.dim)
            for r in self.span.rows:
                span.add(a.multiply(r, e))
            self._corner_rows = span.rows
        return self._corner_rows

    def module(self) -> "ProjectiveModule":
        return ProjectiveModule(self.algebra, [(self, 1)],
                                name=f"P{self.index}")


class ProjectiveModule(RightModule):
    """Finite direct sum of right ideals eA, kept in structured form."""

    def __init__(self, algebra: Algebra, parts: list, name: str = "projective"):
        # parts: list of (record, multiplicity)
        self.summands: list[_ProjectiveRecord] = []
        for rec, mult in parts:
            self.summands.extend([rec] * mult)
        dim = sum(rec.dim for rec in self.summands)
        self.offsets = []
        off = 0
        for rec in self.summands:
            self.offsets.append(off)
            off += rec.dim
        super().__init__(algebra, dim, provider=self._assemble, name=name,
                         check=False)

    def _assemble(self, i: int) -> Matrix:
        field = self.algebra.field
        out = Matrix.zeros(field, self.dim, self.dim)
        for rec, off in zip(self.summands, self.offsets):
            block = rec.action(i)
            for r in range(rec.dim):
                row = out.rows[off + r]
                brow = block.rows[r]
                for c in range(rec.dim):
                    row[off + c] = brow[c]
        return out

    def ambient_row(self, t: int) -> list:
        """The algebra element carried by the t-th basis vector."""
        for rec, off in zip(self.summands, self.offsets):
            if t < off + rec.dim:
                return rec.span.rows[t - off]
        raise IndexError(t)


def _projective_records(a: Algebra) -> list[_ProjectiveRecord]:
    with a._lock:
        recs = a._cache.get("projective_records")
    if recs is None:
        blocks = lifted_decomposition(a)
        recs = []
        for b in blocks:
            # idempotents within one block are conjugate, so their right
            # ideals are isomorphic; keep one representative per block
            recs.append(_ProjectiveRecord(a, len(recs), b.idempotents[0],
                                          b.division_dim))
        with a._lock:
            a._cache["projective_records"] = recs
    return recs


def indecomposable_projectives(a: Algebra) -> list[ProjectiveModule]:
    """The modules e_i·a for a complete set of lifted orthogonal idempotents;
    primitive whenever the block decomposition split the semisimple quotient
    (division-algebra blocks keep their block idempotent)."""
    return [rec.module() for rec in _projective_records(a)]


def simple_modules(a: Algebra) -> list[RightModule]:
    """Tops P_i / P_i·rad of the indecomposable projectives. For split blocks
    these are exactly the simple modules; a division block yields its (simple)
    top of dimension division_dim."""
    out = []
    for rec in _projective_records(a):
        p = rec.module()
        top, _ = quotient_module(p, radical_span_rows(p), name=f"S{rec.index}")
        out.append(top)
    return out


def cartan_matrix(a: Algebra, idempotents: list | None = None) -> list[list[int]]:
    """Integer matrix whose (i, j) entry is dim e_i·a·e_j — the space of maps
    from the j-th indecomposable projective into the i-th.  By default the
    idempotents are the lifted block representatives; pass an explicit list
    (e.g. vertex idempotents of a quiver algebra) to fix the ordering."""
    if idempotents is None:
        idempotents = [rec.idempotent for rec in _projective_records(a)]
    out = []
    for ei in idempotents:
        row = []
        for ej in idempotents:
            span = _Span(a.field, a.dim)
            for k in range(a.dim):
                span.add(a.multiply(a.multiply(ei, a.basis_element(k)), ej))
            row.append(span.dim)
        out.append(row)
    return out


# -- hom spaces -----------------------------------------------------------------------


def _same_algebra(m: RightModule, n: RightModule):
    if m.algebra is not n.algebra:
        raise AlgebraMismatch(
            f"modules over different algebras: {m.algebra.name} vs {n.algebra.name}")


def _image_rows(n: RightModule, e: list) -> list:
    """Echelon basis of n·e."""
    mat = n.act_matrix(e)
    span = _Span(n.algebra.field, n.dim)
    for row in mat.rows:
        span.add(row)
    return span.rows


def hom_space(m: RightModule, n: RightModule) -> list[ModuleMap]:
    """Basis of Hom(m, n), as the kernel of the intertwining system; when m is
    a structured projective this is assembled from Hom(eA, n) = n·e instead."""
    _same_algebra(m, n)
    field = m.algebra.field
    if m.dim == 0 or n.dim == 0:
        return []
    if isinstance(m, ProjectiveModule):
        return _hom_from_projective(m, n)
    gens = m.algebra.generating_vectors()
    dm, dn = m.dim, n.dim
    rows = []
    for g in gens:
        am = m.act_matrix(g)
        an = n.act_matrix(g)
        for aa in range(dm):
            for bb in range(dn):
                row = [field.zero()] * (dm * dn)
                for i in range(dm):
                    if am.rows[aa][i]:
                        row[i * dn + bb] = am.rows[aa][i]
                for j in range(dn):
                    if an.rows[j][bb]:
                        row[aa * dn + j] = field.sub(row[aa * dn + j],
                                                     an.rows[j][bb])
                rows.append(row)
    if not rows:
        ker = Matrix.identity(field, dm * dn).rows
    else:
        ker = Matrix(field, rows, dm * dn).kernel_basis()
    out = []
    for v in ker:
        mat = Matrix(field, [v[i * dn:(i + 1) * dn] for i in range(dm)], dn)
        out.append(ModuleMap(m, n, mat, check=False))
    return out


def _hom_from_projective(p: ProjectiveModule, n: RightModule) -> list[ModuleMap]:
    field = p.algebra.field
    out = []
    for s, (rec, off) in enumerate(zip(p.summands, p.offsets)):
        # Hom(eA, n) = n.e via phi |-> phi(e); the map sends x in eA to w.x
        for w in _image_rows(n, rec.idempotent):
            mat = Matrix.zeros(field, p.dim, n.dim)
            for r in range(rec.dim):
                x = rec.span.rows[r]
                mat.rows[off + r] = n.act(w, x)
            out.append(ModuleMap(p, n, mat, check=False))
    return out


# -- projective covers ----------------------------------------------------------------


def projective_cover(m: RightModule) -> tuple[ProjectiveModule, ModuleMap]:
    """Minimal projective surjecting onto m; the kernel lies in P·rad."""
    if m.dim == 0:
        raise ZeroModule("the zero module has no projective cover")
    if isinstance(m, ProjectiveModule):
        ident = Matrix.identity(m.algebra.field, m.dim)
        return m, ModuleMap(m, m, ident, check=False)
    a = m.algebra
    field = a.field
    recs = _projective_records(a)
    mrad = radical_span_rows(m)

    # multiplicity of P_i = (dim m·e_i - dim (m·rad)·e_i) / division_dim
    parts = []
    generators = []  # (record, w) pairs defining the summand maps
    cover_span = _Span(field, m.dim, mrad)
    for rec in recs:
        e = rec.idempotent
        me = _image_rows(m, e)
        mre = _Span(field, m.dim)
        emat = m.act_matrix(e)
        for r in mrad:
            mre.add(emat.vecmat(r))
        c, rem = divmod(len(me) - mre.dim, rec.division_dim)
        if rem:
            raise IdempotentLiftingFailed(
                "cover multiplicities are fractional; the block decomposition "
                "must have missed a split")
        if c == 0:
            continue
        picked = []
        for w in me:
            if cover_span.contains(w):
                continue
            picked.append(w)
            cover_span.add(w)
            for cr in rec.corner_rows():
                cover_span.add(m.act(w, cr))
        if len(picked) != c:
            raise IdempotentLiftingFailed(
                "greedy top generators disagree with the multiplicity count")
        parts.append((rec, c))
        generators.extend((rec, w) for w in picked)

    p = ProjectiveModule(a, parts, name=f"cover({m.name})")
    rows = []
    for rec, w in generators:
        for x in rec.span.rows:
            rows.append(m.act(w, x))
    pi = ModuleMap(p, m, Matrix(field, rows, m.dim), check=False)
    if pi.rank() != m.dim:
        raise PerfcatError("projective cover failed to surject")
    prad = _Span(field, p.dim, radical_span_rows(p))
    for v in pi.kernel_rows():
        if not prad.contains(v):
            raise PerfcatError("projective cover kernel escapes the radical")
    return p, pi


# -- resolutions ----------------------------------------------------------------------


class Resolution:
    """Minimal projective resolution data.

    status is "complete" (syzygy vanished; length = len(terms) - 1) or
    "truncated" (cutoff steps elapsed). periodic, when set, records (j, l):
    the l-th syzygy was found isomorphic to the j-th (module itself = 0th),
    which certifies the resolution never terminates.
    """

    def __init__(self, module, terms, differentials, augmentation, status,
                 cutoff, periodic=None):
        self.module = module
        self.terms = terms
        self.differentials = differentials
        self.augmentation = augmentation
        self.status = status
        self.cutoff = cutoff
        self.periodic = periodic

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def term_dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    def __repr__(self):
        tag = (f"Complete({self.length})" if self.status == "complete"
               else f"TruncatedAt({self.cutoff})")
        return f"Resolution({self.module.name}, {tag})"


class DimensionBound:
    """Finite(d), AtLeast(cutoff), or PeriodicHenceInfinite(cutoff) — the
    last when a syzygy repeat proves the minimal resolution never stops."""

    def __init__(self, kind: str, value: int, period=None):
        self.kind = kind
        self.value = value
        self.period = period

    @classmethod
    def finite(cls, d: int) -> "DimensionBound":
        return cls("finite", d)

    @classmethod
    def at_least(cls, cutoff: int) -> "DimensionBound":
        return cls("at_least", cutoff)

    @classmethod
    def periodic(cls, cutoff: int, period) -> "DimensionBound":
        return cls("periodic_infinite", cutoff, period)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __eq__(self, other):
        return (isinstance(other, DimensionBound)
                and self.kind == other.kind and self.value == other.value)

    def __hash__(self):
        return hash((self.kind, self.value))

    def __repr__(self):
        if self.kind == "finite":
            return f"Finite({self.value})"
        if self.kind == "at_least":
            return f"AtLeast({self.value})"
        return f"PeriodicHenceInfinite(cutoff={self.value}, syzygy {self.period[1]} = syzygy {self.period[0]})"


DEFAULT_CUTOFF = 20

_RESOLUTION_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


def _find_iso(x: RightModule, y: RightModule) -> bool:
    """Search for an invertible module map (sound: a hit certifies x = y;
    a miss is inconclusive and callers treat it conservatively)."""
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    homs = hom_space(x, y)
    if not homs:
        return False
    for h in homs:
        if h.is_iso():
            return True
    field = x.algebra.field
    rng = Random(0)
    span = [h.matrix for h in homs]
    for _ in range(60):
        mat = Matrix.zeros(field, x.dim, y.dim)
        for s in span:
            c = field.of_int(rng.randrange(-2, 3))
            if c:
                mat = mat + s.scale(c)
        if mat.rank() == x.dim:
            return True
    return False


def minimal_resolution(m: RightModule, cutoff: int = DEFAULT_CUTOFF) -> Resolution:
    """Resolve by iterated minimal covers until the syzygy vanishes or cutoff
    differentials have been produced. Memoized (thread-safe) per module."""
    key = (id(m.algebra), id(m), cutoff)
    with _MEMO_LOCK:
        hit = _RESOLUTION_MEMO.get(key)
    if hit is not None:
        return hit
    field = m.algebra.field
    if m.dim == 0:
        res = Resolution(m, [], [], None, "complete", cutoff)
        with _MEMO_LOCK:
            _RESOLUTION_MEMO[key] = res
        return res
    terms = []
    diffs = []
    seen = [m]  # syzygies, with the module itself in slot 0
    periodic = None
    cur = m
    incl = None  # inclusion of the current syzygy into the previous term
    augmentation = None
    status = "truncated"
    for step in range(cutoff + 1):
        p, pi = projective_cover(cur)
        terms.append(p)
        if step == 0:
            augmentation = pi
        else:
            d = ModuleMap(p, terms[step - 1], pi.matrix @ incl.matrix,
                          check=False)
            diffs.append(d)
            if len(diffs) >= 2:
                comp = diffs[-1].matrix @ diffs[-2].matrix
                if not comp.is_zero():
                    raise PerfcatError("resolution differentials do not compose to zero")
            elif not (diffs[0].matrix @ augmentation.matrix).is_zero():
                raise PerfcatError("differential does not kill the augmentation")
        ker = pi.kernel_rows()
        if not ker:
            status = "complete"
            break
        syz, incl = submodule(p, ker, name=f"syz{step + 1}({m.name})",
                              _check_closed=False)
        if periodic is None:
            for j, old in enumerate(seen):
                if _find_iso(syz, old):
                    periodic = (j, step + 1)
                    break
        seen.append(syz)
        cur = syz
    res = Resolution(m, terms, diffs, augmentation, status, cutoff, periodic)
    with _MEMO_LOCK:
        _RESOLUTION_MEMO[key] = res
    return res


def pd_bound(m: RightModule, cutoff: int = DEFAULT_CUTOFF) -> DimensionBound:
    res = minimal_resolution(m, cutoff)
    if res.status == "complete":
        return DimensionBound.finite(res.length if res.terms else 0)
    if res.periodic is not None:
        return DimensionBound.periodic(cutoff, res.periodic)
    return DimensionBound.at_least(cutoff)


# -- Ext ------------------------------------------------------------------------------


def ext_dims(m: RightModule, n: RightModule,
             cutoff: int = DEFAULT_CUTOFF) -> list[int]:
    """Dimensions of Ext^0 .. Ext^cutoff, via Hom(-, n) applied to a minimal
    resolution of m."""
    _same_algebra(m, n)
    field = m.algebra.field
    if m.dim == 0 or n.dim == 0:
        return [0] * (cutoff + 1)
    res = minimal_resolution(m, cutoff + 1)
    terms = res.terms
    hom_bases = [hom_space(p, n) for p in terms]
    hdims = [len(h) for h in hom_bases]
    # rank of delta_l: Hom(P_l, n) -> Hom(P_{l+1}, n), phi |-> d_{l+1} then phi
    ranks = []
    for l in range(len(terms) - 1):
        if not hom_bases[l] or not hom_bases[l + 1]:
            ranks.append(0)
            continue
        coords = _Span(field, terms[l + 1].dim * n.dim)
        for h in hom_bases[l + 1]:
            coords.add([x for row in h.matrix.rows for x in row])
        rows = []
        d = res.differentials[l].matrix
        for h in hom_bases[l]:
            img = d @ h.matrix
            rows.append(coords.coordinates([x for row in img.rows for x in row]))
        ranks.append(Matrix(field, rows, coords.dim).rank())
    out = []
    for l in range(cutoff + 1):
        h = hdims[l] if l < len(hdims) else 0
        r = ranks[l] if l < len(ranks) else 0
        rprev = ranks[l - 1] if 0 < l <= len(ranks) else 0
        out.append(h - r - rprev)
    return out


# -- dimensions and predicates ---------------------------------------------------------


def _combine_bounds(bounds: list[DimensionBound], cutoff: int) -> DimensionBound:
    if not bounds:
        return DimensionBound.finite(0)
    for b in bounds:
        if b.kind == "periodic_infinite":
            return b
    if any(b.kind == "at_least" for b in bounds):
        return DimensionBound.at_least(cutoff)
    return DimensionBound.finite(max(b.value for b in bounds))


def global_dimension(a: Algebra, cutoff: int = DEFAULT_CUTOFF) -> DimensionBound:
    """Max projective dimension over the simple modules."""
    if a.dim == 0:
        return DimensionBound.finite(0)
    bounds = [pd_bound(s, cutoff) for s in simple_modules(a)]
    return _combine_bounds(bounds, cutoff)


def is_regular(a: Algebra, cutoff: int = DEFAULT_CUTOFF) -> DimensionBound:
    """Alias of global_dimension; a Finite value is the regularity certificate."""
    return global_dimension(a, cutoff)


def algebra_as_bimodule(a: Algebra) -> RightModule:
    """a as a right module over enveloping(a) = op(a) (x) a, acting by
    v·(x (x) y) = x v y."""
    env = a.enveloping()
    d = a.dim

    def provider(k):
        i, j = divmod(k, d)
        bi, bj = a.basis_element(i), a.basis_element(j)
        rows = [a.multiply(bi, a.multiply(a.basis_element(t), bj))
                for t in range(d)]
        return Matrix(a.field, rows, d)

    return RightModule(env, d, provider=provider,
                       name=f"{a.name} as bimodule", check=False)


def is_smooth(a: Algebra, cutoff: int = DEFAULT_CUTOFF) -> DimensionBound:
    """Projective dimension of a over its enveloping algebra.

    Separable semisimple algebras short-circuit to Finite(0) (projectivity
    over the enveloping algebra is equivalent to separability); this keeps
    division-algebra cases away from idempotent splitting in the tensor
    square, which recognition cannot do. Everything else takes the honest
    resolution route.
    """
    if a.dim == 0:
        return DimensionBound.finite(0)
    if a.radical().dim == 0 and a.is_separable():
        return DimensionBound.finite(0)
    return pd_bound(algebra_as_bimodule(a), cutoff)


def is_proper(a: Algebra, cutoff: int = DEFAULT_CUTOFF) -> bool:
    """Always true for finite-dimensional input; asserted by checking every
    Ext dimension between simples up to the global-dimension bound (or the
    cutoff) is a finite non-negative integer."""
    if a.dim == 0:
        return True
    bound = global_dimension(a, cutoff)
    depth = bound.value if bound.is_finite else cutoff
    simples = simple_modules(a)
    for s in simples:
        for t in simples:
            dims = ext_dims(s, t, depth)
            if not all(isinstance(d, int) and d >= 0 for d in dims):
                raise PerfcatError("non-finite Ext dimension encountered")
    return True
