"""Bounded complexes of projective right modules and their derived Homs.

Conventions, fixed once for the whole package:

* cohomological indexing — the differential raises degree by one;
* a complex stores a contiguous run of terms starting at ``min_degree``;
* every term is a ``ProjectiveModule`` (a structured direct sum of right
  ideals e·A, each visibly a summand of the free module A), so termwise Hom
  computations compute derived Homs on the nose;
* elements are row vectors and maps act on the right, matching modules.py,
  so the matrix of a composition "f then g" is ``F @ G``;
* ``shift(p, n)`` puts the old degree-d content in degree d − n and scales
  the differential by (−1)^n;
* ``cone(f)`` in degree n is X^{n+1} ⊕ Y^n with differential sending (x, y)
  to (−d x, f x + d y).

Modules are accepted wherever complexes are: a module in source position is
replaced by its minimal resolution (reported dimensions are restricted to
the range the truncation provably computes), and in target position it is
used directly as a one-term complex — Hom out of projectives needs no
resolution of the target.
"""

from __future__ import annotations

from .algebra import Algebra
from .errors import (
    AlgebraMismatch,
    InvalidCertificateStep,
    NotChainMap,
    NotFormalInDegreeZero,
    PerfcatError,
)
from .linalg import Basis, Matrix
from .modules import (
    DEFAULT_CUTOFF,
    ModuleMap,
    ProjectiveModule,
    RightModule,
    _projective_records,
    hom_space,
    minimal_resolution,
)


def zero_projective(a: Algebra) -> ProjectiveModule:
    return ProjectiveModule(a, [], name="0")


# -- complexes -------------------------------------------------------------------------


class PerfComplex:
    """Bounded complex of structured projectives with d∘d = 0.

    Zero terms at either end are trimmed so equal complexes have equal degree
    ranges; the zero complex keeps an empty term list and min_degree 0.
    """

    def __init__(self, algebra: Algebra, min_degree: int, terms: list,
                 differentials: list, check: bool = True):
        self.algebra = algebra
        for t in terms:
            if not isinstance(t, ProjectiveModule):
                raise PerfcatError(
                    "complex terms must be structured projectives; resolve "
                    "plain modules first")
            if t.algebra is not algebra:
                raise AlgebraMismatch("complex term over a different algebra")
        if len(differentials) != max(len(terms) - 1, 0):
            raise PerfcatError("need exactly one differential per adjacent pair")
        maps = []
        for i, d in enumerate(differentials):
            if isinstance(d, ModuleMap):
                if check:
                    d = ModuleMap(terms[i], terms[i + 1], d.matrix, check=True)
            else:
                d = ModuleMap(terms[i], terms[i + 1], d, check=check)
            maps.append(d)
        if check:
            for i in range(len(maps) - 1):
                if not (maps[i].matrix @ maps[i + 1].matrix).is_zero():
                    raise PerfcatError(
                        f"differential squares to a nonzero map at degree "
                        f"{min_degree + i}")
        # trim zero terms at the ends
        lo, hi = 0, len(terms)
        while lo < hi and terms[lo].dim == 0:
            lo += 1
        while hi > lo and terms[hi - 1].dim == 0:
            hi -= 1
        if lo == hi:
            self.min_degree = 0
            self.terms = []
            self.differentials = []
        else:
            self.min_degree = min_degree + lo
            self.terms = terms[lo:hi]
            self.differentials = maps[lo:hi - 1]

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.terms) - 1

    def is_zero(self) -> bool:
        return not self.terms

    def term(self, d: int):
        i = d - self.min_degree
        if 0 <= i < len(self.terms):
            return self.terms[i]
        return None

    def diff(self, d: int):
        i = d - self.min_degree
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        return None

    def term_dims(self) -> dict:
        return {self.min_degree + i: t.dim for i, t in enumerate(self.terms)}

    def __repr__(self):
        if self.is_zero():
            return "PerfComplex(0)"
        dims = ", ".join(f"{self.min_degree + i}:{t.dim}"
                         for i, t in enumerate(self.terms))
        return f"PerfComplex({dims})"


def one_term(p: ProjectiveModule, degree: int = 0) -> PerfComplex:
    return PerfComplex(p.algebra, degree, [p], [], check=False)


def as_perf(m: RightModule, cutoff: int = DEFAULT_CUTOFF) -> PerfComplex:
    """The minimal resolution of m as a complex in degrees [−length, 0].

    Raises when the resolution does not terminate below the cutoff — a
    truncation is not an object of the perfect category and is never
    returned as one.
    """
    if isinstance(m, ProjectiveModule):
        return one_term(m)
    res = minimal_resolution(m, cutoff)
    if res.status != "complete":
        raise PerfcatError(
            f"{m.name} has no finite projective resolution below {cutoff}")
    terms = list(reversed(res.terms))
    diffs = [d.matrix for d in reversed(res.differentials)]
    return PerfComplex(m.algebra, -res.length, terms, diffs, check=False)


def shift(p: PerfComplex, n: int) -> PerfComplex:
    """Degree d content moves to degree d − n; differentials pick up (−1)^n."""
    if n == 0 or p.is_zero():
        return p
    sign = 1 if n % 2 == 0 else -1
    diffs = [d.matrix if sign == 1 else -d.matrix for d in p.differentials]
    return PerfComplex(p.algebra, p.min_degree - n, list(p.terms), diffs,
                       check=False)


def direct_sum(parts: list) -> PerfComplex:
    if not parts:
        raise PerfcatError("direct sum needs at least one complex")
    a = parts[0].algebra
    for p in parts:
        if p.algebra is not a:
            raise AlgebraMismatch("direct sum across different algebras")
    live = [p for p in parts if not p.is_zero()]
    if not live:
        return PerfComplex(a, 0, [], [], check=False)
    lo = min(p.min_degree for p in live)
    hi = max(p.max_degree for p in live)
    terms = []
    for d in range(lo, hi + 1):
        rows = []
        for p in live:
            t = p.term(d)
            if t is not None:
                rows.extend((rec, 1) for rec in t.summands)
        terms.append(ProjectiveModule(a, rows, name=f"sum@{d}"))
    diffs = []
    for d in range(lo, hi):
        mat = Matrix.zeros(a.field, terms[d - lo].dim, terms[d - lo + 1].dim)
        roff = 0
        coff = 0
        for p in live:
            t, u = p.term(d), p.term(d + 1)
            dm = p.diff(d)
            if t is not None and u is not None and dm is not None:
                for r in range(t.dim):
                    row = mat.rows[roff + r]
                    src = dm.matrix.rows[r]
                    for c in range(u.dim):
                        row[coff + c] = src[c]
            roff += t.dim if t is not None else 0
            coff += u.dim if u is not None else 0
        diffs.append(mat)
    return PerfComplex(a, lo, terms, diffs, check=False)


# -- chain maps and cones ---------------------------------------------------------------


class ChainMap:
    """Degree-0 map of complexes, one matrix per degree where both have terms.

    Missing components are zero. Validation checks commutation with both
    differentials in every square (NotChainMap otherwise).
    """

    def __init__(self, source: PerfComplex, target: PerfComplex,
                 components: dict, check: bool = True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("chain map across different algebras")
        self.source = source
        self.target = target
        comps = {}
        for d, mat in components.items():
            s, t = source.term(d), target.term(d)
            if s is None or t is None:
                if not mat.is_zero():
                    raise NotChainMap(
                        f"component in degree {d} where a term is missing")
                continue
            if mat.nrows != s.dim or mat.ncols != t.dim:
                raise NotChainMap(f"component shape mismatch in degree {d}")
            comps[d] = mat
        self.components = comps
        if check:
            self.verify()

    def component(self, d: int) -> Matrix:
        mat = self.components.get(d)
        if mat is not None:
            return mat
        s, t = self.source.term(d), self.target.term(d)
        sd = s.dim if s is not None else 0
        td = t.dim if t is not None else 0
        return Matrix.zeros(self.source.algebra.field, sd, td)

    def verify(self):
        src, tgt = self.source, self.target
        for d in range(min(src.min_degree, tgt.min_degree) - 1,
                       max(src.max_degree, tgt.max_degree) + 1):
            ds = src.diff(d)
            s = src.term(d)
            if s is None:
                continue
            t_next = tgt.term(d + 1)
            if t_next is None:
                left = None
            else:
                left = (ds.matrix @ self.component(d + 1) if ds is not None
                        else Matrix.zeros(src.algebra.field, s.dim, t_next.dim))
            dt = tgt.diff(d)
            right = self.component(d) @ dt.matrix if dt is not None else None
            if left is None and right is None:
                continue
            if left is None:
                ok = right.is_zero()
            elif right is None:
                ok = left.is_zero()
            else:
                ok = left == right
            if not ok:
                raise NotChainMap(f"square at degree {d} does not commute")
        return self

    def then(self, other: "ChainMap") -> "ChainMap":
        if other.source is not self.target:
            raise AlgebraMismatch("chain maps do not compose")
        comps = {}
        for d in self.components:
            if other.target.term(d) is None:
                continue
            comps[d] = self.component(d) @ other.component(d)
        return ChainMap(self.source, other.target, comps, check=False)


def identity_chain_map(p: PerfComplex) -> ChainMap:
    field = p.algebra.field
    comps = {p.min_degree + i: Matrix.identity(field, t.dim)
             for i, t in enumerate(p.terms)}
    return ChainMap(p, p, comps, check=False)


def cone(f: ChainMap) -> PerfComplex:
    """Mapping cone: degree n term X^{n+1} ⊕ Y^n, d(x, y) = (−dx, fx + dy)."""
    x, y = f.source, f.target
    a = x.algebra
    field = a.field
    if x.is_zero() and y.is_zero():
        return PerfComplex(a, 0, [], [], check=False)
    lo = min(x.min_degree - 1, y.min_degree if not y.is_zero() else x.min_degree - 1)
    hi = max(x.max_degree - 1, y.max_degree if not y.is_zero() else x.max_degree - 1)
    if y.is_zero():
        lo, hi = x.min_degree - 1, x.max_degree - 1
    elif x.is_zero():
        lo, hi = y.min_degree, y.max_degree
    terms = []
    for n in range(lo, hi + 1):
        parts = []
        xt = x.term(n + 1)
        if xt is not None:
            parts.extend((rec, 1) for rec in xt.summands)
        yt = y.term(n)
        if yt is not None:
            parts.extend((rec, 1) for rec in yt.summands)
        terms.append(ProjectiveModule(a, parts, name=f"cone@{n}"))
    diffs = []
    for n in range(lo, hi):
        src, tgt = terms[n - lo], terms[n - lo + 1]
        mat = Matrix.zeros(field, src.dim, tgt.dim)
        xt, xt2 = x.term(n + 1), x.term(n + 2)
        yt, yt2 = y.term(n), y.term(n + 1)
        xd = xt.dim if xt is not None else 0
        # top-left block: −d_X
        dx = x.diff(n + 1)
        if dx is not None:
            for r in range(xt.dim):
                row = mat.rows[r]
                for c in range(xt2.dim):
                    v = dx.matrix.rows[r][c]
                    if v:
                        row[c] = field.neg(v)
        # top-right block: f
        if xt is not None and yt2 is not None:
            fm = f.component(n + 1)
            off = xt2.dim if xt2 is not None else 0
            for r in range(xt.dim):
                row = mat.rows[r]
                for c in range(yt2.dim):
                    v = fm.rows[r][c]
                    if v:
                        row[off + c] = v
        # bottom-right block: d_Y
        dy = y.diff(n)
        if dy is not None:
            off = xt2.dim if xt2 is not None else 0
            for r in range(yt.dim):
                row = mat.rows[xd + r]
                for c in range(yt2.dim):
                    v = dy.matrix.rows[r][c]
                    if v:
                        row[off + c] = v
        diffs.append(mat)
    return PerfComplex(a, lo, terms, diffs, check=True)


def cone_triangle(f: ChainMap):
    """The triangle maps around cone(f): (cone, ι: Y → cone, π: cone → X[1])."""
    c = cone(f)
    x, y = f.source, f.target
    field = x.algebra.field
    iota = {}
    for i, yt in enumerate(y.terms):
        n = y.min_degree + i
        ct = c.term(n)
        if ct is None:
            continue
        xt = x.term(n + 1)
        xd = xt.dim if xt is not None else 0
        mat = Matrix.zeros(field, yt.dim, ct.dim)
        for r in range(yt.dim):
            mat.rows[r][xd + r] = field.one()
        iota[n] = mat
    x1 = shift(x, 1)
    pi = {}
    for i, ct in enumerate(c.terms):
        n = c.min_degree + i
        xt = x1.term(n)
        if xt is None:
            continue
        mat = Matrix.zeros(field, ct.dim, xt.dim)
        for r in range(xt.dim):
            mat.rows[r][r] = field.one()
        pi[n] = mat
    return c, ChainMap(y, c, iota), ChainMap(c, x1, pi)


# -- the Hom complex --------------------------------------------------------------------


class _View:
    """Uniform read surface for the Hom engine; target terms may be plain
    modules (Hom out of projectives is already derived)."""

    def __init__(self, min_degree: int, terms: list, diffs: list):
        self.min_degree = min_degree
        self.terms = terms
        self.diffs = diffs  # diffs[i]: terms[i] -> terms[i+1], as Matrix

    @property
    def max_degree(self):
        return self.min_degree + len(self.terms) - 1

    def term(self, d: int):
        i = d - self.min_degree
        if 0 <= i < len(self.terms):
            return self.terms[i]
        return None

    def diff(self, d: int):
        i = d - self.min_degree
        if 0 <= i < len(self.diffs):
            return self.diffs[i]
        return None


def _complex_view(p: PerfComplex) -> _View:
    return _View(p.min_degree, list(p.terms), [d.matrix for d in p.differentials])


def _module_view(m: RightModule) -> _View:
    return _View(0, [m], [])


def _resolved_view(m: RightModule, cutoff: int):
    """(view, truncation_length) — resolution placed in degrees [−L, 0];
    truncation_length is None when the resolution is complete."""
    if isinstance(m, ProjectiveModule):
        return _module_view(m), None
    res = minimal_resolution(m, cutoff + 1)
    terms = list(reversed(res.terms))
    diffs = [d.matrix for d in reversed(res.differentials)]
    view = _View(-(len(terms) - 1) if terms else 0, terms, diffs)
    trunc = None if res.status == "complete" else len(terms) - 1
    return view, trunc


class _HomEngine:
    """Total Hom complex of two bounded complexes.

    Hom^l = ⊕_d Hom(source^d, target^{d+l}) with
    δ(f) = d_target ∘ f − (−1)^l f ∘ d_source.
    """

    def __init__(self, field, sx: _View, tx: _View):
        self.field = field
        self.sx = sx
        self.tx = tx
        self._basis: dict = {}
        self._rows: dict = {}

    def degree_range(self):
        if not self.sx.terms or not self.tx.terms:
            return range(0)
        lo = self.tx.min_degree - self.sx.max_degree
        hi = self.tx.max_degree - self.sx.min_degree
        return range(lo, hi + 1)

    def basis(self, l: int) -> list:
        """[(d, Matrix)] — hom-space bases in each contributing bidegree."""
        got = self._basis.get(l)
        if got is None:
            got = []
            for d in range(self.sx.min_degree, self.sx.max_degree + 1):
                s, t = self.sx.term(d), self.tx.term(d + l)
                if s is None or t is None or s.dim == 0 or t.dim == 0:
                    continue
                for h in hom_space(s, t):
                    got.append((d, h.matrix))
            self._basis[l] = got
        return got

    def _layout(self, l: int):
        """Offsets of each bidegree inside the flattened Hom^l space."""
        offs = {}
        total = 0
        for d in range(self.sx.min_degree, self.sx.max_degree + 1):
            s, t = self.sx.term(d), self.tx.term(d + l)
            if s is None or t is None:
                continue
            offs[d] = total
            total += s.dim * t.dim
        return offs, total

    def flatten(self, l: int, comps: dict) -> list:
        offs, total = self._layout(l)
        vec = [self.field.zero()] * total
        for d, mat in comps.items():
            off = offs[d]
            k = 0
            for row in mat.rows:
                for v in row:
                    vec[off + k] = v
                    k += 1
        return vec

    def delta_components(self, l: int, d: int, mat: Matrix) -> dict:
        """Image under δ^l of a map concentrated in bidegree d."""
        out = {}
        dt = self.tx.diff(d + l)
        if dt is not None and self.sx.term(d) is not None:
            out[d] = mat @ dt
        ds = self.sx.diff(d - 1)
        if ds is not None and self.tx.term(d + l) is not None:
            neg = (l % 2 == 0)  # −(−1)^l
            prod = ds @ mat
            prev = out.get(d - 1)
            prod = -prod if neg else prod
            out[d - 1] = prev + prod if prev is not None else prod
        return out

    def delta_rows(self, l: int) -> list:
        """Flattened δ^l images of the Hom^l basis (rows of the boundary map)."""
        rows = self._rows.get(l)
        if rows is None:
            rows = []
            for d, mat in self.basis(l):
                comps = self.delta_components(l, d, mat)
                comps = {e: m for e, m in comps.items() if not m.is_zero()}
                if comps:
                    rows.append(self.flatten(l + 1, comps))
            self._rows[l] = rows
        return rows

    def delta_rank(self, l: int) -> int:
        rows = self.delta_rows(l)
        if not rows:
            return 0
        b = Basis(self.field, len(rows[0]))
        for r in rows:
            b.extend(r)
        return b.dim

    def cohomology_dim(self, l: int) -> int:
        h = len(self.basis(l))
        if h == 0:
            return 0
        return h - self.delta_rank(l) - self.delta_rank(l - 1)


class DerivedHomProfile:
    """Finitely supported map degree → dim of the derived Hom space.

    truncated_at is None when every degree is exact; otherwise degrees
    ≥ truncated_at were cut off by a non-terminating source resolution and
    are simply not reported.
    """

    def __init__(self, source, target, dims: dict, truncated_at=None):
        self.source = source
        self.target = target
        self.dims = {l: d for l, d in sorted(dims.items()) if d}
        self.truncated_at = truncated_at

    def dim(self, l: int) -> int:
        return self.dims.get(l, 0)

    def support(self) -> list:
        return sorted(self.dims)

    def is_zero(self) -> bool:
        return not self.dims

    def euler(self) -> int:
        return sum(d if l % 2 == 0 else -d for l, d in self.dims.items())

    def __repr__(self):
        return f"DerivedHomProfile({self.dims})"


def _normalize_source(p, cutoff):
    if isinstance(p, PerfComplex):
        return _complex_view(p), None
    if isinstance(p, RightModule):
        return _resolved_view(p, cutoff)
    raise PerfcatError(f"cannot interpret {p!r} as a complex")


def _normalize_target(q):
    if isinstance(q, PerfComplex):
        return _complex_view(q)
    if isinstance(q, RightModule):
        return _module_view(q)
    raise PerfcatError(f"cannot interpret {q!r} as a complex")


def _algebra_of(x) -> Algebra:
    return x.algebra


def derived_hom(p, q, cutoff: int = DEFAULT_CUTOFF) -> DerivedHomProfile:
    """Cohomology dimensions of the total Hom complex.

    Both arguments may be complexes or modules. A module source is resolved
    (minimally); a module target is used as is. When the source resolution
    is truncated, only the provably exact degrees are reported and
    ``truncated_at`` records the first degree that is not.
    """
    if _algebra_of(p) is not _algebra_of(q):
        raise AlgebraMismatch("derived Hom across different algebras")
    field = _algebra_of(p).field
    sx, trunc = _normalize_source(p, cutoff)
    tx = _normalize_target(q)
    engine = _HomEngine(field, sx, tx)
    sound_max = None
    if trunc is not None:
        if not tx.terms:
            sound_max = None
        else:
            sound_max = trunc + tx.min_degree - 1
    dims = {}
    for l in engine.degree_range():
        if sound_max is not None and l > sound_max:
            continue
        d = engine.cohomology_dim(l)
        if d:
            dims[l] = d
    cut = sound_max + 1 if sound_max is not None else None
    return DerivedHomProfile(p, q, dims, cut)


# -- endomorphism algebras in degree zero ------------------------------------------------


class H0Space:
    """Degree-zero cohomology of a total Hom complex with explicit cycle
    representatives; ``coords`` expresses any degree-0 cycle's class in terms
    of them (boundaries get all-zero coordinates)."""

    def __init__(self, field, sx: _View, tx: _View):
        self.field = field
        self.engine = _HomEngine(field, sx, tx)
        self.reps: list = []        # component dicts {degree: Matrix}
        self._rep_slots: list = []
        self._span = None
        engine = self.engine
        basis0 = engine.basis(0)
        if not basis0:
            return
        # cycles: left kernel of the δ^0 image matrix
        img_rows = []
        for d, mat in basis0:
            comps = engine.delta_components(0, d, mat)
            comps = {e: m for e, m in comps.items() if not m.is_zero()}
            img_rows.append(engine.flatten(1, comps) if comps else None)
        width = max((len(r) for r in img_rows if r is not None), default=0)
        zero_row = [field.zero()] * width
        delta_mat = Matrix(field,
                           [r if r is not None else list(zero_row)
                            for r in img_rows], width)
        if width == 0:
            cycle_coeffs = [[field.one() if i == j else field.zero()
                             for j in range(len(basis0))]
                            for i in range(len(basis0))]
        else:
            cycle_coeffs = delta_mat.transpose().kernel_basis()
        # boundaries from δ^{-1}
        span = Basis(field, len(engine.flatten(0, {})))
        inserted = 0
        for r in engine.delta_rows(-1):
            span.extend(r)
            inserted += 1
        for coeffs in cycle_coeffs:
            comps: dict = {}
            for c, (d, mat) in zip(coeffs, basis0):
                if not c:
                    continue
                add = mat.scale(c)
                comps[d] = comps[d] + add if d in comps else add
            flat = engine.flatten(0, comps)
            if span.extend(flat):
                self.reps.append(comps)
                self._rep_slots.append(inserted)
            inserted += 1
        self._span = span

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, comps: dict) -> list:
        """Coordinates (length ``dim``) of a cycle's cohomology class."""
        if self._span is None:
            return []
        flat = self.engine.flatten(0, comps)
        co = self._span.coordinates(flat)
        return [co[s] for s in self._rep_slots]


def compose_components(first: dict, second: dict) -> dict:
    """Components of 'apply first, then second' (row convention: F @ G)."""
    out = {}
    for d, fm in first.items():
        sm = second.get(d)
        if sm is not None:
            out[d] = fm @ sm
    return out


def _identity_components(field, view: _View) -> dict:
    return {view.min_degree + i: Matrix.identity(field, t.dim)
            for i, t in enumerate(view.terms) if t.dim}


def end_algebra(p, cutoff: int = DEFAULT_CUTOFF) -> Algebra:
    """H^0 of the endomorphism Hom complex with its composition product.

    Requires the derived endomorphism profile to be supported in degree 0
    (NotFormalInDegreeZero otherwise, naming a violating degree).
    """
    return end_algebra_with_classes(p, cutoff)[0]


def end_algebra_with_classes(p, cutoff: int = DEFAULT_CUTOFF) -> tuple:
    """end_algebra together with the H0Space that coordinatized it.

    The second component lets callers place further degree-0 cycles (images
    of an algebra map into the endomorphisms, say) in the exact basis the
    structure constants were written in.
    """
    a = _algebra_of(p)
    field = a.field
    sx, trunc = _normalize_source(p, cutoff)
    h0 = H0Space(field, sx, sx)
    engine = h0.engine
    for l in engine.degree_range():
        if l == 0:
            continue
        if trunc is not None and l > trunc - 1:
            raise PerfcatError(
                "cannot certify degree-zero support: source resolution "
                f"truncated at {trunc}")
        if engine.cohomology_dim(l):
            raise NotFormalInDegreeZero(
                f"derived endomorphisms in degree {l} are nonzero")
    name = getattr(p, "name", None) or "complex"
    if not engine.basis(0):
        return (Algebra.from_structure_constants(field, [], [],
                                                 name=f"End({name})"), h0)
    # product f·g := f∘g (apply g, then f)
    table = []
    for f in h0.reps:
        row = []
        for g in h0.reps:
            row.append(h0.coords(compose_components(g, f)))
        table.append(row)
    unit = h0.coords(_identity_components(field, sx))
    return (Algebra.from_structure_constants(field, table, unit,
                                             name=f"End({name})"), h0)


# -- exceptionality ----------------------------------------------------------------------


class Verdict:
    """Three-valued predicate outcome; ``ok`` is None when the computation
    could not decide (e.g. a truncated resolution with no witness found)."""

    def __init__(self, ok, witness: str):
        self.ok = ok
        self.witness = witness

    def __bool__(self):
        return self.ok is True

    def __repr__(self):
        tag = {True: "yes", False: "no", None: "undecided"}[self.ok]
        return f"Verdict({tag}: {self.witness})"


def _profile_in_degree_zero(p, cutoff):
    prof = derived_hom(p, p, cutoff)
    for l in prof.support():
        if l != 0:
            return prof, Verdict(False,
                                 f"derived Hom nonzero in degree {l} "
                                 f"(dim {prof.dim(l)})")
    if prof.truncated_at is not None:
        return prof, Verdict(None,
                             "no obstruction below degree "
                             f"{prof.truncated_at}, but the resolution was "
                             "truncated there")
    return prof, None


def is_exceptional(p, cutoff: int = DEFAULT_CUTOFF) -> Verdict:
    prof, bad = _profile_in_degree_zero(p, cutoff)
    if bad is not None:
        return bad
    d = prof.dim(0)
    if d == 1:
        return Verdict(True, "endomorphisms concentrated in degree 0 with dim 1")
    return Verdict(False, f"degree-0 endomorphisms have dimension {d}, not 1")


def is_w_exceptional(p, cutoff: int = DEFAULT_CUTOFF) -> Verdict:
    prof, bad = _profile_in_degree_zero(p, cutoff)
    if bad is not None:
        return bad
    from .semisimple import is_division_algebra
    end = end_algebra(p, cutoff)
    division = is_division_algebra(end)
    if division is True:
        return Verdict(True, f"endomorphism algebra of dim {end.dim} is division")
    if division is False:
        return Verdict(False, "endomorphism algebra has zero divisors or "
                              "is not division")
    return Verdict(None, "division test inconclusive for the endomorphism "
                         "algebra")


def is_semi_exceptional(p, cutoff: int = DEFAULT_CUTOFF) -> Verdict:
    prof, bad = _profile_in_degree_zero(p, cutoff)
    if bad is not None:
        return bad
    end = end_algebra(p, cutoff)
    rad = end.radical().dim
    if rad == 0:
        return Verdict(True, f"endomorphism algebra of dim {end.dim} is "
                             "semisimple")
    return Verdict(False, f"endomorphism algebra has radical of dim {rad}")


# -- K-theory classes ---------------------------------------------------------------------


def k0_class(p, cutoff: int = DEFAULT_CUTOFF) -> list:
    """Alternating sum of projective multiplicity vectors over the degrees."""
    if isinstance(p, RightModule) and not isinstance(p, ProjectiveModule):
        p = as_perf(p, cutoff)
    if isinstance(p, ProjectiveModule):
        p = one_term(p)
    recs = _projective_records(p.algebra)
    vec = [0] * len(recs)
    for i, t in enumerate(p.terms):
        sign = 1 if (p.min_degree + i) % 2 == 0 else -1
        for rec in t.summands:
            vec[rec.index] += sign
    return vec


# -- semi-orthogonality and generation certificates ---------------------------------------


class SODReport:
    def __init__(self, blocks, orthogonality, generation, verdict,
                 first_failure=None, k0_ranks=None, k0_total=None):
        self.blocks = blocks
        self.orthogonality = orthogonality  # list of (i, j, ok) over i > j
        self.generation = generation
        self.verdict = verdict
        self.first_failure = first_failure
        self.k0_ranks = k0_ranks
        self.k0_total = k0_total

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def __repr__(self):
        return f"SODReport({self.verdict})"


def check_semiorthogonal(objects: list, cutoff: int = DEFAULT_CUTOFF) -> SODReport:
    """Derived Homs must vanish from later objects to earlier ones."""
    checked = []
    failure = None
    for i in range(len(objects)):
        for j in range(i):
            prof = derived_hom(objects[i], objects[j], cutoff)
            ok = prof.is_zero()
            checked.append((i, j, ok))
            if not ok and failure is None:
                l = prof.support()[0]
                failure = (i, j, l, prof.dim(l))
    verdict = "pass" if failure is None else "fail"
    return SODReport([[o] for o in objects], checked, None, verdict, failure)


class CertStep:
    """One DAG edge: the node it produces, the nodes it consumes, and the
    witness data the validator replays."""

    def __init__(self, kind: str, node: PerfComplex, parents: list, data: dict):
        self.kind = kind
        self.node = node
        self.parents = parents
        self.data = data


def shift_step(parent: PerfComplex, n: int) -> CertStep:
    return CertStep("shift", shift(parent, n), [parent], {"n": n})


def sum_step(parents: list) -> CertStep:
    return CertStep("sum", direct_sum(parents), list(parents), {})


def summand_step(parent: PerfComplex, iota: ChainMap, pi: ChainMap) -> CertStep:
    return CertStep("summand", iota.source, [parent],
                    {"iota": iota, "pi": pi})


def cone_step(f: ChainMap) -> CertStep:
    return CertStep("cone", cone(f), [f.source, f.target], {"map": f})


class GenerationCertificate:
    def __init__(self, generators: list, steps: list, targets: list):
        self.generators = list(generators)
        self.steps = list(steps)
        self.targets = list(targets)


def _records_of(t) -> tuple:
    return tuple(id(rec) for rec in t.summands)


def _same_complex(x: PerfComplex, y: PerfComplex) -> bool:
    if x is y:
        return True
    if x.min_degree != y.min_degree or len(x.terms) != len(y.terms):
        return False
    for s, t in zip(x.terms, y.terms):
        if _records_of(s) != _records_of(t):
            return False
    for d, e in zip(x.differentials, y.differentials):
        if d.matrix != e.matrix:
            return False
    return True


def _is_boundary(node: PerfComplex, comps: dict) -> bool:
    """Is the degree-0 endomorphism a boundary in the endomorphism complex?"""
    field = node.algebra.field
    view = _complex_view(node)
    engine = _HomEngine(field, view, view)
    target = engine.flatten(0, {d: m for d, m in comps.items() if not m.is_zero()})
    if not any(target):
        return True
    span = Basis(field, len(target))
    for r in engine.delta_rows(-1):
        span.extend(r)
    return span.contains(target)


def validate_certificate(cert: GenerationCertificate) -> bool:
    """Replay every edge; raise InvalidCertificateStep naming the first bad one."""
    available = {id(g) for g in cert.generators}
    nodes = list(cert.generators)

    def _have(c: PerfComplex) -> bool:
        if id(c) in available:
            return True
        return any(_same_complex(c, n) for n in nodes)

    for idx, step in enumerate(cert.steps):
        label = f"step {idx} ({step.kind})"
        for par in step.parents:
            if not _have(par):
                raise InvalidCertificateStep(f"{label}: parent not yet derived")
        if step.kind == "shift":
            expect = shift(step.parents[0], step.data["n"])
            if not _same_complex(expect, step.node):
                raise InvalidCertificateStep(f"{label}: node is not the stated shift")
        elif step.kind == "sum":
            expect = direct_sum(step.parents)
            if not _same_complex(expect, step.node):
                raise InvalidCertificateStep(f"{label}: node is not the direct sum")
        elif step.kind == "summand":
            iota, pi = step.data["iota"], step.data["pi"]
            parent = step.parents[0]
            if not (_same_complex(iota.source, step.node)
                    and _same_complex(iota.target, parent)
                    and _same_complex(pi.source, parent)
                    and _same_complex(pi.target, step.node)):
                raise InvalidCertificateStep(
                    f"{label}: witness maps do not connect node and parent")
            try:
                iota.verify()
                pi.verify()
            except NotChainMap as exc:
                raise InvalidCertificateStep(f"{label}: {exc}") from exc
            comp = iota.then(pi)
            ident = identity_chain_map(step.node)
            diff = {d: comp.component(d) - ident.component(d)
                    for d in ident.components}
            if not _is_boundary(step.node, diff):
                raise InvalidCertificateStep(
                    f"{label}: retraction is not homotopic to the identity")
        elif step.kind == "cone":
            f = step.data["map"]
            try:
                f.verify()
            except NotChainMap as exc:
                raise InvalidCertificateStep(f"{label}: {exc}") from exc
            expect = cone(f)
            if not _same_complex(expect, step.node):
                raise InvalidCertificateStep(f"{label}: node is not cone(map)")
        else:
            raise InvalidCertificateStep(f"{label}: unknown edge kind")
        available.add(id(step.node))
        nodes.append(step.node)

    for t in cert.targets:
        if not _have(t):
            raise InvalidCertificateStep("a target is not reachable in the DAG")
    return True


def verify_sod(blocks, cert: GenerationCertificate,
               cutoff: int = DEFAULT_CUTOFF) -> SODReport:
    """Full decomposition check: one-directional vanishing between blocks,
    a validated generation certificate covering every indecomposable
    projective, and additivity of K-group ranks."""
    if blocks and not isinstance(blocks[0], (list, tuple)):
        blocks = [[b] for b in blocks]
    blocks = [list(b) for b in blocks]
    flat = [o for b in blocks for o in b]
    if not flat:
        raise PerfcatError("empty decomposition")
    a = _algebra_of(flat[0])
    field = a.field

    checked = []
    failure = None
    for i in range(len(blocks)):
        for j in range(i):
            for x in blocks[i]:
                for y in blocks[j]:
                    prof = derived_hom(x, y, cutoff)
                    ok = prof.is_zero()
                    checked.append((i, j, ok))
                    if not ok and failure is None:
                        l = prof.support()[0]
                        failure = (i, j, l, prof.dim(l))

    validate_certificate(cert)

    recs = _projective_records(a)
    target_classes = [k0_class(t, cutoff) for t in cert.targets]
    for i in range(len(recs)):
        e_i = [1 if k == i else 0 for k in range(len(recs))]
        if e_i not in target_classes:
            raise InvalidCertificateStep(
                f"certificate targets miss the class of projective {i}")

    k0_ranks = []
    for b in blocks:
        rows = [[field.of_int(c) for c in k0_class(o, cutoff)] for o in b]
        k0_ranks.append(Matrix(field, rows, len(recs)).rank())
    k0_total = len(recs)
    if failure is None and sum(k0_ranks) != k0_total:
        failure = ("k0", sum(k0_ranks), k0_total, None)
    verdict = "pass" if failure is None else "fail"
    return SODReport(blocks, checked, cert, verdict, failure, k0_ranks, k0_total)
