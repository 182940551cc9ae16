"""Path algebras of quivers modulo relations, by normal-form paths.

Paths compose LEFT TO RIGHT: the path "a*b" first traverses a, then b, and
requires target(a) == source(b). The algebra's basis is a set of normal-form
paths chosen degree by degree: at each path length the span of the relation
ideal at that length (left multiples of relations by shorter normal paths —
right multiples are induced automatically) is subtracted, and the surviving
candidate paths (each an extension of a shorter normal path by one arrow)
become basis elements. For homogeneous relations this closure is exact and
graded. Inhomogeneous relations reduce candidates to mixtures of shorter
normal paths; when a reduction retroactively kills an already-chosen normal
path, the consequence is recorded as a derived relation and the closure
restarts with it (a poor man's completion, capped). The build stops at the
first length contributing nothing; reaching max_path_length with candidates
still alive raises InfiniteDimensional.

A presentation is flagged admissible when every user relation term has length
>= 2, no trivial path died, and the arrow ideal is nilpotent (automatic in the
homogeneous case). Admissible presentations let radical computations
short-circuit to the arrow ideal.
"""

from __future__ import annotations

from .algebra import Algebra, Ideal
from .errors import InfiniteDimensional, MalformedRelation, PerfcatError, UnsupportedField
from .linalg import Basis

_MAX_RESTARTS = 50
# Cumulative cap on enumerated candidate paths. Guards against free-ish quivers
# whose closure would otherwise grind through enormous eliminations before the
# per-degree max_path_length check could fire; every legitimate build in this
# package enumerates well under a thousand.
_PATH_BUDGET = 2000


class QuiverPresentation:
    """A quiver with relations plus the normal-form data of a finished build.

    Relations are kept in parsed form: lists of (coeff, (source_vertex,
    arrow_name_tuple)) pairs. normal_paths lists the basis paths in basis
    order, basis_degrees their lengths, vertex_index maps each surviving
    vertex to the basis index of its trivial path, and arrow_vectors maps each
    arrow name to the coordinate vector of its image (arrows can reduce to
    shorter paths under inhomogeneous relations).
    """

    def __init__(self, vertices, arrows, relations, admissible, normal_paths,
                 basis_degrees, vertex_index, arrow_vectors):
        self.vertices = list(vertices)
        self.arrows = list(arrows)
        self.relations = relations
        self.admissible = admissible
        self.normal_paths = normal_paths
        self.basis_degrees = basis_degrees
        self.vertex_index = vertex_index
        self.arrow_vectors = arrow_vectors

    def __repr__(self) -> str:
        return (f"QuiverPresentation({len(self.vertices)} vertices, "
                f"{len(self.arrows)} arrows, {len(self.relations)} relations)")


def _path_target(arrows_by_name: dict, path: tuple) -> str:
    src, names = path
    return arrows_by_name[names[-1]][1] if names else src


def _parse_term(field, arrows_by_name, term, where: str):
    if isinstance(term, (list, tuple)) and term and all(isinstance(x, str) for x in term):
        coeff, names = field.one(), tuple(term)
    elif (isinstance(term, (list, tuple)) and len(term) == 2
          and isinstance(term[1], (list, tuple))
          and all(isinstance(x, str) for x in term[1])):
        try:
            coeff = field.coerce(term[0])
        except (ValueError, UnsupportedField):
            raise MalformedRelation(f"{where}: bad coefficient {term[0]!r}")
        names = tuple(term[1])
    else:
        raise MalformedRelation(
            f"{where}: term {term!r} is neither a path nor (coeff, path)")
    if not names:
        raise MalformedRelation(
            f"{where}: empty path (trivial-path terms are not supported)")
    for n in names:
        if n not in arrows_by_name:
            raise MalformedRelation(f"{where}: unknown arrow {n!r}")
    for a, b in zip(names, names[1:]):
        if arrows_by_name[a][1] != arrows_by_name[b][0]:
            raise MalformedRelation(
                f"{where}: {a!r} ends at {arrows_by_name[a][1]!r} but {b!r} "
                f"starts at {arrows_by_name[b][0]!r}")
    src = arrows_by_name[names[0]][0]
    return coeff, (src, names)


def _parse_relations(field, arrows_by_name, relations):
    parsed = []
    for ridx, rel in enumerate(relations):
        where = f"relation {ridx}"
        if isinstance(rel, (list, tuple)) and rel and all(isinstance(x, str) for x in rel):
            rel = [rel]  # a bare path is a single monomial term
        if not isinstance(rel, (list, tuple)) or not rel:
            raise MalformedRelation(f"{where}: must be a nonempty list of terms")
        terms = []
        for term in rel:
            coeff, path = _parse_term(field, arrows_by_name, term, where)
            if coeff:
                terms.append((coeff, path))
        if not terms:
            continue
        endpoints = {(p[0], _path_target(arrows_by_name, p)) for _, p in terms}
        if len(endpoints) != 1:
            raise MalformedRelation(
                f"{where}: terms have mixed endpoints {sorted(endpoints)}")
        parsed.append(terms)
    return parsed


class _Closure:
    """One run of the degree-by-degree normal-form computation.

    Vectors are dicts {path: coeff}. While degree d is being processed, paths
    of length d stay raw; everything shorter is already rewritten into normal
    paths (of any lower length, in the inhomogeneous case).
    """

    def __init__(self, field, vertices, arrows_by_name, arrow_order, relations,
                 maxlen):
        self.field = field
        self.vertices = vertices
        self.arrows_by_name = arrows_by_name
        self.arrow_order = arrow_order
        self.relations = relations
        self.maxlen = maxlen
        self.kept: list[tuple] = []
        self.kept_index: dict = {}
        self.kept_by_deg: list[list] = []
        self.rewrite: dict = {}
        self.retry = None  # derived relation recorded on a retroactive kill

    def _extend_vec(self, vec: dict, arrow: str, raw_deg: int) -> dict:
        out: dict = {}
        field = self.field
        add, mul = field.add, field.mul
        src_a = self.arrows_by_name[arrow][0]
        for path, c in vec.items():
            if _path_target(self.arrows_by_name, path) != src_a:
                continue
            np = (path[0], path[1] + (arrow,))
            if len(np[1]) == raw_deg:
                x = add(out.get(np, field.zero()), c)
                if x:
                    out[np] = x
                elif np in out:
                    del out[np]
            else:
                for kp, c2 in self.rewrite[np].items():
                    x = add(out.get(kp, field.zero()), mul(c, c2))
                    if x:
                        out[kp] = x
                    elif kp in out:
                        del out[kp]
        return out

    def _fold_term(self, base_vec: dict, names: tuple, raw_deg: int) -> dict:
        vec = base_vec
        for a in names:
            if not vec:
                break
            vec = self._extend_vec(vec, a, raw_deg)
        return vec

    def run(self):
        field = self.field
        one = field.one()
        by_top: dict[int, list] = {}
        for terms in self.relations:
            top = max(len(p[1]) for _, p in terms)
            by_top.setdefault(top, []).append(terms)

        # -- degree 0: trivial paths ------------------------------------------
        trivials = [(v, ()) for v in self.vertices]
        tpos = {p: i for i, p in enumerate(trivials)}
        sp = Basis(field, len(trivials))
        attempts = 0
        for terms in by_top.get(0, ()):
            row = [field.zero()] * len(trivials)
            for c, p in terms:
                row[tpos[p]] = field.add(row[tpos[p]], c)
            sp.extend(row)
            attempts += 1
        kept0 = []
        for p in trivials:
            unit = [field.zero()] * len(trivials)
            unit[tpos[p]] = one
            if sp.extend(unit):
                kept0.append(p)
        kept0set = set(kept0)
        for i, p in enumerate(trivials):
            if p in kept0set:
                self.rewrite[p] = {p: one}
                continue
            unit = [field.zero()] * len(trivials)
            unit[tpos[p]] = one
            coords = sp.coordinates(unit)
            vec = {}
            for j, q in enumerate(trivials):
                c = coords[attempts + j]
                if c:
                    vec[q] = c
            self.rewrite[p] = vec
        self._commit(kept0)

        # -- positive degrees ---------------------------------------------------
        total_cands = len(trivials)
        deg = 0
        while self.kept_by_deg[deg]:
            deg += 1
            if deg > self.maxlen:
                raise InfiniteDimensional(
                    f"normal paths still appear at length {self.maxlen}; "
                    "the algebra is infinite dimensional or needs a larger "
                    "max_path_length")
            cands = []
            for q in self.kept_by_deg[deg - 1]:
                tq = _path_target(self.arrows_by_name, q)
                for a in self.arrow_order:
                    if self.arrows_by_name[a][0] == tq:
                        cands.append((q[0], q[1] + (a,)))
            total_cands += len(cands)
            if total_cands > _PATH_BUDGET:
                raise PerfcatError(
                    "path budget exceeded while closing the relation ideal")
            if not cands:
                self.kept_by_deg.append([])
                break
            cpos = {p: i for i, p in enumerate(cands)}
            kept_desc = list(reversed(self.kept))
            kcol = {p: len(cands) + i for i, p in enumerate(kept_desc)}
            ncols = len(cands) + len(kept_desc)
            zero_row = [field.zero()] * ncols

            def densify(vec: dict) -> list:
                row = list(zero_row)
                for p, c in vec.items():
                    row[cpos[p] if p in cpos else kcol[p]] = c
                return row

            sp = Basis(field, ncols)
            attempts = 0
            for top in sorted(by_top):
                if top > deg:
                    continue
                if top == 0:
                    for terms in by_top[0]:
                        for p in cands:
                            tp = _path_target(self.arrows_by_name, p)
                            scal = field.zero()
                            for c, (v, names) in terms:
                                if v == tp:
                                    scal = field.add(scal, c)
                            if scal:
                                if sp.extend(densify({p: scal})):
                                    if self._kill_check(sp, cands, kept_desc):
                                        return
                                attempts += 1
                    continue
                qdeg = deg - top
                for terms in by_top[top]:
                    for q in self.kept_by_deg[qdeg]:
                        vec: dict = {}
                        for c, (v, names) in terms:
                            t = self._fold_term({q: c}, names, deg)
                            for p, c2 in t.items():
                                x = field.add(vec.get(p, field.zero()), c2)
                                if x:
                                    vec[p] = x
                                elif p in vec:
                                    del vec[p]
                        if not vec:
                            continue
                        if sp.extend(densify(vec)):
                            if self._kill_check(sp, cands, kept_desc):
                                return
                        attempts += 1
            low_offset = attempts
            for p in kept_desc:
                unit = list(zero_row)
                unit[kcol[p]] = one
                sp.extend(unit)
            cand_offset = low_offset + len(kept_desc)
            keptd = []
            for p in cands:
                unit = list(zero_row)
                unit[cpos[p]] = one
                if sp.extend(unit):
                    keptd.append(p)
            keptdset = set(keptd)
            for p in cands:
                if p in keptdset:
                    self.rewrite[p] = {p: one}
                    continue
                unit = list(zero_row)
                unit[cpos[p]] = one
                coords = sp.coordinates(unit)
                vec = {}
                for i, q in enumerate(kept_desc):
                    c = coords[low_offset + i]
                    if c:
                        vec[q] = c
                for i, q in enumerate(cands):
                    c = coords[cand_offset + i]
                    if c:
                        vec[q] = c
                self.rewrite[p] = vec
            self._commit(keptd)

        # relations whose top length was never reached in the loop must still
        # hold on the finished span: their lower-order terms reduce into it
        dlast = len(self.kept_by_deg) - 1
        for terms in self.relations:
            top = max(len(p[1]) for _, p in terms)
            for qd, qs in enumerate(self.kept_by_deg):
                if qd + top <= dlast:
                    continue
                for q in qs:
                    vec: dict = {}
                    for c, (v, names) in terms:
                        for p, c2 in self._fold_term({q: c}, names, -1).items():
                            x = field.add(vec.get(p, field.zero()), c2)
                            if x:
                                vec[p] = x
                            elif p in vec:
                                del vec[p]
                    if vec:
                        self.retry = sorted(
                            ((c, p) for p, c in vec.items()),
                            key=lambda t: self.kept_index[t[1]])
                        return

    def _commit(self, keptd: list):
        self.kept_by_deg.append(list(keptd))
        for p in keptd:
            self.kept_index[p] = len(self.kept)
            self.kept.append(p)

    def _kill_check(self, sp: Basis, cands: list, kept_desc: list) -> bool:
        """A relation row whose pivot lands on an already-kept path means an
        earlier degree chose a basis path that is secretly zero: record the
        echelon row as a derived relation and signal a restart."""
        piv = sp._pivots[-1]
        if piv < len(cands):
            return False
        row = sp._rows[-1]
        terms = []
        for j, c in enumerate(row):
            if c:
                p = cands[j] if j < len(cands) else kept_desc[j - len(cands)]
                terms.append((c, p))
        self.retry = terms
        return True


def build_quiver_algebra(field, vertices, arrows, relations=(),
                         max_path_length: int = 32, name=None) -> Algebra:
    vertices = list(vertices)
    if not vertices:
        raise MalformedRelation("a quiver needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise MalformedRelation("duplicate vertex names")
    arrows_by_name: dict = {}
    arrow_order: list[str] = []
    arrow_triples = []
    for entry in arrows:
        try:
            aname, src, tgt = entry
        except (TypeError, ValueError):
            raise MalformedRelation(f"arrow {entry!r} is not (name, source, target)")
        if not isinstance(aname, str):
            raise MalformedRelation(f"arrow name {aname!r} must be a string")
        if aname in arrows_by_name:
            raise MalformedRelation(f"duplicate arrow name {aname!r}")
        if src not in vertices or tgt not in vertices:
            raise MalformedRelation(f"arrow {aname!r} uses undeclared vertices")
        arrows_by_name[aname] = (src, tgt)
        arrow_order.append(aname)
        arrow_triples.append((aname, src, tgt))
    parsed = _parse_relations(field, arrows_by_name, relations)

    derived: list = []
    closure = None
    for _ in range(_MAX_RESTARTS):
        closure = _Closure(field, vertices, arrows_by_name, arrow_order,
                           parsed + derived, max_path_length)
        closure.run()
        if closure.retry is None:
            break
        derived.append(closure.retry)
    else:
        raise PerfcatError("relation rewriting did not stabilize after "
                           f"{_MAX_RESTARTS} completion rounds")

    kept = closure.kept
    dim = len(kept)
    idx = closure.kept_index
    zero, one = field.zero(), field.one()

    def product_row(i: int, j: int) -> tuple:
        pi, pj = kept[i], kept[j]
        if _path_target(arrows_by_name, pi) != pj[0]:
            return ()
        vec = closure._fold_term({pi: one}, pj[1], -1)
        return tuple(sorted((idx[p], c) for p, c in vec.items() if c))

    pairs = [[product_row(i, j) for j in range(dim)] for i in range(dim)]
    unit = [zero] * dim
    for v in vertices:
        for p, c in closure.rewrite[(v, ())].items():
            unit[idx[p]] = field.add(unit[idx[p]], c)
    labels = [f"e_{p[0]}" if not p[1] else "*".join(p[1]) for p in kept]

    homogeneous = all(len({len(p[1]) for _, p in terms}) == 1 for terms in parsed)
    deep_terms = all(len(p[1]) >= 2 for terms in parsed for _, p in terms)
    trivials_kept = all((v, ()) in idx for v in vertices)
    basis_degrees = [len(p[1]) for p in kept]
    arrow_vectors = {}
    for a in arrow_order:
        av = [zero] * dim
        base = dict(closure.rewrite[(arrows_by_name[a][0], ())])
        for p, c in closure._fold_term(base, (a,), -1).items():
            av[idx[p]] = c
        arrow_vectors[a] = av

    pres = QuiverPresentation(vertices, arrow_triples, parsed + derived, False,
                              list(kept), basis_degrees,
                              {p[0]: idx[p] for p in kept if not p[1]},
                              arrow_vectors)
    alg = Algebra(field, pairs, unit, labels, name or "quiver algebra",
                  presentation=pres, check=True)
    admissible = deep_terms and trivials_kept and not derived
    if admissible and not homogeneous:
        rows = [alg.basis_element(i) for i, d in enumerate(basis_degrees) if d >= 1]
        try:
            Ideal(alg, rows).nilpotency_index()
        except PerfcatError:
            admissible = False
    pres.admissible = admissible
    return alg
