"""Radical computation, semisimple quotients and idempotent machinery.

Radicals: over the rationals the radical is the kernel of the trace form of
the left regular representation (valid in characteristic zero). Over a prime
field F_p it is computed by the iterated p-power trace chain on integral
lifts:

    R_0 = A,   R_{k+1} = { x in R_k : Tr((L_x L_y)^(p^k)) = 0 mod p^(k+1)
                           for all y in R_k },   k = 0 .. floor(log_p dim),

which is linear over the prime field and lands on the radical. A cheap sound
early exit (current R is a nilpotent two-sided ideal, hence equals the
radical, since every chain member contains it) usually stops after the first
step.

Primitive idempotents of the semisimple quotient are found by splitting the
center along eigenvalues of its basis elements and then extracting minimal
right ideals inside each simple block from a deterministic candidate pool.
For a split block this recovers a full matrix-unit-sized family; blocks that
resist splitting are kept whole (correct for division-algebra blocks). All of
it is deterministic: fixed internal seed, no set iteration.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .algebra import Algebra, Ideal
from .errors import IdempotentLiftingFailed, NotSemisimple, PerfcatError
from .linalg import Basis, Matrix


# -- radicals --------------------------------------------------------------------


def compute_radical(a: Algebra) -> Ideal:
    pres = a.presentation
    if pres is not None and getattr(pres, "admissible", False):
        # admissible presentation: the radical is exactly the arrow ideal
        rows = [a.basis_element(i)
                for i, d in enumerate(pres.basis_degrees) if d >= 1]
        return Ideal(a, rows)
    if a.field.kind == "Q":
        rows = _radical_char0(a)
    else:
        rows = _radical_fp(a)
    return Ideal(a, rows)


def _gram_rows(a: Algebra) -> list:
    """G[i][j] = trace of left multiplication by b_i b_j."""
    t = a.trace_vector()
    field = a.field
    rows = []
    for i in range(a.dim):
        row = []
        for j in range(a.dim):
            s = field.zero()
            for k, c in a.structure_pairs(i, j):
                if t[k]:
                    s = field.add(s, field.mul(c, t[k]))
            row.append(s)
        rows.append(row)
    return rows


def _radical_char0(a: Algebra) -> list:
    g = Matrix(a.field, _gram_rows(a), a.dim)
    return g.kernel_basis()


def _is_nilpotent_ideal(a: Algebra, rows: list) -> bool:
    if not rows:
        return True
    span = Basis(a.field, a.dim)
    for r in rows:
        span.extend(r)
    gens = a.generating_vectors()
    for v in span.echelon_rows():
        for bg in gens:
            if not span.contains(a.multiply(v, bg)):
                return False
            if not span.contains(a.multiply(bg, v)):
                return False
    try:
        Ideal(a, rows).nilpotency_index()
    except PerfcatError:
        return False
    return True


def _int_lmul(a: Algebra, v: list) -> list:
    """Integer lift of the left-multiplication matrix of v (entries in [0,p))."""
    rows = []
    for m in range(a.dim):
        rows.append([int(x) for x in a.multiply(v, a.basis_element(m))])
    return rows


def _mat_mul_mod(x: list, y: list, mod: int) -> list:
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k in range(n):
            c = xi[k]
            if c:
                yk = y[k]
                for j in range(n):
                    if yk[j]:
                        oi[j] = (oi[j] + c * yk[j]) % mod
    return out

def _trace_pow_mod(m: list, e: int, mod: int) -> int:
    n = len(m)
    result = None
    base = [[x % mod for x in row] for row in m]
    while e:
        if e & 1:
            result = base if result is None else _mat_mul_mod(result, base, mod)
        e >>= 1
        if e:
            base = _mat_mul_mod(base, base, mod)
    return sum(result[i][i] for i in range(n)) % mod


def _radical_fp(a: Algebra) -> list:
    p = a.field.p
    n = a.dim
    g = Matrix(a.field, _gram_rows(a), a.dim)
    current = [[int(x) for x in v] for v in g.kernel_basis()]
    if _is_nilpotent_ideal(a, current):
        return current
    k = 1
    while p**k <= n and current:
        mod = p ** (k + 1)
        step = p**k
        lifts = [_int_lmul(a, v) for v in current]
        rows = []
        for ys in lifts:
            row = []
            for xt in lifts:
                prod = _mat_mul_mod(xt, ys, mod)
                val = _trace_pow_mod(prod, step, mod)
                if val % step:
                    raise PerfcatError("p-power trace chain left its lattice")
                row.append((val // step) % p)
            rows.append(row)
        m = Matrix(a.field, rows, len(current))
        combos = m.kernel_basis()
        nxt = []
        for lam in combos:
            vec = [0] * n
            for t, c in enumerate(lam):
                if c:
                    u = current[t]
                    for idx in range(n):
                        vec[idx] = (vec[idx] + c * u[idx]) % p
            nxt.append(vec)
        current = nxt
        if _is_nilpotent_ideal(a, current):
            return current
        k += 1
    return current


def tensor_radical_hint(t: Algebra, a: Algebra, b: Algebra) -> None:
    """Cache rad(a)(x)b + a(x)rad(b) as the radical of the tensor product.

    Valid over perfect base fields (Q and F_p), where semisimple quotients are
    separable.
    """
    zero = t.field.zero()
    rows = []
    db = b.dim
    for u in a.radical().basis_vectors():
        for j in range(db):
            vec = [zero] * t.dim
            for i, x in enumerate(u):
                if x:
                    vec[i * db + j] = x
            rows.append(vec)
    for i in range(a.dim):
        for v in b.radical().basis_vectors():
            vec = [zero] * t.dim
            for j, x in enumerate(v):
                if x:
                    vec[i * db + j] = x
            rows.append(vec)
    with t._lock:
        t._cache["radical"] = Ideal(t, rows)


# -- quotients ---------------------------------------------------------------------


def quotient_by_ideal(a: Algebra, ideal: Ideal):
    """Quotient algebra with projection/section matrices (row-vector maps).

    Returns (s, proj, sec): proj is dim(a) x dim(s) with coords_s = v @ proj,
    sec is dim(s) x dim(a) a linear section with proj(sec(x)) = x; the quotient
    basis is the set of coordinates away from the ideal's echelon pivots.
    """
    span = Basis(a.field, a.dim)
    for v in ideal.basis_vectors():
        span.extend(v)
    pivots = set(span._pivots)
    free = [i for i in range(a.dim) if i not in pivots]
    if not free:
        raise PerfcatError("ideal is the whole algebra; quotient would be zero")

    def reduce_vec(v):
        r, _ = span._reduce(v, False)
        return [r[i] for i in free]

    proj = Matrix(a.field, [reduce_vec(a.basis_element(i)) for i in range(a.dim)],
                  len(free))
    zero = a.field.zero()
    sec_rows = []
    for c in free:
        row = [zero] * a.dim
        row[c] = a.field.one()
        sec_rows.append(row)
    sec = Matrix(a.field, sec_rows, a.dim)
    pairs = []
    for i in range(len(free)):
        prow = []
        for j in range(len(free)):
            prod = a.multiply(sec_rows[i], sec_rows[j])
            prow.append(tuple((k, c) for k, c in enumerate(reduce_vec(prod)) if c))
        pairs.append(prow)
    unit = reduce_vec(a.unit)
    labels = [f"[{a.labels[c]}]" for c in free]
    s = Algebra(a.field, pairs, unit, labels, f"{a.name}/rad", check=False)
    return s, proj, sec


# -- polynomial helpers (for eigen-splitting) ---------------------------------------


def _poly_trim(f):
    while f and not f[-1]:
        f.pop()
    return f


def _poly_divmod(field, f, g):
    f = list(f)
    dg = len(g) - 1
    inv = field.inv(g[-1])
    q = [field.zero()] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and any(f):
        if not f[-1]:
            f.pop()
            continue
        c = field.mul(f[-1], inv)
        k = len(f) - 1 - dg
        q[k] = c
        for i, gc in enumerate(g):
            f[k + i] = field.sub(f[k + i], field.mul(c, gc))
        f.pop()
    return q, _poly_trim(f)

def _poly_gcd(field, f, g):
    f, g = _poly_trim(list(f)), _poly_trim(list(g))
    while g:
        _, r = _poly_divmod(field, f, g)
        f, g = g, r
    if f:
        inv = field.inv(f[-1])
        f = [field.mul(inv, c) for c in f]
    return f

def _poly_mul(field, f, g):
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = field.add(out[i + j], field.mul(a, b))
    return out

def _poly_powmod(field, base, e, m):
    _, r = _poly_divmod(field, base, m)
    result = [field.one()]
    while e:
        if e & 1:
            result = _poly_divmod(field, _poly_mul(field, result, r), m)[1]
        e >>= 1
        if e:
            r = _poly_divmod(field, _poly_mul(field, r, r), m)[1]
    return result

def _poly_eval(field, f, x):
    acc = field.zero()
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _small_divisors(n: int, cap: int = 400000) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n and d <= cap:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _poly_roots(field, f) -> list:
    """Roots in the base field of a monic squarefree polynomial (best effort
    over Q via the rational root test; complete over F_p)."""
    f = _poly_trim(list(f))
    if len(f) <= 1:
        return []
    if field.kind == "Q":
        den = 1
        for c in f:
            den = den * c.denominator // _gcd_int(den, c.denominator)
        ints = [int(c * den) for c in f]
        roots = []
        if ints[0] == 0:
            roots.append(Fraction(0))
        lead, const = ints[-1], next((c for c in ints if c), 0)
        for pnum in _small_divisors(const):
            for qden in _small_divisors(lead):
                for sign in (1, -1):
                    cand = Fraction(sign * pnum, qden)
                    if cand not in roots and _poly_eval(field, f, cand) == 0:
                        roots.append(cand)
        return sorted(roots)
    p = field.p
    if p <= 3000:
        return [x for x in range(p) if _poly_eval(field, f, x) == 0]
    # gcd with X^p - X isolates the split part, then Cantor-Zassenhaus
    xp = _poly_powmod(field, [0, 1], p, f)
    xp = _poly_trim([field.sub(c, (1 if i == 1 else 0)) for i, c in
                     enumerate(xp + [0] * (2 - len(xp)))])
    g = _poly_gcd(field, f, xp)
    roots = []
    stack = [g] if len(g) > 1 else []
    rng = Random(0)
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == 0:
            continue
        if d == 1:
            roots.append(field.neg(h[0]))
            continue
        while True:
            c = rng.randrange(p)
            w = _poly_powmod(field, [c, 1], (p - 1) // 2, h)
            w = _poly_trim([field.sub(x, (1 if i == 0 else 0)) for i, x in
                            enumerate(w + [0])])
            u = _poly_gcd(field, h, w) if w else []
            if u and 0 < len(u) - 1 < d:
                stack.append(u)
                stack.append(_poly_divmod(field, h, u)[0])
                break
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# -- block decomposition of a semisimple algebra -------------------------------------


class SimpleBlock:
    """One block of a semisimple algebra.

    idempotents: orthogonal idempotents summing to the block's central
    idempotent (primitive when the block split; the central idempotent alone
    otherwise). division_dim is dim e(block)e for one of them -- 1 exactly
    when the block is a full matrix algebra over the base field.
    """

    def __init__(self, central, idempotents, division_dim):
        self.central = central
        self.idempotents = idempotents
        self.division_dim = division_dim

    @property
    def matrix_size(self) -> int:
        return len(self.idempotents)

    @property
    def split(self) -> bool:
        return self.division_dim == 1


def _min_poly(a: Algebra, x: list, unit: list) -> list:
    """Monic minimal polynomial of x in the unital algebra (unit supplied)."""
    span = Basis(a.field, a.dim)
    powers = [list(unit)]
    span.extend(unit)
    cur = list(unit)
    while True:
        cur = a.multiply(cur, x)
        if span.contains(cur):
            coeffs = span.coordinates(cur)
            deg = len(powers)
            f = [a.field.neg(c) for c in coeffs[:deg]] + [a.field.one()]
            return f
        span.extend(cur)
        powers.append(list(cur))


def _eigen_idempotents(a: Algebra, e: list, x: list) -> list:
    """Split the idempotent e along rational eigenvalues of x (= exe assumed
    inside the corner). Returns a list of >= 1 orthogonal idempotents summing
    to e; [e] when nothing splits."""
    f = _min_poly(a, x, e)
    if len(f) <= 2:
        return [e]
    roots = _poly_roots(a.field, f)
    if not roots or (len(roots) == 1 and len(f) == 2):
        return [e]
    parts = []
    rest = list(e)
    for lam in roots:
        g, _ = _poly_divmod(a.field, f, [a.field.neg(lam), a.field.one()])
        val = _poly_eval_alg(a, g, x, e)
        scale = _poly_eval(a.field, g, lam)
        if not scale:
            continue
        inv = a.field.inv(scale)
        idem = [a.field.mul(inv, c) for c in val]
        if not any(idem):
            continue
        if a.multiply(idem, idem) != idem:
            continue
        parts.append(idem)
        rest = [a.field.sub(r, c) for r, c in zip(rest, idem)]
    if not parts:
        return [e]
    if any(rest):
        parts.append(rest)
    return parts


def _poly_eval_alg(a: Algebra, f, x: list, unit: list) -> list:
    acc = [a.field.zero()] * a.dim
    for c in reversed(f):
        acc = a.multiply(acc, x)
        if c:
            acc = [a.field.add(v, a.field.mul(c, u)) for v, u in zip(acc, unit)]
    return acc


def _right_ideal_dim(a: Algebra, z: list) -> tuple[int, list]:
    span = Basis(a.field, a.dim)
    for i in range(a.dim):
        span.extend(a.multiply(z, a.basis_element(i)))
    return span.dim, span.echelon_rows()


def _candidate_pool(a: Algebra, rng: Random):
    for i in range(a.dim):
        yield a.basis_element(i)
    for i in range(a.dim):
        bi = a.basis_element(i)
        f = _min_poly(a, bi, a.unit)
        for lam in _poly_roots(a.field, f):
            yield [a.field.sub(x, a.field.mul(lam, u)) for x, u in zip(bi, a.unit)]
    for i in range(min(a.dim, 12)):
        for j in range(min(a.dim, 12)):
            yield a.multiply(a.basis_element(i), a.basis_element(j))
    for _ in range(40):
        yield [a.field.of_int(rng.randrange(-3, 4)) for _ in range(a.dim)]


def _find_proper_right_ideal(a: Algebra, rng: Random):
    """Smallest proper nonzero right ideal z*a found by the pool, or None."""
    best = None
    for z in _candidate_pool(a, rng):
        if not any(z):
            continue
        d, rows = _right_ideal_dim(a, z)
        if 0 < d < a.dim and (best is None or d < best[0]):
            best = (d, rows)
            if d * d == a.dim:
                break
    if best is None:
        return None
    # greedy refinement: elements of the ideal may generate smaller ideals
    d, rows = best
    improved = True
    while improved:
        improved = False
        for w in rows:
            dw, rw = _right_ideal_dim(a, w)
            if 0 < dw < d:
                d, rows = dw, rw
                improved = True
                break
    return rows


def _idempotent_generator(a: Algebra, ideal_rows: list):
    """u in the right ideal with u*l = l for every basis element l (so u is an
    idempotent generating it), or None."""
    field = a.field
    r = len(ideal_rows)
    rows = []
    rhs = []
    for l in ideal_rows:
        prods = [a.multiply(g, l) for g in ideal_rows]
        for c in range(a.dim):
            rows.append([prods[i][c] for i in range(r)])
            rhs.append(l[c])
    sol = Matrix(field, rows, r).solve(rhs)
    if sol is None:
        return None
    u = [field.zero()] * a.dim
    for c, g in zip(sol, ideal_rows):
        if c:
            u = [field.add(x, field.mul(c, y)) for x, y in zip(u, g)]
    if a.multiply(u, u) != u or not any(u):
        return None
    return u


def _primitives_in_unital(a: Algebra) -> list[tuple[list, int]]:
    """Orthogonal idempotents of a (semisimple, single central block expected)
    obtained by minimal-right-ideal extraction; [(idem, corner_dim), ...]."""
    if a.dim == 1:
        return [(list(a.unit), 1)]
    rng = Random(0)
    # eigen-splitting first: cheap and catches diagonal-flavoured bases
    for i in range(a.dim):
        parts = _eigen_idempotents(a, list(a.unit), a.basis_element(i))
        if len(parts) > 1:
            out = []
            for e in parts:
                out.extend(_descend_corner(a, e))
            return out
    rows = _find_proper_right_ideal(a, rng)
    if rows is None:
        return [(list(a.unit), a.dim)]
    u = _idempotent_generator(a, rows)
    if u is None:
        return [(list(a.unit), a.dim)]
    comp = [a.field.sub(x, y) for x, y in zip(a.unit, u)]
    out = _descend_corner(a, u)
    if any(comp):
        out.extend(_descend_corner(a, comp))
    return out


def _descend_corner(a: Algebra, e: list) -> list[tuple[list, int]]:
    corner, rows = a.corner(e)
    if corner.dim == 1:
        return [(e, 1)]
    subs = _primitives_in_unital(corner)
    if len(subs) == 1:
        return [(e, corner.dim)]
    out = []
    for vec, ddim in subs:
        lifted = [a.field.zero()] * a.dim
        for c, row in zip(vec, rows):
            if c:
                lifted = [a.field.add(x, a.field.mul(c, y))
                          for x, y in zip(lifted, row)]
        out.append((lifted, ddim))
    return out


def block_decomposition(s: Algebra) -> list[SimpleBlock]:
    """Blocks of a semisimple algebra (cached on the algebra)."""
    with s._lock:
        if "blocks" in s._cache:
            return s._cache["blocks"]
    if s.dim == 0:
        with s._lock:
            s._cache["blocks"] = []
        return []
    centrals = [list(s.unit)]
    for z in s.center_basis():
        nxt = []
        for e in centrals:
            x = s.multiply(e, z)
            nxt.extend(_eigen_idempotents(s, e, x))
        centrals = nxt
    blocks = []
    for e in centrals:
        corner, rows = s.corner(e)
        prims = _primitives_in_unital(corner)
        lifted = []
        ddim = prims[0][1]
        for vec, d in prims:
            l = [s.field.zero()] * s.dim
            for c, row in zip(vec, rows):
                if c:
                    l = [s.field.add(x, s.field.mul(c, y)) for x, y in zip(l, row)]
            lifted.append(l)
            ddim = d
        blocks.append(SimpleBlock(e, lifted, ddim))
    with s._lock:
        s._cache["blocks"] = blocks
    return blocks


# -- lifting to the algebra itself ---------------------------------------------------


class LiftedBlock:
    """A block of a/rad(a) with its idempotents lifted to a."""

    def __init__(self, idempotents, s_idempotents, division_dim, central_s):
        self.idempotents = idempotents
        self.s_idempotents = s_idempotents
        self.division_dim = division_dim
        self.central_s = central_s

    @property
    def matrix_size(self) -> int:
        return len(self.idempotents)


def _newton_idempotent(a: Algebra, x: list) -> list:
    two = a.field.of_int(2)
    three = a.field.of_int(3)
    for _ in range(64):
        sq = a.multiply(x, x)
        if sq == x:
            return x
        cube = a.multiply(sq, x)
        x = [a.field.sub(a.field.mul(three, s), a.field.mul(two, c))
             for s, c in zip(sq, cube)]
    raise IdempotentLiftingFailed("idempotent iteration did not converge")


def _kron_vec(field, u: list, v: list, db: int) -> list:
    w = [field.zero()] * (len(u) * db)
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(v):
            if y:
                w[i * db + j] = field.mul(x, y)
    return w


def _tensor_lifted(a: Algebra) -> list[LiftedBlock] | None:
    """For a tensor product of algebras whose blocks all split completely,
    primitive idempotents are exactly the pairwise products of the factors'.
    Avoids Newton iteration inside the (large) product algebra."""
    with a._lock:
        factors = a._cache.get("tensor_factors")
    if factors is None:
        return None
    fa, fb = factors
    ba = lifted_decomposition(fa)
    bb = lifted_decomposition(fb)
    if any(b.division_dim != 1 for b in ba + bb):
        return None
    out = []
    for x in ba:
        for y in bb:
            idems = [_kron_vec(a.field, e, f, fb.dim)
                     for e in x.idempotents for f in y.idempotents]
            out.append(LiftedBlock(idems, None, 1, None))
    return out


def lifted_decomposition(a: Algebra) -> list[LiftedBlock]:
    """Primitive orthogonal idempotents of a, lifted blockwise from a/rad(a),
    summing to 1 exactly. Cached."""
    with a._lock:
        if "lifted_blocks" in a._cache:
            return a._cache["lifted_blocks"]
    if a.dim == 0:
        with a._lock:
            a._cache["lifted_blocks"] = []
        return []
    hinted = _tensor_lifted(a)
    if hinted is not None:
        with a._lock:
            a._cache["lifted_blocks"] = hinted
        return hinted
    s, proj, sec = a.semisimple_quotient()
    blocks = block_decomposition(s)
    field = a.field
    flat = [(bi, e) for bi, b in enumerate(blocks) for e in b.idempotents]
    lifted_flat = []
    f = [field.zero()] * a.dim  # sum of the idempotents lifted so far
    for pos, (bi, ebar) in enumerate(flat):
        if pos == len(flat) - 1:
            e = [field.sub(u, x) for u, x in zip(a.unit, f)]
            if a.multiply(e, e) != e:
                raise IdempotentLiftingFailed("final complement is not idempotent")
        else:
            x = sec.vecmat(ebar)
            omf = [field.sub(u, y) for u, y in zip(a.unit, f)]
            x = a.multiply(omf, a.multiply(x, omf))
            e = _newton_idempotent(a, x)
        if proj.vecmat(e) != [field.coerce(c) for c in ebar]:
            raise IdempotentLiftingFailed("lift does not project onto its class")
        lifted_flat.append(e)
        f = [field.add(x, y) for x, y in zip(f, e)]
    if f != [field.coerce(c) for c in a.unit]:
        raise IdempotentLiftingFailed("lifted idempotents do not sum to 1")
    out = []
    i = 0
    for b in blocks:
        k = len(b.idempotents)
        out.append(LiftedBlock(lifted_flat[i:i + k], b.idempotents,
                               b.division_dim, b.central))
        i += k
    with a._lock:
        a._cache["lifted_blocks"] = out
    return out


# -- division-algebra recognition ------------------------------------------------------


def is_division_algebra(a: Algebra):
    """True / False when certified, None when recognition is out of reach.

    Only small dimensions are certified positively: fields (simple and
    commutative), and over Q degree-2 central simple algebras whose trace-zero
    norm form is definite (the quaternion case). A discovered proper right
    ideal or nontrivial idempotent certifies False.
    """
    if a.radical().dim != 0:
        return False
    blocks = block_decomposition(a)
    if len(blocks) > 1:
        return False
    b = blocks[0]
    if b.matrix_size > 1:
        return False
    commutative = all(
        a.multiply(a.basis_element(i), a.basis_element(j))
        == a.multiply(a.basis_element(j), a.basis_element(i))
        for i in range(a.dim) for j in range(i + 1, a.dim))
    if commutative:
        return True  # simple + commutative = field
    if a.field.kind == "Fp":
        return False  # finite division rings are commutative
    rows = _find_proper_right_ideal(a, Random(0))
    if rows is not None:
        return False
    if a.dim > 16:
        return None
    center = a.center_basis()
    if len(center) == 1 and a.dim == 4:
        return _definite_quaternion(a)
    return None


def _definite_quaternion(a: Algebra):
    """For a 4-dim central simple algebra over Q: True when the norm form on
    the trace-zero part is definite (anisotropic), None when indefinite."""
    field = a.field
    t = a.trace_vector()
    ker = Matrix(field, [t], a.dim).kernel_basis()
    if len(ker) != 3:
        return None
    v = ker
    gram = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            anti = [field.add(x, y) for x, y in zip(a.multiply(v[i], v[j]),
                                                    a.multiply(v[j], v[i]))]
            # must be a scalar: anti = 2*B(v_i, v_j) * (-1) * unit
            coeff = None
            for c, u in zip(anti, a.unit):
                if u:
                    coeff = field.div(c, u)
                    break
            scaled = [field.mul(coeff, u) for u in a.unit]
            if scaled != anti:
                return None
            gram[i][j] = field.div(field.neg(coeff), field.of_int(2))
    diag = _congruence_diagonal(field, gram)
    if diag is None or any(not d for d in diag):
        return None
    if all(d > 0 for d in diag):
        return True  # positive norm form => no zero divisors
    return None


def _congruence_diagonal(field, gram):
    m = [row[:] for row in gram]
    n = len(m)
    basis = [[field.one() if i == j else field.zero() for j in range(n)]
             for i in range(n)]
    for k in range(n):
        if not m[k][k]:
            sw = next((i for i in range(k + 1, n) if m[i][i]), None)
            if sw is None:
                j = next(((i, jj) for i in range(k, n) for jj in range(i + 1, n)
                          if m[i][jj]), None)
                if j is None:
                    for i in range(k, n):
                        if any(m[i][k:]):
                            return None
                    return [m[i][i] for i in range(n)]
                i, jj = j
                for c in range(n):
                    basis[i][c] = field.add(basis[i][c], basis[jj][c])
                _sym_update_add(field, m, i, jj)
                sw = i
            basis[k], basis[sw] = basis[sw], basis[k]
            m[k], m[sw] = m[sw], m[k]
            for row in m:
                row[k], row[sw] = row[sw], row[k]
        for i in range(k + 1, n):
            if m[i][k]:
                f = field.div(m[i][k], m[k][k])
                for c in range(n):
                    basis[i][c] = field.sub(basis[i][c], field.mul(f, basis[k][c]))
                for c in range(n):
                    m[i][c] = field.sub(m[i][c], field.mul(f, m[k][c]))
                for r in range(n):
                    m[r][i] = field.sub(m[r][i], field.mul(f, m[r][k]))
    return [m[i][i] for i in range(n)]


def _sym_update_add(field, m, i, j):
    n = len(m)
    for c in range(n):
        m[i][c] = field.add(m[i][c], m[j][c])
    for r in range(n):
        m[r][i] = field.add(m[r][i], m[r][j])


def number_of_simples(a: Algebra) -> int:
    s, _, _ = a.semisimple_quotient()
    return len(block_decomposition(s))
