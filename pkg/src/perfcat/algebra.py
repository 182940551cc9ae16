"""Finite-dimensional unital associative algebras by structure constants.

An algebra of dimension d over a field k stores the products of basis elements
b_i * b_j = sum_k c[i][j][k] b_k sparsely (one tuple of (k, coeff) pairs per
basis pair). Elements are coordinate row vectors of length d. Associativity on
all basis triples and the two-sided unit law are verified at construction for
user-supplied tables; derived constructions (opposite, tensor products,
corners, quotients) inherit associativity and only re-verify the unit.

Convention used throughout the package: algebras act on RIGHT modules, and in
quiver presentations paths compose left to right (the first traversed arrow is
written first). Endomorphism algebras built elsewhere state their own
composition order explicitly.
"""

from __future__ import annotations

import threading

from .errors import (
    FieldMismatch,
    NotAssociative,
    NotIdempotent,
    ShapeMismatch,
    UnitFails,
)
from .linalg import Basis, Field, Matrix


def _sparse_row(field: Field, dense: list) -> tuple:
    return tuple((k, c) for k, c in enumerate(dense) if c)


class Algebra:
    """Unital associative algebra with an explicit basis.

    Attributes:
        field: coefficient Field.
        dim: basis size (>= 1).
        unit: coordinates of the identity element.
        labels: printable basis labels (defaults to b0, b1, ...).
        presentation: the QuiverPresentation this algebra was built from, if any.
    """

    def __init__(self, field: Field, pairs: list, unit: list, labels=None,
                 name: str | None = None, presentation=None, check: bool = True):
        self.field = field
        self.dim = len(pairs)  # dim 0 (the zero algebra) is allowed: corner at 0
        self._pairs = pairs
        self.unit = [field.coerce(x) for x in unit]
        if len(self.unit) != self.dim:
            raise ShapeMismatch("unit vector has wrong length")
        self.labels = list(labels) if labels else [f"b{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise ShapeMismatch("label count mismatch")
        self.name = name or "algebra"
        self.presentation = presentation
        self._cache: dict = {}
        self._lock = threading.RLock()
        self._verify_unit()
        if check:
            self._verify_associativity()

    # -- construction ----------------------------------------------------------

    @staticmethod
    def from_structure_constants(field: Field, table: list, unit: list, labels=None,
                                 name: str | None = None, check: bool = True) -> "Algebra":
        """Build from a dense table c[i][j][k]; coefficients may be ints,
        Fractions or exact strings. Associativity on every basis triple and the
        unit law are verified unless check=False."""
        d = len(table)
        co = field.coerce
        pairs = []
        for i in range(d):
            if len(table[i]) != d:
                raise ShapeMismatch("structure-constant table is not square")
            row = []
            for j in range(d):
                if len(table[i][j]) != d:
                    raise ShapeMismatch("structure-constant vector has wrong length")
                row.append(tuple((k, co(x)) for k, x in enumerate(table[i][j]) if co(x)))
            pairs.append(row)
        return Algebra(field, pairs, unit, labels, name, check=check)

    @staticmethod
    def from_quiver(field: Field, vertices, arrows, relations=(),
                    max_path_length: int = 32, name: str | None = None) -> "Algebra":
        """Path algebra of a quiver modulo relations; see perfcat.quiver."""
        from .quiver import build_quiver_algebra
        return build_quiver_algebra(field, vertices, arrows, relations,
                                    max_path_length, name)

    def _verify_unit(self):
        for i in range(self.dim):
            ei = self._basis_vec(i)
            if self.multiply(self.unit, ei) != ei or self.multiply(ei, self.unit) != ei:
                raise UnitFails(f"unit fails on basis element {self.labels[i]}")

    def _verify_associativity(self):
        # (b_i b_j) b_k == b_i (b_j b_k), expanded through the sparse rows
        pairs = self._pairs
        field = self.field
        for i in range(self.dim):
            prow = pairs[i]
            for j in range(self.dim):
                ij = prow[j]
                for k in range(self.dim):
                    lhs: dict = {}
                    for m, c in ij:
                        for n, c2 in pairs[m][k]:
                            lhs[n] = field.add(lhs.get(n, 0), field.mul(c, c2))
                    rhs: dict = {}
                    for m, c in pairs[j][k]:
                        for n, c2 in pairs[i][m]:
                            rhs[n] = field.add(rhs.get(n, 0), field.mul(c, c2))
                    for n in set(lhs) | set(rhs):
                        if lhs.get(n, 0) != rhs.get(n, 0):
                            raise NotAssociative(
                                f"associativity fails on ({self.labels[i]}, "
                                f"{self.labels[j]}, {self.labels[k]})")

    # -- element arithmetic ------------------------------------------------------

    def _basis_vec(self, i: int) -> list:
        v = [self.field.zero()] * self.dim
        v[i] = self.field.one()
        return v

    def basis_element(self, i: int) -> list:
        return self._basis_vec(i)

    def zero_vector(self) -> list:
        return [self.field.zero()] * self.dim

    def multiply(self, v: list, w: list) -> list:
        """Product of two elements given as coordinate vectors."""
        field = self.field
        out = [field.zero()] * self.dim
        pairs = self._pairs
        fp = field.kind == "Fp"
        for i, a in enumerate(v):
            if not a:
                continue
            row = pairs[i]
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        if fp:
            p = field.p
            out = [x % p for x in out]
        return out

    def power(self, v: list, n: int) -> list:
        out = list(self.unit)
        for _ in range(n):
            out = self.multiply(out, v)
        return out

    def is_idempotent(self, v: list) -> bool:
        return self.multiply(v, v) == [self.field.coerce(x) for x in v]

    @property
    def table(self) -> list:
        """Dense structure constants c[i][j][k] (built on demand)."""
        zero = self.field.zero()
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                dense = [zero] * self.dim
                for k, c in self._pairs[i][j]:
                    dense[k] = c
                row.append(dense)
            out.append(row)
        return out

    def structure_pairs(self, i: int, j: int) -> tuple:
        return self._pairs[i][j]

    # -- regular representation ---------------------------------------------------

    def lmul_matrix(self, v: list) -> Matrix:
        """Matrix of a |-> v*a on row vectors: coords(v*a) = coords(a) @ M."""
        rows = []
        for m in range(self.dim):
            rows.append(self.multiply(v, self._basis_vec(m)))
        return Matrix(self.field, rows, self.dim)

    def rmul_matrix(self, v: list) -> Matrix:
        """Matrix of a |-> a*v on row vectors."""
        rows = []
        for m in range(self.dim):
            rows.append(self.multiply(self._basis_vec(m), v))
        return Matrix(self.field, rows, self.dim)

    def trace_vector(self) -> list:
        """t_k = trace of left multiplication by b_k."""
        with self._lock:
            if "trace_vector" not in self._cache:
                t = []
                for k in range(self.dim):
                    s = self.field.zero()
                    for m in range(self.dim):
                        for n, c in self._pairs[k][m]:
                            if n == m:
                                s = self.field.add(s, c)
                    t.append(s)
                self._cache["trace_vector"] = t
        return self._cache["trace_vector"]

    def generating_indices(self) -> list[int]:
        """Greedy small set of basis indices generating the unital algebra;
        intertwining conditions only need to hold on these (and they do iff
        they hold on the whole basis)."""
        with self._lock:
            if "gens" in self._cache:
                return self._cache["gens"]
        span = Basis(self.field, self.dim)
        span.extend(self.unit)
        gens: list[int] = []
        for i in range(self.dim):
            v = self._basis_vec(i)
            if span.contains(v):
                continue
            gens.append(i)
            # close the span under right multiplication by all generators
            frontier = [row for row in span.echelon_rows()]
            span.extend(v)
            frontier.append(v)
            while frontier:
                u = frontier.pop()
                for g in gens:
                    w = self.multiply(u, self._basis_vec(g))
                    if span.extend(w):
                        frontier.append(w)
        with self._lock:
            self._cache["gens"] = gens
        return gens

    def generating_vectors(self) -> list[list]:
        """Generators as coordinate vectors. Tensor products cache the much
        smaller set {g (x) 1} + {1 (x) g} instead of rescanning the basis."""
        with self._lock:
            if "gen_vectors" in self._cache:
                return self._cache["gen_vectors"]
        return [self._basis_vec(i) for i in self.generating_indices()]

    def center_basis(self) -> list[list]:
        """Echelon basis of the center {x : xg = gx for all generators g}."""
        rows = []
        for gv in self.generating_vectors():
            m = self.lmul_matrix(gv) - self.rmul_matrix(gv)
            # x @ m == 0; stack transposes to put x in kernel position
            rows.extend(m.transpose().rows)
        if not rows:
            return Matrix.identity(self.field, self.dim).rows
        ker = Matrix(self.field, rows, self.dim).kernel_basis()
        b = Basis(self.field, self.dim)
        for v in ker:
            b.extend(v)
        return b.echelon_rows()

    # -- derived algebras ----------------------------------------------------------

    def opposite(self) -> "Algebra":
        """Same space, reversed multiplication."""
        pairs = [[self._pairs[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return Algebra(self.field, pairs, self.unit, self.labels,
                       f"op({self.name})", check=False)

    def tensor_product(self, other: "Algebra", *, _radical_hint: bool = False) -> "Algebra":
        """Tensor product algebra; basis e_i (x) f_j at index i*other.dim + j.

        When _radical_hint is set and both factors have computed radicals, the
        product radical rad(A)(x)B + A(x)rad(B) is cached on the result. Over Q
        and prime fields the semisimple quotients are separable (the base
        fields are perfect), which is exactly when that formula is valid.
        """
        if self.field != other.field:
            raise FieldMismatch("tensor factors over different fields")
        field = self.field
        da, db = self.dim, other.dim
        dim = da * db
        pairs = []
        for i in range(da):
            for j in range(db):
                row = []
                arow = self._pairs[i]
                brow = other._pairs[j]
                for k in range(da):
                    ar = arow[k]
                    for l in range(db):
                        br = brow[l]
                        ent = []
                        for m, c in ar:
                            for n, c2 in br:
                                ent.append((m * db + n, field.mul(c, c2)))
                        ent.sort()
                        row.append(tuple(ent))
                pairs.append(row)
        unit = [field.zero()] * dim
        for i, a in enumerate(self.unit):
            if not a:
                continue
            for j, b in enumerate(other.unit):
                if b:
                    unit[i * db + j] = field.mul(a, b)
        labels = [f"{la}(x){lb}" for la in self.labels for lb in other.labels]
        out = Algebra(field, pairs, unit, labels,
                      f"{self.name}(x){other.name}", check=False)
        zero = field.zero()

        def _kron_vec(u: list, v: list) -> list:
            w = [zero] * dim
            for i, x in enumerate(u):
                if not x:
                    continue
                for j, y in enumerate(v):
                    if y:
                        w[i * db + j] = field.mul(x, y)
            return w

        gens = [_kron_vec(g, other.unit) for g in self.generating_vectors()]
        gens += [_kron_vec(self.unit, g) for g in other.generating_vectors()]
        out._cache["gen_vectors"] = gens
        out._cache["tensor_factors"] = (self, other)
        if _radical_hint:
            from .semisimple import tensor_radical_hint
            tensor_radical_hint(out, self, other)
        return out

    def enveloping(self) -> "Algebra":
        """opposite(a) (x) a; a is a right module over it via a |-> x a y."""
        return self.opposite().tensor_product(self, _radical_hint=True)

    def corner(self, e: list) -> tuple["Algebra", list[list]]:
        """Corner algebra e*a*e for an idempotent e.

        Returns (corner, rows) where rows[i] are the coordinates in a of the
        i-th corner basis element (an echelon basis of e*a*e); the corner's
        unit is e itself.
        """
        e = [self.field.coerce(x) for x in e]
        if self.multiply(e, e) != e:
            raise NotIdempotent("corner element does not square to itself")
        span = Basis(self.field, self.dim)
        for i in range(self.dim):
            span.extend(self.multiply(e, self.multiply(self._basis_vec(i), e)))
        rows = span.echelon_rows()
        coords = Basis(self.field, self.dim)
        for r in rows:
            coords.extend(r)
        d = len(rows)
        pairs = []
        for i in range(d):
            prow = []
            for j in range(d):
                prod = self.multiply(rows[i], rows[j])
                prow.append(_sparse_row(self.field, coords.coordinates(prod)))
            pairs.append(prow)
        unit = coords.coordinates(e)
        labels = [f"c{i}" for i in range(d)]
        return (Algebra(self.field, pairs, unit, labels,
                        f"corner({self.name})", check=False), rows)

    # -- semisimple-theory surface (delegates to perfcat.semisimple) -------------

    def radical(self):
        """Jacobson radical as an Ideal (cached)."""
        from .semisimple import compute_radical
        with self._lock:
            if "radical" not in self._cache:
                self._cache["radical"] = compute_radical(self)
        return self._cache["radical"]

    def nilpotency_index(self) -> int:
        """Least n with rad^n = 0; 1 iff semisimple."""
        return self.radical().nilpotency_index()

    def semisimple_quotient(self):
        """(quotient algebra, projection Matrix, section Matrix); cached."""
        from .semisimple import quotient_by_ideal
        with self._lock:
            if "ssq" not in self._cache:
                self._cache["ssq"] = quotient_by_ideal(self, self.radical())
        return self._cache["ssq"]

    def is_separable(self) -> bool:
        """For a semisimple algebra: does the radical of a (x) a^op vanish?

        Raises NotSemisimple when rad(a) != 0. Computed honestly on the tensor
        algebra (no perfect-base-field shortcut), as the dual route.
        """
        from .errors import NotSemisimple
        from .semisimple import compute_radical
        if self.radical().dim != 0:
            raise NotSemisimple("separability is only asked of semisimple algebras")
        t = self.tensor_product(self.opposite())
        return compute_radical(t).dim == 0

    def __repr__(self) -> str:
        return f"Algebra({self.name}, dim={self.dim}, {self.field!r})"


class Ideal:
    """A two-sided ideal stored as an echelon basis of its underlying space."""

    def __init__(self, parent: Algebra, vectors: list):
        self.parent = parent
        b = Basis(parent.field, parent.dim)
        for v in vectors:
            b.extend(v)
        self._basis = b
        self._nilpotency: int | None = None

    @property
    def dim(self) -> int:
        return self._basis.dim

    def basis_vectors(self) -> list[list]:
        return self._basis.echelon_rows()

    def contains(self, v: list) -> bool:
        return self._basis.contains(v)

    def nilpotency_index(self) -> int:
        """Least n >= 1 with I^n = 0, or raises if the ideal is not nilpotent
        (stabilizing nonzero powers)."""
        if self._nilpotency is not None:
            return self._nilpotency
        a = self.parent
        if self.dim == 0:
            self._nilpotency = 1
            return 1
        gen = self.basis_vectors()
        cur = gen
        n = 1
        while n <= a.dim + 2:
            nxt = Basis(a.field, a.dim)
            for u in cur:
                for v in gen:
                    nxt.extend(a.multiply(u, v))
            n += 1
            if nxt.dim == 0:
                self._nilpotency = n
                return n
            if nxt.dim == len(cur):
                break  # I^n = I^(n-1) nonzero: never reaches zero
            cur = nxt.echelon_rows()
        from .errors import PerfcatError
        raise PerfcatError("ideal is not nilpotent")

    def is_ideal(self) -> bool:
        """Explicit two-sidedness check (used by tests)."""
        a = self.parent
        for v in self.basis_vectors():
            for g in range(a.dim):
                bg = a.basis_element(g)
                if not self.contains(a.multiply(v, bg)):
                    return False
                if not self.contains(a.multiply(bg, v)):
                    return False
        return True

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim} of {self.parent.name})"
