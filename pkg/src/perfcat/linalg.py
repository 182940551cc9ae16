"""Exact dense linear algebra over the rationals and prime fields.

Entries are `fractions.Fraction` over Q and plain ints in [0, p) over F_p.
Elimination over Q clears denominators and runs fraction-free on gcd-normalized
integer rows, so intermediate entries stay small; over F_p it reduces mod p.
Pivoting is deterministic everywhere: first nonzero entry, columns scanned left
to right — repeated runs produce identical echelon forms, kernels and solutions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import FieldMismatch, ShapeMismatch, UnsupportedField

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """The rationals or a prime field F_p with p prime, p < 2**31.

    Elements are Fractions (over Q) or ints in [0, p). `coerce` accepts ints,
    Fractions and exact decimal-free strings like "-3/7".
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "Q":
            self.kind, self.p = "Q", None
        elif kind == "Fp":
            if p is None or not (2 <= p < 2**31) or not _is_prime(p):
                raise UnsupportedField(f"modulus must be a prime below 2**31, got {p!r}")
            self.kind, self.p = "Fp", p
        else:
            raise UnsupportedField(f"unknown field kind {kind!r}")

    @staticmethod
    def rationals() -> "Field":
        return Field("Q")

    @staticmethod
    def prime(p: int) -> "Field":
        return Field("Fp", p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return "Q" if self.kind == "Q" else f"F_{self.p}"

    # -- element constructors -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1 % self.p

    def of_int(self, n: int):
        return Fraction(n) if self.kind == "Q" else n % self.p

    def coerce(self, x):
        """Coerce an int, Fraction or "a/b" string into this field."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool) or isinstance(x, int):
            return self.of_int(int(x))
        if isinstance(x, Fraction):
            if self.kind == "Q":
                return x
            den = x.denominator % self.p
            if den == 0:
                raise UnsupportedField(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        raise UnsupportedField(f"cannot coerce {x!r} into {self!r}")

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else a * b % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.kind == "Q" else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_string(self, a) -> str:
        return str(a)


QQ = Field.rationals()


class Matrix:
    """Dense row-major matrix over a Field.

    Rows are plain lists of field elements; `entries` flattens them row-major
    (len(entries) == nrows * ncols). Kernel vectors and solutions are returned
    as coordinate lists.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: list, ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            for r in self.rows:
                if len(r) != self.ncols:
                    raise ShapeMismatch("ragged rows")
        else:
            if ncols is None:
                raise ShapeMismatch("empty matrix needs an explicit column count")
            self.ncols = ncols

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = Matrix.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            m.rows[i][i] = one
        return m

    @staticmethod
    def from_entries(field: Field, nrows: int, ncols: int, entries: list) -> "Matrix":
        if len(entries) != nrows * ncols:
            raise ShapeMismatch("entry count does not match shape")
        co = field.coerce
        return Matrix(
            field,
            [[co(entries[i * ncols + j]) for j in range(ncols)] for i in range(nrows)],
            ncols,
        )

    @property
    def entries(self) -> list:
        return [x for row in self.rows for x in row]

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    __hash__ = None  # unhashable; identity caching uses id()

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    # -- arithmetic ------------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("addition shape mismatch")
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("subtraction shape mismatch")
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = Matrix.zeros(self.field, self.nrows, other.ncols)
        fp = self.field.kind == "Fp"
        p = self.field.p
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = orows[k]
                for j, b in enumerate(orow):
                    if b:
                        acc[j] = acc[j] + a * b
            if fp:
                out.rows[i] = [x % p for x in acc]
        return out

    def matvec(self, v: list) -> list:
        """self @ v for a coordinate (column) vector v."""
        if len(v) != self.ncols:
            raise ShapeMismatch("vector length mismatch")
        fp = self.field.kind == "Fp"
        out = []
        for row in self.rows:
            s = sum((a * b) for a, b in zip(row, v) if a and b)
            out.append(s % self.field.p if fp else Fraction(s))
        return out

    def vecmat(self, v: list) -> list:
        """v @ self for a coordinate (row) vector v."""
        if len(v) != self.nrows:
            raise ShapeMismatch("vector length mismatch")
        fp = self.field.kind == "Fp"
        zero = self.field.zero()
        out = [zero] * self.ncols
        for a, row in zip(v, self.rows):
            if not a:
                continue
            for j, b in enumerate(row):
                if b:
                    out[j] = out[j] + a * b
        if fp:
            p = self.field.p
            out = [x % p for x in out]
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.rows)] if self.nrows else [],
                      self.nrows)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(self.field, [r + s for r, s in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.ncols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; block (i,j) is self[i][j] * other."""
        self._check_field(other)
        mul = self.field.mul
        zero = self.field.zero()
        rows = []
        for r in self.rows:
            for s in other.rows:
                row = []
                for a in r:
                    if a:
                        row.extend(mul(a, b) if b else zero for b in s)
                    else:
                        row.extend([zero] * other.ncols)
                rows.append(row)
        return Matrix(self.field, rows, self.ncols * other.ncols)

    # -- elimination -----------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and pivot columns (deterministic)."""
        rows, pivots = _rref(self.field, self.rows, self.ncols)
        return Matrix(self.field, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(_rref(self.field, self.rows, self.ncols)[1])

    def kernel_basis(self) -> list[list]:
        """Canonical basis of the right null space {v : self @ v = 0}.

        One vector per free column of the RREF, free coordinate set to 1,
        returned in free-column order.
        """
        rows, pivots = _rref(self.field, self.rows, self.ncols)
        piv_set = set(pivots)
        zero, one, neg = self.field.zero(), self.field.one(), self.field.neg
        basis = []
        for free in range(self.ncols):
            if free in piv_set:
                continue
            v = [zero] * self.ncols
            v[free] = one
            for r, p in enumerate(pivots):
                v[p] = neg(rows[r][free])
            basis.append(v)
        return basis

    def determinant(self):
        """Exact determinant via field-division elimination."""
        if self.nrows != self.ncols:
            raise ShapeMismatch("determinant needs a square matrix")
        field = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = field.one()
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                return field.zero()
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = field.neg(det)
            pval = rows[col][col]
            det = field.mul(det, pval)
            inv = field.inv(pval)
            for r in range(col + 1, n):
                f = rows[r][col]
                if f:
                    scale = field.mul(f, inv)
                    rows[r] = [field.sub(x, field.mul(scale, y))
                               for x, y in zip(rows[r], rows[col])]
        return det

    def solve(self, b: list) -> list | None:
        """A solution x of self @ x = b (free coordinates 0), or None."""
        if len(b) != self.nrows:
            raise ShapeMismatch("right-hand side length mismatch")
        co = self.field.coerce
        aug = [row + [co(bb)] for row, bb in zip(self.rows, b)]
        rows, pivots = _rref(self.field, aug, self.ncols + 1)
        if self.ncols in pivots:
            return None
        zero = self.field.zero()
        x = [zero] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = rows[r][self.ncols]
        return x

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        aug = [row + idrow for row, idrow in
               zip(self.rows, Matrix.identity(self.field, self.nrows).rows)]
        rows, pivots = _rref(self.field, aug, 2 * self.ncols)
        if list(pivots) != list(range(self.ncols)):
            raise ShapeMismatch("matrix is singular")
        return Matrix(self.field, [r[self.ncols:] for r in rows], self.ncols)


# -- spec-level entry points ----------------------------------------------------


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> list[list]:
    return m.kernel_basis()


def solve_linear(m: Matrix, b: list) -> list | None:
    return m.solve(b)


# -- elimination internals -------------------------------------------------------


def _rref(field: Field, rows: list, ncols: int):
    if field.kind == "Fp":
        return _rref_fp([list(r) for r in rows], ncols, field.p)
    return _rref_q([list(r) for r in rows], ncols)


def _rref_fp(rows: list, ncols: int, p: int):
    pivots = []
    h = 0
    n = len(rows)
    for col in range(ncols):
        pr = None
        for i in range(h, n):
            if rows[i][col] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[h], rows[pr] = rows[pr], rows[h]
        inv = pow(rows[h][col] % p, p - 2, p)
        rows[h] = [x * inv % p for x in rows[h]]
        prow = rows[h]
        for i in range(n):
            if i == h:
                continue
            f = rows[i][col] % p
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        pivots.append(col)
        h += 1
        if h == n:
            break
    return rows[:h] + [[0] * ncols for _ in range(n - h)], pivots


def _int_row(row: list) -> list[int]:
    """Clear denominators and divide by content; empty/zero rows pass through."""
    l = 1
    for x in row:
        d = x.denominator
        if d != 1:
            l = l * d // gcd(l, d)
    ints = [int(x * l) if l != 1 else x.numerator for x in row]
    g = 0
    for v in ints:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _rref_q(rows: list, ncols: int):
    work = [_int_row(r) for r in rows]
    pivots = []
    h = 0
    n = len(work)
    for col in range(ncols):
        pr = None
        for i in range(h, n):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        work[h], work[pr] = work[pr], work[h]
        prow = work[h]
        pv = prow[col]
        for i in range(h + 1, n):
            f = work[i][col]
            if f:
                ri = work[i]
                new = [a * pv - f * b for a, b in zip(ri, prow)]
                g = 0
                for v in new:
                    if v:
                        g = gcd(g, v)
                        if g == 1:
                            break
                work[i] = [v // g for v in new] if g > 1 else new
        pivots.append(col)
        h += 1
        if h == n:
            break
    # back-substitution over Q on the surviving echelon rows
    reduced = [[Fraction(v) for v in work[i]] for i in range(h)]
    for r in range(h):
        piv = pivots[r]
        lead = reduced[r][piv]
        if lead != 1:
            reduced[r] = [x / lead for x in reduced[r]]
    for r in range(h - 1, -1, -1):
        piv = pivots[r]
        prow = reduced[r]
        for up in range(r):
            f = reduced[up][piv]
            if f:
                urow = reduced[up]
                reduced[up] = [a - f * b for a, b in zip(urow, prow)]
    zero_row = [Fraction(0)] * ncols
    return reduced + [list(zero_row) for _ in range(n - h)], pivots


class Basis:
    """Incrementally built basis of a subspace of k^n, with coordinates.

    Maintains an echelon system (each pivot column is zero in all later rows)
    plus the expression of each echelon row in terms of the vectors originally
    inserted, so `coordinates` can rewrite any member of the span in terms of
    the inserted vectors. Insertion order is part of the basis: everything is
    deterministic.
    """

    __slots__ = ("field", "ambient", "_rows", "_pivots", "_coords", "_ninserted")

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self._rows: list[list] = []
        self._pivots: list[int] = []
        self._coords: list[list] = []
        self._ninserted = 0

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: list, want_coords: bool):
        field = self.field
        sub, mul = field.sub, field.mul
        v = [field.coerce(x) for x in vec]
        coeff = [field.zero()] * len(self._rows) if want_coords else None
        for i, (row, piv) in enumerate(zip(self._rows, self._pivots)):
            f = v[piv]
            if f:
                v = [sub(a, mul(f, b)) for a, b in zip(v, row)]
                if want_coords:
                    coeff[i] = f
        return v, coeff

    def extend(self, vec: list) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        v, _ = self._reduce(vec, False)
        self._ninserted += 1
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = self.field.inv(v[piv])
        mul = self.field.mul
        self._rows.append([mul(inv, x) for x in v])
        self._pivots.append(piv)
        # residual = vec - sum(f_i * echelon_i); record the echelon row's
        # expression in inserted vectors by replaying the reduction
        _, coeff = self._reduce(vec, True)
        expr = [self.field.zero()] * self._ninserted
        expr[self._ninserted - 1] = self.field.one()
        # vec = sum coeff_i * row_i_expr + v, and new row = inv * v
        for i, c in enumerate(coeff[:-1]):
            if c:
                old = self._coords[i]
                for j, x in enumerate(old):
                    if x:
                        expr[j] = self.field.sub(expr[j], mul(c, x))
        self._coords.append([mul(inv, x) for x in expr])
        return True

    def contains(self, vec: list) -> bool:
        v, _ = self._reduce(vec, False)
        return not any(v)

    def residual(self, vec: list) -> list:
        """vec reduced against the echelon rows; zero at every pivot column."""
        v, _ = self._reduce(vec, False)
        return v

    def pivots(self) -> list[int]:
        return list(self._pivots)

    def coordinates(self, vec: list) -> list:
        """Coefficients w.r.t. the *inserted spanning vectors* (those that
        enlarged the span get the echelon slots; redundant inserts weigh 0)."""
        v, coeff = self._reduce(vec, True)
        if any(v):
            raise ShapeMismatch("vector not in span")
        out = [self.field.zero()] * self._ninserted
        add, mul = self.field.add, self.field.mul
        for c, expr in zip(coeff, self._coords):
            if c:
                for j, x in enumerate(expr):
                    if x:
                        out[j] = add(out[j], mul(c, x))
        return out

    def echelon_rows(self) -> list[list]:
        return [list(r) for r in self._rows]
