"""Shared hand-built algebras for the test suite.

Kept deliberately independent of the corpus constructors so the lower layers
are exercised without importing anything above them.
"""

from perfcat.algebra import Algebra
from perfcat.linalg import QQ


def truncated_poly(field, n, name=None):
    """k[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            out = [0] * n
            if i + j < n:
                out[i + j] = 1
            row.append(out)
        table.append(row)
    unit = [1] + [0] * (n - 1)
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    return Algebra.from_structure_constants(
        field, table, unit, labels, name or f"k[x]/(x^{n})")


def matrix_algebra(field, n, name=None):
    """Full matrix algebra with basis E_ij in row-major order."""
    bas = [(i, j) for i in range(n) for j in range(n)]
    idx = {b: t for t, b in enumerate(bas)}
    table = []
    for (i, j) in bas:
        row = []
        for (k, l) in bas:
            out = [0] * len(bas)
            if j == k:
                out[idx[(i, l)]] = 1
            row.append(out)
        table.append(row)
    unit = [0] * len(bas)
    for i in range(n):
        unit[idx[(i, i)]] = 1
    labels = [f"E{i}{j}" for (i, j) in bas]
    return Algebra.from_structure_constants(field, table, unit, labels,
                                            name or f"M{n}")


def quaternion_algebra(field, a, b, name=None):
    """Basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji."""
    rows = {
        (0, 0): [1, 0, 0, 0], (0, 1): [0, 1, 0, 0],
        (0, 2): [0, 0, 1, 0], (0, 3): [0, 0, 0, 1],
        (1, 0): [0, 1, 0, 0], (1, 1): [a, 0, 0, 0],
        (1, 2): [0, 0, 0, 1], (1, 3): [0, 0, a, 0],
        (2, 0): [0, 0, 1, 0], (2, 1): [0, 0, 0, -1],
        (2, 2): [b, 0, 0, 0], (2, 3): [0, -b, 0, 0],
        (3, 0): [0, 0, 0, 1], (3, 1): [0, 0, -a, 0],
        (3, 2): [0, b, 0, 0], (3, 3): [-a * b, 0, 0, 0],
    }
    table = [[rows[(i, j)] for j in range(4)] for i in range(4)]
    return Algebra.from_structure_constants(
        field, table, [1, 0, 0, 0], ["1", "i", "j", "k"],
        name or f"quat({a},{b})")


def kronecker(field):
    return Algebra.from_quiver(field, [0, 1], [("a", 0, 1), ("b", 0, 1)],
                               name="kronecker")


def split_field_ext(field=QQ):
    """Q(sqrt 2): commutative division algebra that is not the base field."""
    table = [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]
    return Algebra.from_structure_constants(field, table, [1, 0], ["1", "s"],
                                            "Q(sqrt2)")
