"""4x4 matrices over exact scalars or polynomials.

Entries are duck-typed: rationals, bivariate polynomials, or anything with
ring arithmetic.  Indices follow the row^j_column_k convention A[j][k] with
j, k in 0..3.  The adjugate satisfies adj(A) A = det(A) I as an identity in
the entry ring, which is how constant matrices get inverted exactly
(Cramer) and how polynomial matrices get "inverted" without division.
"""

from __future__ import annotations

from gmpy2 import mpq


class Mat4:
    __slots__ = ("m",)

    def __init__(self, rows):
        m = [list(r) for r in rows]
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("Mat4 needs 4x4 entries")
        self.m = m

    @classmethod
    def identity(cls, one=1, zero=0):
        return cls([[one if i == j else zero for j in range(4)] for i in range(4)])

    def __getitem__(self, jk):
        j, k = jk
        return self.m[j][k]

    def row(self, j):
        return list(self.m[j])

    def col(self, k):
        return [self.m[j][k] for j in range(4)]

    def __add__(self, other):
        return Mat4([[self.m[j][k] + other.m[j][k] for k in range(4)] for j in range(4)])

    def __sub__(self, other):
        return Mat4([[self.m[j][k] - other.m[j][k] for k in range(4)] for j in range(4)])

    def __neg__(self):
        return Mat4([[-v for v in r] for r in self.m])

    def scale(self, s):
        return Mat4([[v * s for v in r] for r in self.m])

    def __matmul__(self, other):
        out = []
        for j in range(4):
            row = []
            for k in range(4):
                acc = self.m[j][0] * other.m[0][k]
                for l in range(1, 4):
                    acc = acc + self.m[j][l] * other.m[l][k]
                row.append(acc)
            out.append(row)
        return Mat4(out)

    def map(self, f):
        return Mat4([[f(v) for v in r] for r in self.m])

    def transpose(self):
        return Mat4([[self.m[k][j] for k in range(4)] for j in range(4)])


_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _is_zero_entry(v) -> bool:
    z = getattr(v, "is_zero", None)
    if z is not None:
        return v.is_zero()
    return v == 0


class _MinorCache:
    """Shared 2x2 minors of a 4x4; they dominate the cofactor work."""

    def __init__(self, m):
        self.m = m
        self.cache = {}

    def minor2(self, r1, r2, c1, c2):
        key = (r1, r2, c1, c2)
        v = self.cache.get(key)
        if v is None:
            m = self.m
            v = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
            self.cache[key] = v
        return v

    def minor3(self, rows, cols):
        (r0, r1, r2), (c0, c1, c2) = rows, cols
        m = self.m
        acc = None
        for cc, others, sgn in ((c0, (c1, c2), 1), (c1, (c0, c2), -1), (c2, (c0, c1), 1)):
            if _is_zero_entry(m[r0][cc]):
                continue
            t = m[r0][cc] * self.minor2(r1, r2, *others)
            acc = (t if sgn > 0 else -t) if acc is None else (acc + t if sgn > 0 else acc - t)
        if acc is None:
            return 0 * m[r0][c0]
        return acc


def det4(A: Mat4):
    """Exact 4x4 determinant by cofactor expansion along the sparsest
    column, with the 2x2 minors shared across cofactors.

    The block matrices of the pipeline have entire zero columns or rows,
    which the sparsity choice exploits for free.
    """
    m = A.m
    zeros = [sum(1 for j in range(4) if _is_zero_entry(m[j][k])) for k in range(4)]
    k = max(range(4), key=lambda c: zeros[c])
    mc = _MinorCache(m)
    rows_all = (0, 1, 2, 3)
    cols = tuple(c for c in range(4) if c != k)
    acc = None
    for j in range(4):
        if _is_zero_entry(m[j][k]):
            continue
        rows = tuple(r for r in rows_all if r != j)
        term = m[j][k] * mc.minor3(rows, cols)
        if (j + k) % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return 0
    return acc


def adj4(A: Mat4) -> Mat4:
    """Exact adjugate: adj(A)^j_k = (-1)^{j+k} * minor with row k, column j
    removed; satisfies adj(A) A = det(A) I identically."""
    m = A.m
    mc = _MinorCache(m)
    out = [[None] * 4 for _ in range(4)]
    rows_all = (0, 1, 2, 3)
    for j in range(4):
        cols = tuple(c for c in range(4) if c != j)
        for k in range(4):
            rows = tuple(r for r in rows_all if r != k)
            minor = mc.minor3(rows, cols)
            out[j][k] = -minor if (j + k) % 2 == 1 else minor
    return Mat4(out)


def adj_and_det4(A: Mat4):
    """Adjugate and determinant together, sharing all minor work; the
    determinant is assembled as sum_l adj^1_l A^l_1."""
    adj = adj4(A)
    m = A.m
    acc = None
    for l in range(4):
        if _is_zero_entry(m[l][0]) or _is_zero_entry(adj.m[0][l]):
            continue
        t = adj.m[0][l] * m[l][0]
        acc = t if acc is None else acc + t
    return adj, (0 if acc is None else acc)


def invert_const4(A: Mat4) -> Mat4:
    """Exact inverse of a constant rational matrix via adj(A)/det(A)."""
    d = mpq(det4(A))
    if d == 0:
        raise ZeroDivisionError("matrix is singular")
    adj = adj4(A)
    return Mat4([[mpq(adj.m[j][k]) / d for k in range(4)] for j in range(4)])
