"""Exact linear algebra over the integers and rationals.

Normal forms (Hermite, Smith) with unimodular transforms, integer linear
system solving, and the category of finitely presented abelian groups with
kernels, cokernels and images.  All arithmetic is arbitrary precision;
nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class IncompatibleMorphism(ValueError):
    """The matrix does not map source relations into the target relation lattice."""


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries, cols: int | None = None):
        data = tuple(tuple(int(v) for v in row) for row in entries)
        if data:
            w = len(data[0])
            if any(len(r) != w for r in data):
                raise ValueError("rows of unequal length")
            if cols is not None and cols != w:
                raise ValueError("cols inconsistent with row length")
        else:
            w = 0 if cols is None else cols
        self.rows = len(data)
        self.cols = w
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def diagonal(cls, ds, rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        ds = list(ds)
        r = len(ds) if rows is None else rows
        c = len(ds) if cols is None else cols
        m = [[0] * c for _ in range(r)]
        for i, d in enumerate(ds):
            if i < r and i < c:
                m[i][i] = d
        return cls(m, cols=c)

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "IntMatrix":
        columns = [tuple(c) for c in columns]
        if columns:
            r = len(columns[0])
            if any(len(c) != r for c in columns):
                raise ValueError("columns of unequal length")
            if rows is not None and rows != r:
                raise ValueError("rows inconsistent with column length")
        else:
            r = 0 if rows is None else rows
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(r)],
                   cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], cols=self.rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ocols = other.cols
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            out.append([sum(ri[k] * other.data[k][j] for k in range(self.cols))
                        for j in range(ocols)])
        return IntMatrix(out, cols=ocols)

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(r[k] * vec[k] for k in range(self.cols)) for r in self.data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in sum")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-v for v in r] for r in self.data], cols=self.cols)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * v for v in r] for r in self.data], cols=self.cols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix([r1 + r2 for r1, r2 in zip(self.data, other.data)],
                         cols=self.cols + other.cols)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def is_identity(self) -> bool:
        return (self.rows == self.cols
                and all(self.data[i][j] == (1 if i == j else 0)
                        for i in range(self.rows) for j in range(self.cols)))

    def to_lists(self):
        return [list(r) for r in self.data]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"


def int_det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = [list(r) for r in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_sub(m, i, k, q):
    """Row i minus q times row k, in place."""
    if q:
        ri, rk = m[i], m[k]
        for j in range(len(ri)):
            ri[j] -= q * rk[j]


def _qnear(a: int, b: int) -> int:
    """Quotient with minimal-magnitude remainder (keeps entries small)."""
    q = a // b
    if 2 * abs(a - q * b) > abs(b):
        q += 1
    return q


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with U unimodular, U*A == H, H in row echelon form with
    positive pivots and the entries above each pivot reduced into [0, pivot).
    """
    m, n = A.rows, A.cols
    H = [list(r) for r in A.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pr = 0
    for c in range(n):
        if pr >= m:
            break
        while True:
            piv = -1
            for i in range(pr, m):
                v = H[i][c]
                if v != 0 and (piv < 0 or abs(v) < abs(H[piv][c])):
                    piv = i
            if piv < 0:
                break
            if piv != pr:
                H[pr], H[piv] = H[piv], H[pr]
                U[pr], U[piv] = U[piv], U[pr]
            clean = True
            for i in range(pr + 1, m):
                if H[i][c] != 0:
                    q = _qnear(H[i][c], H[pr][c])
                    _row_sub(H, i, pr, q)
                    _row_sub(U, i, pr, q)
                    if H[i][c] != 0:
                        clean = False
            if clean:
                break
        if pr < m and H[pr][c] != 0:
            if H[pr][c] < 0:
                H[pr] = [-v for v in H[pr]]
                U[pr] = [-v for v in U[pr]]
            p = H[pr][c]
            for i in range(pr):
                q = H[i][c] // p
                _row_sub(H, i, pr, q)
                _row_sub(U, i, pr, q)
            pr += 1
    return IntMatrix(H, cols=n), IntMatrix(U, cols=m)


def snf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns (D, U, V) with U, V unimodular, U*A*V == D, D diagonal with
    nonnegative entries satisfying d1 | d2 | ... .  Pivots are chosen as the
    smallest nonzero absolute value, ties broken by lowest row then column,
    so the transform pair is deterministic.  Elimination uses minimal
    remainders to keep the transforms from exploding.
    """
    m, n = A.rows, A.cols
    D = [list(r) for r in A.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in D:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def col_sub(j, k, q):
        # column j minus q times column k
        if q:
            for r in D:
                r[j] -= q * r[k]
            for r in V:
                r[j] -= q * r[k]

    k = 0
    top = min(m, n)
    while k < top:
        piv = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    piv, best = (i, j), v
        if piv is None:
            break
        if piv[0] != k:
            swap_rows(piv[0], k)
        if piv[1] != k:
            swap_cols(piv[1], k)
        while True:
            for i in range(k + 1, m):
                if D[i][k] != 0:
                    q = _qnear(D[i][k], D[k][k])
                    _row_sub(D, i, k, q)
                    _row_sub(U, i, k, q)
            left = [i for i in range(k + 1, m) if D[i][k] != 0]
            if left:
                i0 = min(left, key=lambda i: (abs(D[i][k]), i))
                swap_rows(i0, k)
                continue
            for j in range(k + 1, n):
                if D[k][j] != 0:
                    q = _qnear(D[k][j], D[k][k])
                    col_sub(j, k, q)
            left = [j for j in range(k + 1, n) if D[k][j] != 0]
            if left:
                j0 = min(left, key=lambda j: (abs(D[k][j]), j))
                swap_cols(j0, k)
                continue
            break
        # absorb until the pivot divides the remaining submatrix
        d = D[k][k]
        absorbed = False
        for i in range(k + 1, m):
            if any(v % d for v in D[i][k + 1:]):
                _row_sub(D, k, i, -1)
                _row_sub(U, k, i, -1)
                absorbed = True
                break
        if absorbed:
            continue
        k += 1
    for i in range(top):
        if D[i][i] < 0:
            D[i] = [-v for v in D[i]]
            U[i] = [-v for v in U[i]]
    return IntMatrix(D, cols=n), IntMatrix(U, cols=m), IntMatrix(V, cols=n)


def inverse_unimodular(U: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    H, W = hnf(U)
    if not H.is_identity():
        raise ValueError("matrix is not unimodular")
    return W


def solve_integer(A: IntMatrix, b) -> tuple | None:
    """One integer solution x of A x = b, or None if there is none."""
    b = tuple(int(v) for v in b)
    if len(b) != A.rows:
        raise ValueError("right-hand side length mismatch")
    H, U = hnf(A.transpose())  # rows of H span the column lattice of A
    c = list(b)
    y = [0] * H.rows
    for i in range(H.rows):
        j = next((jj for jj in range(H.cols) if H[i, jj] != 0), None)
        if j is None:
            break
        if c[j] % H[i, j]:
            return None
        y[i] = c[j] // H[i, j]
        if y[i]:
            for jj in range(H.cols):
                c[jj] -= y[i] * H[i, jj]
    if any(c):
        return None
    return U.transpose().apply(y)


def lattice_contains(A: IntMatrix, b) -> bool:
    """Whether b lies in the lattice generated by the columns of A."""
    return solve_integer(A, b) is not None


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel of A, as matrix columns."""
    D, _U, V = snf(A)
    r = sum(1 for i in range(min(A.rows, A.cols)) if D[i, i] != 0)
    return IntMatrix.from_columns([V.column(j) for j in range(r, A.cols)],
                                  rows=A.cols)


def column_lattice_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the lattice generated by the columns of A, as matrix columns."""
    H, _ = hnf(A.transpose())
    cols = [H.row(i) for i in range(H.rows) if any(H.row(i))]
    return IntMatrix.from_columns(cols, rows=A.rows)


# ---------------------------------------------------------------------------
# finitely presented abelian groups


class FpGroup:
    """Finitely presented abelian group Z^g / (column lattice of relations).

    Elements are integer coordinate tuples of length ``ngens``; two tuples
    represent the same element when their difference lies in the relation
    lattice.  ``invariant_factors`` lists the torsion factors in divisibility
    order with entries 1 dropped and one 0 per free summand.
    """

    __slots__ = ("ngens", "relations", "invariant_factors", "_diag", "_U", "_Uinv")

    def __init__(self, ngens: int, relations: IntMatrix | None = None):
        if relations is None:
            relations = IntMatrix.zeros(ngens, 0)
        if relations.rows != ngens:
            raise ValueError("relation matrix must have one row per generator")
        self.ngens = ngens
        self.relations = relations
        D, U, _V = snf(relations)
        diag = [D[i, i] if i < relations.cols else 0 for i in range(ngens)]
        self._diag = tuple(diag)
        self._U = U
        self._Uinv = None
        self.invariant_factors = tuple(d for d in diag if d != 1)

    def canonical(self, x) -> tuple:
        """Canonical coordinates of an element (equal elements map equal)."""
        if len(x) != self.ngens:
            raise ValueError("element length mismatch")
        c = list(self._U.apply(x))
        for i, d in enumerate(self._diag):
            if d:
                c[i] %= d
        return tuple(c)

    def from_canonical(self, c) -> tuple:
        if self._Uinv is None:
            self._Uinv = inverse_unimodular(self._U)
        return self._Uinv.apply(c)

    def is_zero_element(self, x) -> bool:
        return not any(self.canonical(x))

    def elements_equal(self, x, y) -> bool:
        return self.canonical(x) == self.canonical(y)

    def reduce(self, x) -> tuple:
        """Small representative of the class of x."""
        return self.from_canonical(self.canonical(x))

    def zero(self) -> tuple:
        return (0,) * self.ngens

    def rank(self) -> int:
        return sum(1 for d in self._diag if d == 0)

    def is_finite(self) -> bool:
        return self.rank() == 0

    def is_trivial(self) -> bool:
        return all(d == 1 for d in self._diag)

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if not self.is_finite():
            return None
        n = 1
        for d in self._diag:
            n *= d
        return n

    def elements(self):
        """All elements of a finite group, in generator coordinates."""
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite group")
        def rec(i, prefix):
            if i == len(self._diag):
                yield self.from_canonical(prefix)
                return
            for v in range(self._diag[i]):
                yield from rec(i + 1, prefix + [v])
        yield from rec(0, [])

    def random_element(self, rng) -> tuple:
        if self.is_finite():
            c = [rng.randrange(d) for d in self._diag]
            return self.from_canonical(c)
        return tuple(rng.randint(-6, 6) for _ in range(self.ngens))

    def __repr__(self):
        return f"FpGroup(inv={list(self.invariant_factors)})"


def group_from_relations(rel: IntMatrix) -> FpGroup:
    """Cokernel presentation of a relation matrix (one row per generator)."""
    return FpGroup(rel.rows, rel)


def free_group(rank: int) -> FpGroup:
    return FpGroup(rank)


def group_from_invariants(factors) -> FpGroup:
    """Group with the given invariant factors (0 encodes a free summand)."""
    factors = list(factors)
    finite = [d for d in factors if d]
    rank = len(factors) - len(finite)
    rel = IntMatrix.diagonal(finite, rows=len(factors), cols=len(finite))
    return FpGroup(len(factors), rel)


def direct_sum(groups) -> FpGroup:
    groups = list(groups)
    ngens = sum(g.ngens for g in groups)
    cols = []
    offset = 0
    for g in groups:
        for j in range(g.relations.cols):
            col = [0] * ngens
            for i, v in enumerate(g.relations.column(j)):
                col[offset + i] = v
            cols.append(col)
        offset += g.ngens
    return FpGroup(ngens, IntMatrix.from_columns(cols, rows=ngens))


def same_presentation(a: FpGroup, b: FpGroup) -> bool:
    return a is b or (a.ngens == b.ngens and a.relations == b.relations)


class FpMorphism:
    """Homomorphism between presented groups, as a matrix on generators.

    The matrix has target.ngens rows and source.ngens columns; column j is
    the image of the j-th source generator.  Construction checks that every
    source relation lands in the target relation lattice.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FpGroup, target: FpGroup, matrix: IntMatrix,
                 check: bool = True):
        if matrix.rows != target.ngens or matrix.cols != source.ngens:
            raise ValueError("morphism matrix has wrong shape")
        if check:
            for j in range(source.relations.cols):
                img = matrix.apply(source.relations.column(j))
                if not target.is_zero_element(img):
                    raise IncompatibleMorphism(
                        f"relation {j} is not respected by the matrix")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, group: FpGroup) -> "FpMorphism":
        return cls(group, group, IntMatrix.identity(group.ngens), check=False)

    @classmethod
    def zero(cls, source: FpGroup, target: FpGroup) -> "FpMorphism":
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens),
                   check=False)

    def apply(self, x) -> tuple:
        return self.matrix.apply(x)

    def compose(self, other: "FpMorphism") -> "FpMorphism":
        """self after other."""
        if not same_presentation(other.target, self.source):
            raise ValueError("composition sources do not match")
        return FpMorphism(other.source, self.target, self.matrix * other.matrix,
                          check=False)

    def __add__(self, other: "FpMorphism") -> "FpMorphism":
        return FpMorphism(self.source, self.target, self.matrix + other.matrix,
                          check=False)

    def __sub__(self, other: "FpMorphism") -> "FpMorphism":
        return FpMorphism(self.source, self.target, self.matrix - other.matrix,
                          check=False)

    def __neg__(self) -> "FpMorphism":
        return FpMorphism(self.source, self.target, -self.matrix, check=False)

    def reduced(self) -> "FpMorphism":
        """Equivalent morphism with column entries reduced in the target."""
        cols = [self.target.reduce(self.matrix.column(j))
                for j in range(self.matrix.cols)]
        return FpMorphism(self.source, self.target,
                          IntMatrix.from_columns(cols, rows=self.target.ngens),
                          check=False)

    def power(self, k: int) -> "FpMorphism":
        """k-fold composite of an endomorphism, k >= 0."""
        if self.source is not self.target:
            raise ValueError("power of a non-endomorphism")
        if k < 0:
            raise ValueError("negative power not defined here")
        out = FpMorphism.identity(self.source)
        for _ in range(k):
            out = self.compose(out).reduced()
        return out

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(self.matrix.column(j))
                   for j in range(self.matrix.cols))

    def equals(self, other: "FpMorphism") -> bool:
        if not (same_presentation(self.source, other.source)
                and same_presentation(self.target, other.target)):
            return False
        return (self - other).is_zero()

    def __repr__(self):
        return f"FpMorphism({self.matrix.to_lists()!r})"


def kernel(f: FpMorphism) -> tuple[FpGroup, FpMorphism]:
    """Kernel of f with its inclusion into the source.

    The kernel is presented on a basis of the lattice of source coordinates
    whose image falls in the target relation lattice.
    """
    M = f.matrix
    Rt = f.target.relations
    Rs = f.source.relations
    big = M.hstack(Rt)
    ker = kernel_basis(big)
    proj = IntMatrix([ker.row(i) for i in range(f.source.ngens)], cols=ker.cols)
    L = column_lattice_basis(proj)
    if L.cols == 0:
        K = FpGroup(0)
        incl = FpMorphism(K, f.source, IntMatrix.zeros(f.source.ngens, 0),
                          check=False)
        return K, incl
    rel_cols = []
    for j in range(Rs.cols):
        c = solve_integer(L, Rs.column(j))
        if c is None:  # cannot happen: source relations lie in the lattice
            raise AssertionError("source relation escaped the kernel lattice")
        rel_cols.append(c)
    K = FpGroup(L.cols, IntMatrix.from_columns(rel_cols, rows=L.cols))
    incl = FpMorphism(K, f.source, L, check=False)
    return K, incl


def cokernel(f: FpMorphism) -> FpGroup:
    """Cokernel: target generators modulo target relations and the image."""
    return FpGroup(f.target.ngens, f.target.relations.hstack(f.matrix))


def image(f: FpMorphism) -> FpGroup:
    """Image of f, presented as source modulo the kernel lattice."""
    M = f.matrix
    Rt = f.target.relations
    big = M.hstack(Rt)
    ker = kernel_basis(big)
    proj = IntMatrix([ker.row(i) for i in range(f.source.ngens)], cols=ker.cols)
    rel = proj.hstack(f.source.relations)
    return FpGroup(f.source.ngens, rel)


def coimage_projection(f: FpMorphism) -> FpMorphism:
    """Projection of the source onto image(f) (identity on generators)."""
    img = image(f)
    return FpMorphism(f.source, img, IntMatrix.identity(f.source.ngens),
                      check=False)


# ---------------------------------------------------------------------------
# exact rational matrices (tuples of tuples of Fraction)


def qm_from(rows) -> tuple:
    return tuple(tuple(Fraction(v) for v in r) for r in rows)


def qm_from_int(A: IntMatrix) -> tuple:
    return qm_from(A.data)


def qm_identity(n: int) -> tuple:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                 for i in range(n))

def qm_shape(A) -> tuple[int, int]:
    return (len(A), len(A[0]) if A else 0)


def qm_mul(A, B) -> tuple:
    n = len(B)
    cols = len(B[0]) if B else 0
    return tuple(tuple(sum(ra[k] * B[k][j] for k in range(n))
                       for j in range(cols)) for ra in A)


def qm_apply(A, v) -> tuple:
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in A)


def qm_sub(A, B) -> tuple:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def qm_pow(A, k: int) -> tuple:
    n = len(A)
    if k < 0:
        return qm_pow(qm_inv(A), -k)
    out = qm_identity(n)
    for _ in range(k):
        out = qm_mul(A, out)
    return out


def _qm_echelon(A):
    """Row echelon form over Q: returns (rows, pivot column list)."""
    rows = [list(r) for r in A]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    pr = 0
    for c in range(ncols):
        piv = next((i for i in range(pr, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = 1 / rows[pr][c]
        rows[pr] = [v * inv for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def qm_rank(A) -> int:
    if not A:
        return 0
    _, pivots = _qm_echelon(A)
    return len(pivots)


def qm_nullspace(A) -> list[tuple]:
    """Basis of the right null space, as vectors."""
    if not A:
        return []
    ncols = len(A[0])
    rows, pivots = _qm_echelon(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


def qm_inv(A) -> tuple:
    n = len(A)
    aug = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, r in enumerate(A)]
    rows, pivots = _qm_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows[:n])


def qm_det(A) -> Fraction:
    n = len(A)
    rows = [list(r) for r in A]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det
