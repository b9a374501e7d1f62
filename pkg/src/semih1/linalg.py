"""Exact dense linear algebra over the rationals.

Everything downstream reduces to the calculus in this module: reduced row
echelon forms, kernels, images, and the sum/intersection/quotient arithmetic
of subspaces of Q^d.  All scalars are :class:`fractions.Fraction`, so every
equality test is exact and every subspace has one canonical basis.

Conventions
-----------
* A :class:`Matrix` is a dense row-major grid of Fractions.
* ``kernel(m)`` is the solution space of ``m @ v = 0`` (one constraint per
  row, ambient dimension ``m.cols``).
* A :class:`Subspace` stores the unique reduced-row-echelon basis of a
  subspace; two subspaces are equal iff their bases are bit-equal.
"""

from fractions import Fraction

from .errors import DimensionMismatch, NotASubspace, ShapeMismatch

F0 = Fraction(0)
F1 = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"-3/7"``, and Fractions to Fraction.

    >>> frac("2/6")
    Fraction(1, 3)
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _rref_rows(rows, cols):
    """In-place reduced row echelon form of a list of row lists.

    Returns ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    Rows are eliminated above and below each pivot in a single sweep; the
    inner loop only touches the pivot row's nonzero columns.
    """
    rows = [row for row in rows if any(row)]
    # Duplicate rows are common in axiom systems; drop them cheaply.
    if len(rows) > 1:
        seen = set()
        unique = []
        for row in rows:
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                unique.append(row)
        rows = unique
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = F1 / pv
            for j in range(c, cols):
                if prow[j]:
                    prow[j] *= inv
        nz = [(j, prow[j]) for j in range(c, cols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j, v in nz:
                    row[j] -= f * v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


class Matrix:
    """A dense rows x cols grid of Fractions.

    Matrices are immutable by convention: no method mutates ``self``.
    Linear maps are stored with *rows as images*: row ``p`` holds the
    coordinates of the image of the p-th source basis vector, so a row
    vector ``v`` maps to ``v @ M`` and maps compose left to right.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatch(f"expected {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.data = [[frac(x) for x in row] for row in data]

    @classmethod
    def zeros(cls, rows, cols):
        m = object.__new__(cls)
        m.rows, m.cols = rows, cols
        m.data = [[F0] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = F1
        return m

    @classmethod
    def from_rows(cls, rows, cols=None):
        if not rows and cols is None:
            raise ShapeMismatch("cannot infer width of an empty matrix")
        return cls(rows, len(rows), cols if cols is not None else len(rows[0]))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __repr__(self):
        return f"Matrix({self.data!r})"

    def copy_data(self):
        return [row[:] for row in self.data]

    def transpose(self):
        t = Matrix.zeros(self.cols, self.rows)
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                if x:
                    t.data[j][i] = x
        return t

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition needs equal shapes")
        return Matrix.from_rows(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix subtraction needs equal shapes")
        return Matrix.from_rows(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def scale(self, s):
        s = frac(s)
        return Matrix.from_rows([[s * x for x in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch("inner dimensions differ")
        out = Matrix.zeros(self.rows, other.cols)
        odata = other.data
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for k, x in enumerate(row):
                if x:
                    brow = odata[k]
                    for j, y in enumerate(brow):
                        if y:
                            orow[j] += x * y
        return out

    def apply(self, vec):
        """Image of a row vector under this map: ``vec @ self``."""
        if len(vec) != self.rows:
            raise ShapeMismatch("vector length does not match map source")
        out = [F0] * self.cols
        for p, x in enumerate(vec):
            if x:
                row = self.data[p]
                for q, y in enumerate(row):
                    if y:
                        out[q] += x * y
        return out

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def flatten(self):
        """Row-major flattening; the shared map-coordinate convention."""
        out = []
        for row in self.data:
            out.extend(row)
        return out

    def rank(self):
        _, pivots = _rref_rows(self.copy_data(), self.cols)
        return len(pivots)


def unflatten(vec, rows, cols):
    """Inverse of :meth:`Matrix.flatten` for a rows x cols map."""
    if len(vec) != rows * cols:
        raise ShapeMismatch(f"expected {rows * cols} coordinates, got {len(vec)}")
    return Matrix.from_rows([list(vec[i * cols:(i + 1) * cols]) for i in range(rows)], cols=cols)


def rref(m: Matrix) -> Matrix:
    """The unique reduced row echelon form over Q, zero rows dropped.

    >>> rref(Matrix([[2, 4], [1, 2]])).data
    [[Fraction(1, 1), Fraction(2, 1)]]
    >>> rref(Matrix([[1, 2], [3, 4]])) == Matrix.identity(2)
    True
    """
    rows, _ = _rref_rows(m.copy_data(), m.cols)
    return Matrix.from_rows(rows, cols=m.cols)


class Subspace:
    """A subspace of Q^d held by its canonical rref basis.

    The basis rows are nonzero, pivots are 1, pivot columns strictly
    increase and are zero elsewhere, so two subspaces are equal iff their
    bases compare equal entry by entry.

    >>> s = Subspace.from_vectors(3, [[0, 2, 2], [0, 1, 1], [1, 0, 1]])
    >>> s.dim
    2
    >>> s.contains([1, 1, 2])
    True
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis: Matrix):
        if basis.cols != ambient:
            raise DimensionMismatch("basis width differs from ambient dimension")
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def from_vectors(cls, ambient, vectors):
        rows, _ = _rref_rows([list(map(frac, v)) for v in vectors], ambient)
        return cls(ambient, Matrix.from_rows(rows, cols=ambient))

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, Matrix.from_rows([], cols=ambient))

    @classmethod
    def full(cls, ambient):
        return cls(ambient, Matrix.identity(ambient))

    @property
    def dim(self):
        return self.basis.rows

    def basis_rows(self):
        return self.basis.copy_data()

    def pivot_columns(self):
        cols = []
        for row in self.basis.data:
            for j, x in enumerate(row):
                if x:
                    cols.append(j)
                    break
        return cols

    def reduce(self, vec):
        """Residual of ``vec`` after elimination by the basis.

        The residual is zero exactly when ``vec`` lies in the subspace, and
        depends linearly on ``vec``.
        """
        if len(vec) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        v = list(map(frac, vec))
        for row, piv in zip(self.basis.data, self.pivot_columns()):
            f = v[piv]
            if f:
                for j in range(piv, self.ambient):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def contains_subspace(self, other) -> bool:
        if other.ambient != self.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        return all(self.contains(row) for row in other.basis.data)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(m: Matrix) -> Subspace:
    """Solution space of ``m @ v = 0`` in ambient dimension ``m.cols``.

    >>> kernel(Matrix([[1, 1]])).basis.data
    [[Fraction(1, 1), Fraction(-1, 1)]]
    >>> kernel(Matrix.identity(4)).dim
    0
    """
    cols = m.cols
    rows, pivots = _rref_rows(m.copy_data(), cols)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    vectors = []
    for fc in free:
        v = [F0] * cols
        v[fc] = F1
        for row, pc in zip(rows, pivots):
            if row[fc]:
                v[pc] = -row[fc]
        vectors.append(v)
    return Subspace.from_vectors(cols, vectors)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``: the image of v -> m @ v, ambient ``m.rows``."""
    return Subspace.from_vectors(m.rows, m.transpose().data)


def row_space(m: Matrix) -> Subspace:
    """Span of the rows of ``m``; the image of a rows-as-images map."""
    return Subspace.from_vectors(m.cols, m.data)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise DimensionMismatch("ambient dimensions differ")
    return Subspace.from_vectors(a.ambient, a.basis.data + b.basis.data)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, via the kernel of the stacked-coefficient system.

    A vector in the intersection is a combination of a-basis rows that is
    simultaneously a combination of b-basis rows; solving for the paired
    coefficients and projecting onto the a-part yields the intersection.

    >>> e = Matrix.identity(3).data
    >>> s = intersect(Subspace.from_vectors(3, e[:2]), Subspace.from_vectors(3, e[1:]))
    >>> s.basis.data
    [[Fraction(0, 1), Fraction(1, 1), Fraction(0, 1)]]
    """
    if a.ambient != b.ambient:
        raise DimensionMismatch("ambient dimensions differ")
    ka, kb = a.dim, b.dim
    if ka == 0 or kb == 0:
        return Subspace.zero(a.ambient)
    stacked = Matrix.zeros(a.ambient, ka + kb)
    for i, row in enumerate(a.basis.data):
        for j, x in enumerate(row):
            if x:
                stacked.data[j][i] = x
    for i, row in enumerate(b.basis.data):
        for j, x in enumerate(row):
            if x:
                stacked.data[j][ka + i] = -x
    coeffs = kernel(stacked)
    vectors = []
    for crow in coeffs.basis.data:
        v = [F0] * a.ambient
        for i in range(ka):
            c = crow[i]
            if c:
                arow = a.basis.data[i]
                for j, x in enumerate(arow):
                    if x:
                        v[j] += c * x
        vectors.append(v)
    return Subspace.from_vectors(a.ambient, vectors)


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """dim(big/small); raises :class:`NotASubspace` unless small <= big."""
    if big.ambient != small.ambient:
        raise DimensionMismatch("ambient dimensions differ")
    if not big.contains_subspace(small):
        raise NotASubspace("claimed subspace is not contained in the larger space")
    return big.dim - small.dim


def product_subspace(a: Subspace, b: Subspace) -> Subspace:
    """External direct sum a x b inside Q^(da+db), blocks side by side."""
    da, db = a.ambient, b.ambient
    vectors = []
    for row in a.basis.data:
        vectors.append(list(row) + [F0] * db)
    for row in b.basis.data:
        vectors.append([F0] * da + list(row))
    # Block-diagonal stacking of two rref bases is already in rref form.
    return Subspace(da + db, Matrix.from_rows(vectors, cols=da + db))


def solve_right(m: Matrix, rhs) -> "list[Fraction] | None":
    """One solution x of ``m @ x = rhs``, or None if inconsistent."""
    if len(rhs) != m.rows:
        raise ShapeMismatch("right-hand side length differs from row count")
    aug = [row[:] + [frac(b)] for row, b in zip(m.data, rhs)]
    rows, pivots = _rref_rows(aug, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [F0] * m.cols
    for row, pc in zip(rows, pivots):
        x[pc] = row[m.cols]
    return x
