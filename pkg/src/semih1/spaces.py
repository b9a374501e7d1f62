"""Solvers for the linear spaces of maps attached to an algebra pair.

All spaces live inside the coordinate space of linear maps from a source to
a target: a map ``f`` with ``f(e_p) = sum_q F[p][q] u_q`` is flattened
row-major, coordinate ``p * target_dim + q``.  This module owns that
convention; every verifier imports its index helpers instead of re-deriving
them.

Computed spaces:

* ``derivation_space``  -- solutions of d(ab) = a d(b) + d(a) b,
* ``inner_space``       -- the image of x -> (a -> ax - xa),
* ``hom_space``         -- two-sided module homomorphisms,
* ``r/c/i_space``       -- the twisting maps r_a(x) = xa - ax, their central
                           slice, and the inner maps of U with vanishing
                           A-commutator.
"""

from .algebra import (
    Algebra,
    ModuleAlgebra,
    center,
    regular_action,
)
from .errors import InternalInvariantViolation, NotADerivation, ShapeMismatch
from .linalg import (
    F0,
    F1,
    Matrix,
    Subspace,
    kernel,
    row_space,
    solve_right,
    unflatten,
)


def map_index(p, q, target_dim):
    """Flat coordinate of the (source p, target q) matrix entry."""
    return p * target_dim + q


class LinearMapSpace:
    """A subspace of the maps source -> target, flattened row-major."""

    __slots__ = ("source_dim", "target_dim", "space")

    def __init__(self, source_dim, target_dim, space: Subspace):
        if space.ambient != source_dim * target_dim:
            raise ShapeMismatch("ambient dimension is not source_dim * target_dim")
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.space = space

    @property
    def dim(self):
        return self.space.dim

    def basis_maps(self):
        return [unflatten(row, self.source_dim, self.target_dim)
                for row in self.space.basis.data]

    def contains_map(self, m: Matrix) -> bool:
        if (m.rows, m.cols) != (self.source_dim, self.target_dim):
            raise ShapeMismatch("map has the wrong shape for this space")
        return self.space.contains(m.flatten())

    def __repr__(self):
        return (f"LinearMapSpace({self.source_dim}->{self.target_dim}, "
                f"dim={self.dim})")


def _action_of(m):
    return m.action if isinstance(m, ModuleAlgebra) else m


def derivation_space(a: Algebra, m) -> LinearMapSpace:
    """All d: A -> M with d(ab) = a.d(b) + d(a).b, as a kernel.

    In finite dimension every derivation is continuous, so this is the full
    space Z1(A, M) with no topological qualifier.
    """
    act = _action_of(m)
    if act.algebra_dim != a.dim:
        raise ShapeMismatch("module is not over the given algebra")
    n, md = a.dim, act.module_dim
    amb = n * md
    L, R = act.left, act.right
    rows = []
    for i in range(n):
        for j in range(n):
            cij = a.mult[i][j]
            for q in range(md):
                row = [F0] * amb
                for k, c in enumerate(cij):
                    if c:
                        row[map_index(k, q, md)] += c
                for p in range(md):
                    c = L[i][p][q]
                    if c:
                        row[map_index(j, p, md)] -= c
                    c = R[p][j][q]
                    if c:
                        row[map_index(i, p, md)] -= c
                rows.append(row)
    if not rows:
        return LinearMapSpace(n, md, Subspace.full(amb))
    return LinearMapSpace(n, md, kernel(Matrix.from_rows(rows, cols=amb)))


def leibniz_defect(d: Matrix, a: Algebra, m):
    """First basis pair (i, j) where d fails the derivation law, else None."""
    act = _action_of(m)
    if (d.rows, d.cols) != (a.dim, act.module_dim):
        raise ShapeMismatch("candidate map has the wrong shape")
    n = a.dim
    for i in range(n):
        ei = [F1 if k == i else F0 for k in range(n)]
        for j in range(n):
            ej = [F1 if k == j else F0 for k in range(n)]
            lhs = d.apply(a.mult[i][j])
            rhs = act.act_left(ei, d.data[j])
            for q, c in enumerate(act.act_right(d.data[i], ej)):
                rhs[q] += c
            if lhs != rhs:
                return (i, j)
    return None


def _inner_generators(a: Algebra, m) -> Matrix:
    """Rows-as-images matrix of x -> (a -> ax - xa) from M into map space."""
    act = _action_of(m)
    n, md = a.dim, act.module_dim
    gen = Matrix.zeros(md, n * md)
    for p in range(md):
        row = gen.data[p]
        for i in range(n):
            for q in range(md):
                c = act.left[i][p][q] - act.right[p][i][q]
                if c:
                    row[map_index(i, q, md)] = c
    return gen


def inner_map(x, a: Algebra, m) -> Matrix:
    """The matrix of a -> ax - xa for a module element x."""
    act = _action_of(m)
    n, md = a.dim, act.module_dim
    if len(x) != md:
        raise ShapeMismatch("module element has the wrong length")
    out = Matrix.zeros(n, md)
    for i in range(n):
        ei = [F1 if k == i else F0 for k in range(n)]
        left = act.act_left(ei, x)
        right = act.act_right(x, ei)
        out.data[i] = [lv - rv for lv, rv in zip(left, right)]
    return out


def inner_space(a: Algebra, m) -> LinearMapSpace:
    """N1(A, M): the span of the inner maps, as an image."""
    act = _action_of(m)
    return LinearMapSpace(a.dim, act.module_dim, row_space(_inner_generators(a, m)))


def h1_dim(a: Algebra, m=None) -> int:
    """dim Z1(A,M) - dim N1(A,M); with m omitted, coefficients in A itself."""
    if m is None:
        m = regular_action(a)
    z = derivation_space(a, m)
    inner = inner_space(a, m)
    if not z.space.contains_subspace(inner.space):
        raise InternalInvariantViolation("inner maps escaped the derivation space")
    return z.dim - inner.dim


def hom_space(a: Algebra, u, v) -> LinearMapSpace:
    """Hom_A(U, V): maps with f(a.x) = a.f(x) and f(x.a) = f(x).a."""
    ua, va = _action_of(u), _action_of(v)
    if ua.algebra_dim != a.dim or va.algebra_dim != a.dim:
        raise ShapeMismatch("both modules must be over the given algebra")
    mu, mv = ua.module_dim, va.module_dim
    amb = mu * mv
    rows = []
    for i in range(a.dim):
        for p in range(mu):
            for q in range(mv):
                row = [F0] * amb
                for r in range(mu):
                    c = ua.left[i][p][r]
                    if c:
                        row[map_index(r, q, mv)] += c
                for r in range(mv):
                    c = va.left[i][r][q]
                    if c:
                        row[map_index(p, r, mv)] -= c
                rows.append(row)
                row = [F0] * amb
                for r in range(mu):
                    c = ua.right[p][i][r]
                    if c:
                        row[map_index(r, q, mv)] += c
                for r in range(mv):
                    c = va.right[r][i][q]
                    if c:
                        row[map_index(p, r, mv)] -= c
                rows.append(row)
    if not rows:
        return LinearMapSpace(mu, mv, Subspace.full(amb))
    return LinearMapSpace(mu, mv, kernel(Matrix.from_rows(rows, cols=amb)))


def r_map(a_elt, u: ModuleAlgebra) -> Matrix:
    """The matrix of x -> x.a - a.x on U for an algebra element a."""
    act = u.action
    if len(a_elt) != act.algebra_dim:
        raise ShapeMismatch("algebra element has the wrong length")
    md = act.module_dim
    out = Matrix.zeros(md, md)
    for p in range(md):
        xp = [F1 if k == p else F0 for k in range(md)]
        right = act.act_right(xp, a_elt)
        left = act.act_left(a_elt, xp)
        out.data[p] = [rv - lv for rv, lv in zip(right, left)]
    return out


def r_space(a: Algebra, u: ModuleAlgebra) -> LinearMapSpace:
    """R_A(U): the span of the maps r_a over a in A."""
    md = u.dim
    rows = []
    for i in range(a.dim):
        ei = [F1 if k == i else F0 for k in range(a.dim)]
        rows.append(r_map(ei, u).flatten())
    return LinearMapSpace(md, md, Subspace.from_vectors(md * md, rows))


def c_space(a: Algebra, u: ModuleAlgebra) -> LinearMapSpace:
    """C_A(U): the maps r_a with a central in A."""
    md = u.dim
    rows = [r_map(z, u).flatten() for z in center(a).basis.data]
    return LinearMapSpace(md, md, Subspace.from_vectors(md * md, rows))


def u_inner_map(x, u_alg: Algebra) -> Matrix:
    """The inner map y -> yx - xy of the algebra U itself."""
    return inner_map(x, u_alg, regular_action(u_alg))


def i_space(a: Algebra, u: ModuleAlgebra) -> LinearMapSpace:
    """I(U): inner maps of U induced by x whose A-commutator map vanishes."""
    md = u.dim
    quiet = kernel(_inner_generators(a, u.action).transpose())
    rows = [u_inner_map(x, u.algebra).flatten() for x in quiet.basis.data]
    return LinearMapSpace(md, md, Subspace.from_vectors(md * md, rows))


def commutant_in_module(a: Algebra, u) -> Subspace:
    """{x in U : a.x = x.a for all a}: the parameter space behind I(U)."""
    return kernel(_inner_generators(a, _action_of(u)).transpose())


def inner_witness(d: Matrix, a: Algebra, m):
    """Some x with (a -> ax - xa) = d, or None when d is not inner.

    Witnesses are not unique whenever the commutant is nontrivial; callers
    must verify a returned witness, never compare two of them.
    """
    defect = leibniz_defect(d, a, m)
    if defect is not None:
        raise NotADerivation(f"map violates the derivation law at basis pair {defect}")
    gen = _inner_generators(a, m)
    return solve_right(gen.transpose(), d.flatten())
