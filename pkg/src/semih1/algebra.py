"""Structure-constant algebras, bimodules, and characters.

An :class:`Algebra` of dimension n is the tensor ``mult[i][j]`` giving the
coordinates of ``e_i * e_j``.  A :class:`BimoduleAction` adds left/right
action tensors of an algebra on a module, and a :class:`ModuleAlgebra`
couples a module's own multiplication with such an action.  Validation
checks every axiom exactly and reports the basis triple that breaks a
failing one, so downstream solvers may assume the axioms hold.
"""

from .errors import (
    NotSubmodule,
    ShapeMismatch,
    ValidationFailed,
)
from .linalg import F0, F1, Matrix, Subspace, frac, kernel

def zero_vector(n):
    return [F0] * n


def add_into(acc, vec, scale=F1):
    for i, x in enumerate(vec):
        if x:
            acc[i] += scale * x
    return acc


def vectors_equal(a, b):
    return all(x == y for x, y in zip(a, b))


def _coerce_tensor(tensor, d0, d1, d2, what):
    if len(tensor) != d0:
        raise ShapeMismatch(f"{what}: expected {d0} slices, got {len(tensor)}")
    out = []
    for i, slab in enumerate(tensor):
        if len(slab) != d1:
            raise ShapeMismatch(f"{what}[{i}]: expected {d1} rows, got {len(slab)}")
        rows = []
        for j, row in enumerate(slab):
            if len(row) != d2:
                raise ShapeMismatch(f"{what}[{i}][{j}]: expected {d2} entries")
            rows.append([frac(x) for x in row])
        out.append(rows)
    return out


class ValidationReport:
    """Per-axiom failure list; empty means every checked axiom holds."""

    def __init__(self, subject):
        self.subject = subject
        self.failures = []

    def add(self, axiom, witness, lhs=None, rhs=None):
        self.failures.append({"axiom": axiom, "witness": witness, "lhs": lhs, "rhs": rhs})

    @property
    def ok(self):
        return not self.failures

    def describe(self):
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.failures)} axiom violation(s)"]
        for f in self.failures[:20]:
            lines.append(f"  {f['axiom']} fails at {f['witness']}")
        return "\n".join(lines)

    def raise_if_failed(self):
        if not self.ok:
            raise ValidationFailed(self.describe(), report=self)


class Algebra:
    """A finite-dimensional algebra given by structure constants.

    ``mult[i][j]`` is the coordinate vector of ``e_i * e_j``; associativity
    is an invariant checked by :func:`validate_algebra`, not assumed at
    construction time.
    """

    __slots__ = ("name", "dim", "mult")

    def __init__(self, name, dim, mult):
        self.name = name
        self.dim = dim
        self.mult = _coerce_tensor(mult, dim, dim, dim, f"mult tensor of {name}")

    def product(self, u, v):
        """Bilinear extension of the basis products to coordinate vectors."""
        out = zero_vector(self.dim)
        for i, x in enumerate(u):
            if not x:
                continue
            mi = self.mult[i]
            for j, y in enumerate(v):
                if y:
                    add_into(out, mi[j], x * y)
        return out

    def is_commutative(self):
        return all(
            vectors_equal(self.mult[i][j], self.mult[j][i])
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim})"


class BimoduleAction:
    """Left/right action tensors of an algebra A on a module U.

    ``left[i][p]`` is the vector of ``e_i . u_p`` and ``right[p][i]`` the
    vector of ``u_p . e_i``; the three bimodule axioms are checked by
    :func:`validate_module`.
    """

    __slots__ = ("algebra_dim", "module_dim", "left", "right")

    def __init__(self, algebra_dim, module_dim, left, right):
        self.algebra_dim = algebra_dim
        self.module_dim = module_dim
        self.left = _coerce_tensor(left, algebra_dim, module_dim, module_dim, "left action")
        self.right = _coerce_tensor(right, module_dim, algebra_dim, module_dim, "right action")

    @classmethod
    def trivial(cls, algebra_dim, module_dim):
        zl = [[zero_vector(module_dim) for _ in range(module_dim)] for _ in range(algebra_dim)]
        zr = [[zero_vector(module_dim) for _ in range(algebra_dim)] for _ in range(module_dim)]
        return cls(algebra_dim, module_dim, zl, zr)

    def act_left(self, avec, xvec):
        out = zero_vector(self.module_dim)
        for i, a in enumerate(avec):
            if not a:
                continue
            li = self.left[i]
            for p, x in enumerate(xvec):
                if x:
                    add_into(out, li[p], a * x)
        return out

    def act_right(self, xvec, avec):
        out = zero_vector(self.module_dim)
        for p, x in enumerate(xvec):
            if not x:
                continue
            rp = self.right[p]
            for i, a in enumerate(avec):
                if a:
                    add_into(out, rp[i], x * a)
        return out

    def is_symmetric(self):
        """True when a.x = x.a on every basis pair (a commutative bimodule)."""
        return all(
            vectors_equal(self.left[i][p], self.right[p][i])
            for i in range(self.algebra_dim)
            for p in range(self.module_dim)
        )


def regular_action(a: Algebra) -> BimoduleAction:
    """A acting on itself by multiplication on both sides."""
    left = [[a.mult[i][p] for p in range(a.dim)] for i in range(a.dim)]
    right = [[a.mult[p][i] for i in range(a.dim)] for p in range(a.dim)]
    return BimoduleAction(a.dim, a.dim, left, right)


class ModuleAlgebra:
    """An algebra U together with a compatible A-bimodule action on it."""

    __slots__ = ("algebra", "action")

    def __init__(self, algebra: Algebra, action: BimoduleAction):
        if action.module_dim != algebra.dim:
            raise ShapeMismatch("action module dimension differs from algebra dimension")
        self.algebra = algebra
        self.action = action

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def name(self):
        return self.algebra.name

    def __repr__(self):
        return f"ModuleAlgebra({self.algebra.name!r}, dim={self.dim})"


def regular_module(a: Algebra) -> ModuleAlgebra:
    """A as a module-algebra over itself."""
    return ModuleAlgebra(a, regular_action(a))


class Character:
    """A linear functional on an algebra, candidate multiplicative and nonzero."""

    __slots__ = ("base", "values")

    def __init__(self, base: Algebra, values):
        if len(values) != base.dim:
            raise ShapeMismatch("character length differs from algebra dimension")
        self.base = base
        self.values = [frac(v) for v in values]

    def __call__(self, vec):
        return sum((v * x for v, x in zip(self.values, vec)), F0)


def validate_character(t: Character) -> bool:
    """True iff t is nonzero and multiplicative on all basis products."""
    if not any(t.values):
        return False
    a = t.base
    for i in range(a.dim):
        for j in range(a.dim):
            if t(a.mult[i][j]) != t.values[i] * t.values[j]:
                return False
    return True


class CornerModule:
    """An (A,B)-bimodule: A acts on the left, B on the right.

    This is the corner block of a block upper-triangular algebra; validation
    checks (aa')m = a(a'm), m(bb') = (mb)b', and (am)b = a(mb).
    """

    __slots__ = ("a_dim", "b_dim", "dim", "left", "right")

    def __init__(self, a_dim, b_dim, dim, left, right):
        self.a_dim = a_dim
        self.b_dim = b_dim
        self.dim = dim
        self.left = _coerce_tensor(left, a_dim, dim, dim, "corner left action")
        self.right = _coerce_tensor(right, dim, b_dim, dim, "corner right action")


def validate_corner(m: CornerModule, a: Algebra, b: Algebra) -> ValidationReport:
    report = ValidationReport(f"corner module over ({a.name}, {b.name})")
    if m.a_dim != a.dim or m.b_dim != b.dim:
        raise ShapeMismatch("corner module dimensions do not match the algebras")
    d = m.dim
    for i in range(a.dim):
        for j in range(a.dim):
            for p in range(d):
                lhs = zero_vector(d)
                for k, c in enumerate(a.mult[i][j]):
                    if c:
                        add_into(lhs, m.left[k][p], c)
                rhs = zero_vector(d)
                for q, c in enumerate(m.left[j][p]):
                    if c:
                        add_into(rhs, m.left[i][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(aa')m=a(a'm)", (i, j, p))
    for p in range(d):
        for i in range(b.dim):
            for j in range(b.dim):
                lhs = zero_vector(d)
                for k, c in enumerate(b.mult[i][j]):
                    if c:
                        add_into(lhs, m.right[p][k], c)
                rhs = zero_vector(d)
                for q, c in enumerate(m.right[p][i]):
                    if c:
                        add_into(rhs, m.right[q][j], c)
                if not vectors_equal(lhs, rhs):
                    report.add("m(bb')=(mb)b'", (p, i, j))
    for i in range(a.dim):
        for p in range(d):
            for j in range(b.dim):
                lhs = zero_vector(d)
                for q, c in enumerate(m.left[i][p]):
                    if c:
                        add_into(lhs, m.right[q][j], c)
                rhs = zero_vector(d)
                for q, c in enumerate(m.right[p][j]):
                    if c:
                        add_into(rhs, m.left[i][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(am)b=a(mb)", (i, p, j))
    return report


def validate_algebra(a: Algebra) -> ValidationReport:
    """List every basis triple (i,j,k) where associativity fails."""
    report = ValidationReport(f"algebra {a.name}")
    n = a.dim
    for i in range(n):
        for j in range(n):
            cij = a.mult[i][j]
            for k in range(n):
                lhs = a.product(cij, _basis(n, k))
                rhs = a.product(_basis(n, i), a.mult[j][k])
                if not vectors_equal(lhs, rhs):
                    report.add("(ab)c=a(bc)", (i, j, k), lhs, rhs)
    return report


def _basis(n, i):
    v = zero_vector(n)
    v[i] = F1
    return v


def validate_module(u: ModuleAlgebra, a: Algebra) -> ValidationReport:
    """Check the three bimodule axioms and the three compatibility laws.

    Compatibility ties the action to U's own multiplication:
    (a.x)y = a.(xy), (xy).a = x(y.a), and (x.a)y = x(a.y).
    """
    act = u.action
    if act.algebra_dim != a.dim:
        raise ShapeMismatch("action algebra dimension differs from base algebra")
    report = ValidationReport(f"module {u.name} over {a.name}")
    n, m = a.dim, u.dim
    d = u.algebra.mult
    L, R = act.left, act.right
    for i in range(n):
        for j in range(n):
            cij = a.mult[i][j]
            for p in range(m):
                lhs = zero_vector(m)
                for k, c in enumerate(cij):
                    if c:
                        add_into(lhs, L[k][p], c)
                rhs = zero_vector(m)
                for q, c in enumerate(L[j][p]):
                    if c:
                        add_into(rhs, L[i][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(ab)x=a(bx)", (i, j, p))
                lhs = zero_vector(m)
                for k, c in enumerate(cij):
                    if c:
                        add_into(lhs, R[p][k], c)
                rhs = zero_vector(m)
                for q, c in enumerate(R[p][i]):
                    if c:
                        add_into(rhs, R[q][j], c)
                if not vectors_equal(lhs, rhs):
                    report.add("x(ab)=(xa)b", (p, i, j))
    for i in range(n):
        for p in range(m):
            for j in range(n):
                lhs = zero_vector(m)
                for q, c in enumerate(L[i][p]):
                    if c:
                        add_into(lhs, R[q][j], c)
                rhs = zero_vector(m)
                for q, c in enumerate(R[p][j]):
                    if c:
                        add_into(rhs, L[i][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(ax)b=a(xb)", (i, p, j))
    for i in range(n):
        for p in range(m):
            for r in range(m):
                lhs = zero_vector(m)
                for q, c in enumerate(L[i][p]):
                    if c:
                        add_into(lhs, d[q][r], c)
                rhs = zero_vector(m)
                for s, c in enumerate(d[p][r]):
                    if c:
                        add_into(rhs, L[i][s], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(a.x)y=a.(xy)", (i, p, r))
                lhs = zero_vector(m)
                for s, c in enumerate(d[p][r]):
                    if c:
                        add_into(lhs, R[s][i], c)
                rhs = zero_vector(m)
                for q, c in enumerate(R[r][i]):
                    if c:
                        add_into(rhs, d[p][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(xy).a=x(y.a)", (p, r, i))
                lhs = zero_vector(m)
                for q, c in enumerate(R[p][i]):
                    if c:
                        add_into(lhs, d[q][r], c)
                rhs = zero_vector(m)
                for q, c in enumerate(L[i][r]):
                    if c:
                        add_into(rhs, d[p][q], c)
                if not vectors_equal(lhs, rhs):
                    report.add("(x.a)y=x(a.y)", (p, i, r))
    return report


def annihilator_in_algebra(a: Algebra, u) -> Subspace:
    """ann_A U = {a in A : a.U = U.a = 0}, computed as a kernel."""
    act = u.action if isinstance(u, ModuleAlgebra) else u
    n, m = act.algebra_dim, act.module_dim
    rows = []
    for p in range(m):
        for q in range(m):
            rows.append([act.left[i][p][q] for i in range(n)])
            rows.append([act.right[p][i][q] for i in range(n)])
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix.from_rows(rows, cols=n))


def annihilator_in_module(u: ModuleAlgebra) -> Subspace:
    """ann_U U = {x in U : xU = Ux = 0} for U's own multiplication."""
    m = u.dim
    d = u.algebra.mult
    rows = []
    for p in range(m):
        for q in range(m):
            rows.append([d[r][p][q] for r in range(m)])
            rows.append([d[p][r][q] for r in range(m)])
    if not rows:
        return Subspace.full(m)
    return kernel(Matrix.from_rows(rows, cols=m))


def is_sub_bimodule(n_space: Subspace, act: BimoduleAction) -> bool:
    """True when the subspace is closed under both actions of every basis element."""
    for row in n_space.basis.data:
        for i in range(act.algebra_dim):
            ai = [F1 if k == i else F0 for k in range(act.algebra_dim)]
            if not n_space.contains(act.act_left(ai, row)):
                return False
            if not n_space.contains(act.act_right(row, ai)):
                return False
    return True


def relative_annihilator(n_space: Subspace, a: Algebra, u) -> Subspace:
    """(N:U)_A = {a in A : a.U <= N and U.a <= N} for a sub-bimodule N.

    With N = 0 this reduces to ann_A U.
    """
    act = u.action if isinstance(u, ModuleAlgebra) else u
    if n_space.ambient != act.module_dim:
        raise ShapeMismatch("submodule lives in the wrong ambient dimension")
    if not is_sub_bimodule(n_space, act):
        raise NotSubmodule("the given subspace is not closed under the actions")
    n, m = act.algebra_dim, act.module_dim
    rows = []
    for p in range(m):
        # residual of e_i.u_p (resp. u_p.e_i) modulo N, linear in the algebra slot
        left_res = [n_space.reduce(act.left[i][p]) for i in range(n)]
        right_res = [n_space.reduce(act.right[p][i]) for i in range(n)]
        for q in range(m):
            rows.append([left_res[i][q] for i in range(n)])
            rows.append([right_res[i][q] for i in range(n)])
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix.from_rows(rows, cols=n))


def center(a: Algebra) -> Subspace:
    """Z(A) = {z : z e_i = e_i z for every basis element}."""
    n = a.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append([a.mult[j][i][k] - a.mult[i][j][k] for j in range(n)])
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix.from_rows(rows, cols=n))


def span_of_products(a: Algebra) -> Subspace:
    """The linear span of all basis products e_i e_j (the span of A^2)."""
    return Subspace.from_vectors(a.dim, [a.mult[i][j] for i in range(a.dim) for j in range(a.dim)])


def span_left_action(act: BimoduleAction) -> Subspace:
    """Span of A.U inside U."""
    return Subspace.from_vectors(
        act.module_dim,
        [act.left[i][p] for i in range(act.algebra_dim) for p in range(act.module_dim)],
    )


def span_right_action(act: BimoduleAction) -> Subspace:
    """Span of U.A inside U."""
    return Subspace.from_vectors(
        act.module_dim,
        [act.right[p][i] for i in range(act.algebra_dim) for p in range(act.module_dim)],
    )
