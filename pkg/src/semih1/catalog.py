"""Ready-made small algebras, characters, and basis-change transport.

These are the concrete inputs every test and every random family starts
from: the scalars, full matrix algebras, dual numbers, null algebras,
cyclic-group algebras, the 2x2 upper-triangular algebra, direct sums, and
the change-of-basis maps that make all of them look non-obvious in
coordinates while staying exactly isomorphic.
"""

from .algebra import Algebra, BimoduleAction, Character, ModuleAlgebra, zero_vector
from .errors import ShapeMismatch
from .linalg import F0, F1, Matrix, frac


def field_q(name="Q") -> Algebra:
    return Algebra(name, 1, [[[F1]]])


def matrix_algebra(k, name=None) -> Algebra:
    """M_k over the rationals; basis E_ij at index i*k + j."""
    n = k * k
    mult = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
    for i in range(k):
        for j in range(k):
            for l in range(k):
                for t in range(k):
                    if j == l:
                        mult[i * k + j][l * k + t][i * k + t] = F1
    return Algebra(name or f"M{k}", n, mult)


def dual_numbers(name="D") -> Algebra:
    """Q[t]/(t^2): basis (1, t)."""
    return Algebra(name, 2, [
        [[F1, F0], [F0, F1]],
        [[F0, F1], [F0, F0]],
    ])


def null_algebra(m, name=None) -> Algebra:
    """An m-dimensional algebra with all products zero."""
    return Algebra(name or f"N{m}", m,
                   [[zero_vector(m) for _ in range(m)] for _ in range(m)])


def cyclic_group_algebra(k, name=None) -> Algebra:
    """The group algebra of Z/k: e_i e_j = e_(i+j mod k)."""
    mult = [[zero_vector(k) for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            mult[i][j][(i + j) % k] = F1
    return Algebra(name or f"C{k}", k, mult)


def upper_triangular_2(name="T2") -> Algebra:
    """Upper-triangular 2x2 matrices; basis (E11, E12, E22)."""
    mult = [[zero_vector(3) for _ in range(3)] for _ in range(3)]
    mult[0][0][0] = F1  # E11 E11 = E11
    mult[0][1][1] = F1  # E11 E12 = E12
    mult[1][2][1] = F1  # E12 E22 = E12
    mult[2][2][2] = F1  # E22 E22 = E22
    return Algebra(name, 3, mult)


def direct_sum_algebra(a: Algebra, b: Algebra, name=None) -> Algebra:
    """Componentwise product A (+) B as a single structure tensor."""
    n, m = a.dim, b.dim
    t = n + m
    mult = [[zero_vector(t) for _ in range(t)] for _ in range(t)]
    for i in range(n):
        for j in range(n):
            for k, c in enumerate(a.mult[i][j]):
                mult[i][j][k] = c
    for i in range(m):
        for j in range(m):
            for k, c in enumerate(b.mult[i][j]):
                mult[n + i][n + j][n + k] = c
    return Algebra(name or f"{a.name}+{b.name}", t, mult)


def standard_characters(a: Algebra, family: str):
    """The rational characters we know for each catalog family."""
    if family == "field":
        return [Character(a, [F1])]
    if family == "dual":
        return [Character(a, [F1, F0])]
    if family == "cyclic":
        chars = [Character(a, [F1] * a.dim)]
        if a.dim % 2 == 0:
            chars.append(Character(a, [F1 if i % 2 == 0 else -F1 for i in range(a.dim)]))
        return chars
    if family == "triangular":
        return [Character(a, [F1, F0, F0]), Character(a, [F0, F0, F1])]
    return []


def standard_idempotents(a: Algebra, family: str):
    """Vectors w with w*w = w, used to seed algebra homomorphisms."""
    if family == "field":
        return [[F1]]
    if family == "dual":
        return [[F1, F0]]
    if family == "cyclic":
        return [[F1 if i == 0 else F0 for i in range(a.dim)]]
    if family == "triangular":
        return [[F1, F0, F0], [F0, F0, F1], [F1, F0, F1]]
    if family == "matrix":
        k = int(round(a.dim ** 0.5))
        unit = zero_vector(a.dim)
        for i in range(k):
            unit[i * k + i] = F1
        return [unit]
    return []


def invert(p: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises if singular."""
    n = p.rows
    if p.cols != n:
        raise ShapeMismatch("only square matrices can be inverted")
    aug = [row[:] + [F1 if j == i else F0 for j in range(n)] for i, row in enumerate(p.data)]
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            raise ShapeMismatch("matrix is singular")
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        if pv != 1:
            inv = F1 / pv
            aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    return Matrix.from_rows([row[n:] for row in aug], cols=n)


def change_basis_algebra(a: Algebra, p: Matrix, name=None) -> Algebra:
    """Structure constants of A in the basis f_i = sum_j P[i][j] e_j."""
    if (p.rows, p.cols) != (a.dim, a.dim):
        raise ShapeMismatch("basis change must be square of the algebra dimension")
    pinv = invert(p)
    n = a.dim
    mult = []
    for i in range(n):
        slab = []
        for j in range(n):
            prod = a.product(p.data[i], p.data[j])
            slab.append(pinv.apply(prod))
        mult.append(slab)
    return Algebra(name or f"{a.name}~", n, mult)


def change_basis_action(act: BimoduleAction, pa: Matrix, pu: Matrix) -> BimoduleAction:
    """Transport an action along basis changes of the algebra and the module."""
    if (pa.rows, pa.cols) != (act.algebra_dim, act.algebra_dim):
        raise ShapeMismatch("algebra basis change has the wrong shape")
    if (pu.rows, pu.cols) != (act.module_dim, act.module_dim):
        raise ShapeMismatch("module basis change has the wrong shape")
    pu_inv = invert(pu)
    n, m = act.algebra_dim, act.module_dim
    left = [[pu_inv.apply(act.act_left(pa.data[i], pu.data[p])) for p in range(m)]
            for i in range(n)]
    right = [[pu_inv.apply(act.act_right(pu.data[p], pa.data[i])) for i in range(n)]
             for p in range(m)]
    return BimoduleAction(n, m, left, right)


def change_basis_module(u: ModuleAlgebra, pa: Matrix, pu: Matrix, name=None) -> ModuleAlgebra:
    return ModuleAlgebra(change_basis_algebra(u.algebra, pu, name=name),
                         change_basis_action(u.action, pa, pu))


def change_basis_character(t: Character, new_base: Algebra, p: Matrix) -> Character:
    """The same functional read in the new basis: t'(f_i) = t(P e_i)."""
    return Character(new_base, [t(row) for row in p.data])


def elementary_matrices(rng, n, steps=4):
    """A random product of small elementary row operations and its inverse.

    Entries stay in a small integer/half-integer range so downstream exact
    arithmetic stays fast.
    """
    p = Matrix.identity(n)
    for _ in range(steps):
        op = rng.choice(["add", "swap", "scale"]) if n > 1 else "scale"
        if op == "add":
            i = rng.randrange(n)
            j = rng.randrange(n)
            while j == i:
                j = rng.randrange(n)
            c = frac(rng.choice([-2, -1, 1, 2]))
            rowi = p.data[i]
            rowj = p.data[j]
            p.data[i] = [x + c * y for x, y in zip(rowi, rowj)]
        elif op == "swap":
            i = rng.randrange(n)
            j = rng.randrange(n)
            p.data[i], p.data[j] = p.data[j], p.data[i]
        else:
            i = rng.randrange(n)
            c = frac(rng.choice([-1, 2, -2, 1]))
            p.data[i] = [c * x for x in p.data[i]]
    return p
