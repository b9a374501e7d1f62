"""Semidirect products and their named special cases.

Every construction returns a :class:`SemidirectAlgebra`: the total algebra
on A x U with multiplication

    (a, x)(b, y) = (ab, a.y + x.b + xy),

together with the factors it was built from.  The basis convention is fixed
globally: A occupies coordinates 0..n-1 and U occupies n..n+m-1; block
extraction everywhere downstream relies on it.
"""

from .algebra import (
    Algebra,
    BimoduleAction,
    Character,
    CornerModule,
    ModuleAlgebra,
    add_into,
    regular_action,
    validate_character,
    validate_corner,
    validate_module,
    vectors_equal,
    zero_vector,
)
from .errors import (
    GammaIdentityFailed,
    InvalidCharacter,
    NotBimodule,
    NotHomomorphism,
    ShapeMismatch,
)
from .linalg import F0, F1, Matrix


class SemidirectAlgebra:
    """A semidirect product with its factor metadata.

    ``total`` is the (n+m)-dimensional algebra; ``part_a`` and ``part_u``
    are the factors, kept so block extraction never has to re-discover the
    splitting.  ``character`` is set for scaled-action (Lau-type) products
    and ``alpha`` for homomorphism-twisted ones.
    """

    __slots__ = ("total", "part_a", "part_u", "kind", "character", "alpha", "_memo")

    def __init__(self, total, part_a, part_u, kind, character=None, alpha=None):
        self.total = total
        self.part_a = part_a
        self.part_u = part_u
        self.kind = kind
        self.character = character
        self.alpha = alpha
        self._memo = {}

    @property
    def n(self):
        return self.part_a.dim

    @property
    def m(self):
        return self.part_u.dim

    @property
    def dim(self):
        return self.total.dim

    @property
    def name(self):
        return self.total.name

    def action_is_trivial(self):
        act = self.part_u.action
        return all(
            not c for block in (act.left, act.right) for slab in block for row in slab for c in row
        )

    def u_square_is_zero(self):
        return all(not c for slab in self.part_u.algebra.mult for row in slab for c in row)

    def __repr__(self):
        return f"SemidirectAlgebra({self.name!r}, n={self.n}, m={self.m}, kind={self.kind!r})"


def semidirect(a: Algebra, u: ModuleAlgebra, name=None, kind="semidirect",
               character=None, alpha=None, validate=True) -> SemidirectAlgebra:
    """Build A x| U from a validated module-algebra U over A.

    The result's A-block is closed under multiplication and the U-block is
    a two-sided ideal; associativity of the total follows from the factor
    axioms and is re-asserted by the test suite rather than recomputed here.
    """
    if validate:
        validate_module(u, a).raise_if_failed()
    n, m = a.dim, u.dim
    t = n + m
    act = u.action
    d = u.algebra.mult
    mult = [[zero_vector(t) for _ in range(t)] for _ in range(t)]
    for i in range(n):
        for j in range(n):
            row = mult[i][j]
            for k, c in enumerate(a.mult[i][j]):
                row[k] = c
    for i in range(n):
        for q in range(m):
            row = mult[i][n + q]
            for k, c in enumerate(act.left[i][q]):
                row[n + k] = c
    for p in range(m):
        for j in range(n):
            row = mult[n + p][j]
            for k, c in enumerate(act.right[p][j]):
                row[n + k] = c
    for p in range(m):
        for q in range(m):
            row = mult[n + p][n + q]
            for k, c in enumerate(d[p][q]):
                row[n + k] = c
    if name is None:
        name = f"sd({a.name},{u.name})"
    total = Algebra(name, t, mult)
    return SemidirectAlgebra(total, a, u, kind, character=character, alpha=alpha)


def direct_product(a: Algebra, u: Algebra, name=None) -> SemidirectAlgebra:
    """A x U with trivial actions: multiplication is componentwise."""
    mod = ModuleAlgebra(u, BimoduleAction.trivial(a.dim, u.dim))
    return semidirect(a, mod, name=name or f"dp({a.name},{u.name})", kind="direct")


def module_extension(a: Algebra, action: BimoduleAction, u_name=None, name=None,
                     kind="module-extension") -> SemidirectAlgebra:
    """T(A,U): the semidirect product with the U-multiplication forced to zero."""
    if action.algebra_dim != a.dim:
        raise ShapeMismatch("action is not over the given algebra")
    m = action.module_dim
    null_u = Algebra(u_name or "U0", m,
                     [[zero_vector(m) for _ in range(m)] for _ in range(m)])
    mod = ModuleAlgebra(null_u, action)
    return semidirect(a, mod, name=name or f"T({a.name},{null_u.name})", kind=kind)


def triangular(a: Algebra, b: Algebra, corner: CornerModule, name=None) -> SemidirectAlgebra:
    """The block upper-triangular algebra on (A, M, B), as T(AxB, M).

    M becomes an (AxB)-bimodule via (a,b).m = a.m and m.(a,b) = m.b.
    """
    report = validate_corner(corner, a, b)
    if not report.ok:
        raise NotBimodule(report.describe())
    base = direct_product(a, b).total
    n, nb, md = a.dim, b.dim, corner.dim
    left = [[zero_vector(md) for _ in range(md)] for _ in range(n + nb)]
    right = [[zero_vector(md) for _ in range(n + nb)] for _ in range(md)]
    for i in range(n):
        for p in range(md):
            left[i][p] = list(corner.left[i][p])
    for p in range(md):
        for j in range(nb):
            right[p][n + j] = list(corner.right[p][j])
    action = BimoduleAction(n + nb, md, left, right)
    return module_extension(base, action, u_name="M",
                            name=name or f"tri({a.name},{b.name})", kind="triangular")


def theta_lau(a: Algebra, u: Algebra, t: Character, name=None,
              kind="theta-lau") -> SemidirectAlgebra:
    """The scaled-action product: a.x = x.a = t(a) x for a character t."""
    if t.base is not a and t.base.dim != a.dim:
        raise ShapeMismatch("character is defined over a different algebra")
    if not validate_character(Character(a, t.values)):
        raise InvalidCharacter("character must be nonzero and multiplicative")
    char = Character(a, t.values)
    m = u.dim
    left = [[[char.values[i] if q == p else F0 for q in range(m)] for p in range(m)]
            for i in range(a.dim)]
    right = [[[char.values[i] if q == p else F0 for q in range(m)] for i in range(a.dim)]
             for p in range(m)]
    mod = ModuleAlgebra(u, BimoduleAction(a.dim, m, left, right))
    return semidirect(a, mod, name=name or f"lau({a.name},{u.name})",
                      kind=kind, character=char)


def unitization(u: Algebra, name=None) -> SemidirectAlgebra:
    """Adjoin a unit: the scaled-action product of the scalars with U."""
    scalars = Algebra("Q", 1, [[[F1]]])
    return theta_lau(scalars, u, Character(scalars, [F1]),
                     name=name or f"unit({u.name})", kind="unitization")


def _check_algebra_hom(a: Algebra, u: Algebra, alpha: Matrix):
    if (alpha.rows, alpha.cols) != (a.dim, u.dim):
        raise ShapeMismatch("homomorphism matrix must be dim(A) x dim(U)")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = alpha.apply(a.mult[i][j])
            rhs = u.product(alpha.data[i], alpha.data[j])
            if not vectors_equal(lhs, rhs):
                raise NotHomomorphism(f"alpha(e{i}*e{j}) != alpha(e{i})alpha(e{j})")


def alpha_product(a: Algebra, u: Algebra, alpha: Matrix, name=None) -> SemidirectAlgebra:
    """A x|_alpha U: the action a.x = alpha(a)x, x.a = x alpha(a) in U."""
    _check_algebra_hom(a, u, alpha)
    m = u.dim
    basis = [[F1 if r == p else F0 for r in range(m)] for p in range(m)]
    left = [[u.product(alpha.data[i], basis[p]) for p in range(m)] for i in range(a.dim)]
    right = [[u.product(basis[p], alpha.data[i]) for i in range(a.dim)] for p in range(m)]
    mod = ModuleAlgebra(u, BimoduleAction(a.dim, m, left, right))
    return semidirect(a, mod, name=name or f"ad({a.name},{u.name})",
                      kind="alpha", alpha=alpha)


def alpha_iso(a: Algebra, u: Algebra, alpha: Matrix) -> Matrix:
    """The map (a, x) -> (a, x - alpha(a)), a bijection of A x U onto A x|_alpha U.

    Transporting the direct-product multiplication through it lands exactly
    on the alpha-product multiplication; the verifier checks that entrywise.
    """
    _check_algebra_hom(a, u, alpha)
    n, m = a.dim, u.dim
    iso = Matrix.zeros(n + m, n + m)
    for i in range(n):
        iso.data[i][i] = F1
        for q in range(m):
            iso.data[i][n + q] = -alpha.data[i][q]
    for p in range(m):
        iso.data[n + p][n + p] = F1
    return iso


def fixture_nonzero_tau1(b: Algebra):
    """A module extension carrying a derivation whose U->A corner is nonzero.

    Take A = T(B,B) acting on U = B through the subalgebra copy only, and
    D((a,b'),x) = ((0,x),0).  D satisfies the derivation law on T(A,U) even
    though its tau1 block is nonzero, so D is not inner.

    Returns the product together with the full matrix of D.
    """
    n = b.dim
    base = module_extension(b, regular_action(b), u_name=b.name, name=f"T({b.name},{b.name})")
    ta = base.total  # dim 2n; first copy is the subalgebra, second the ideal
    left = [[zero_vector(n) for _ in range(n)] for _ in range(2 * n)]
    right = [[zero_vector(n) for _ in range(2 * n)] for _ in range(n)]
    for i in range(n):
        for p in range(n):
            left[i][p] = list(b.mult[i][p])
    for p in range(n):
        for i in range(n):
            right[p][i] = list(b.mult[p][i])
    action = BimoduleAction(2 * n, n, left, right)
    prod = semidirect(
        a=ta,
        u=ModuleAlgebra(Algebra(b.name, n, [[zero_vector(n) for _ in range(n)] for _ in range(n)]),
                        action),
        name=f"T(T({b.name},{b.name}),{b.name})",
        kind="module-extension",
    )
    t = prod.dim
    d = Matrix.zeros(t, t)
    for p in range(n):
        # tau1(u_p) = (0, u_p): the ideal copy of B inside A sits at columns n..2n-1
        d.data[2 * n + p][n + p] = F1
    return prod, d


def fixture_paired_tau_blocks(a: Algebra, c_action: BimoduleAction, gamma: Matrix):
    """A semidirect product with a derivation whose tau1 and tau2 cancel in pairs.

    Inputs: an A-bimodule C and an A-bimodule homomorphism gamma: C -> A
    satisfying c.gamma(c') + gamma(c).c' = 0 for all c, c'.  The product is
    A x| U with U = A x C, multiplication (x,y)(x',y') = (xx', 0), and the
    returned map D has blocks tau1((x,y)) = gamma(y) and
    tau2((x,y)) = (-gamma(y), 0); it passes the derivation test whenever the
    pairing identity holds.
    """
    n = a.dim
    nc = c_action.module_dim
    if c_action.algebra_dim != n:
        raise ShapeMismatch("C must be a bimodule over the given algebra")
    if (gamma.rows, gamma.cols) != (nc, n):
        raise ShapeMismatch("gamma must be a dim(C) x dim(A) matrix")
    basis_c = [[F1 if r == p else F0 for r in range(nc)] for p in range(nc)]
    for i in range(n):
        ei = [F1 if k == i else F0 for k in range(n)]
        for p in range(nc):
            if not vectors_equal(gamma.apply(c_action.left[i][p]), a.product(ei, gamma.data[p])):
                raise NotHomomorphism(f"gamma(a.c) != a gamma(c) at (a,c)=({i},{p})")
            if not vectors_equal(gamma.apply(c_action.right[p][i]), a.product(gamma.data[p], ei)):
                raise NotHomomorphism(f"gamma(c.a) != gamma(c) a at (c,a)=({p},{i})")
    for p in range(nc):
        for q in range(nc):
            pair = c_action.act_right(basis_c[p], gamma.data[q])
            add_into(pair, c_action.act_left(gamma.data[p], basis_c[q]))
            if any(pair):
                raise GammaIdentityFailed(
                    f"c.gamma(c') + gamma(c).c' != 0 at (c,c')=({p},{q})", witness=(p, q))
    mu = n + nc
    # U = A x C with multiplication (x,y)(x',y') = (xx', 0)
    umult = [[zero_vector(mu) for _ in range(mu)] for _ in range(mu)]
    for p in range(n):
        for q in range(n):
            for k, c in enumerate(a.mult[p][q]):
                umult[p][q][k] = c
    ualg = Algebra(f"{a.name}xC", mu, umult)
    left = [[zero_vector(mu) for _ in range(mu)] for _ in range(n)]
    for i in range(n):
        for p in range(n):
            for k, c in enumerate(a.mult[i][p]):
                left[i][p][k] = c
        for s in range(nc):
            for k, c in enumerate(c_action.left[i][s]):
                left[i][n + s][n + k] = c
    right = [[zero_vector(mu) for _ in range(n)] for _ in range(mu)]
    for p in range(n):
        for i in range(n):
            for k, c in enumerate(a.mult[p][i]):
                right[p][i][k] = c
    for s in range(nc):
        for i in range(n):
            for k, c in enumerate(c_action.right[s][i]):
                right[n + s][i][n + k] = c
    mod = ModuleAlgebra(ualg, BimoduleAction(n, mu, left, right))
    prod = semidirect(a, mod, name=f"sd({a.name},{ualg.name})", kind="semidirect")
    t = prod.dim
    d = Matrix.zeros(t, t)
    for s in range(nc):
        src = n + n + s  # the C-coordinates of U inside the total
        for k in range(n):
            g = gamma.data[s][k]
            if g:
                d.data[src][k] = g          # tau1((0,c)) = gamma(c)
                d.data[src][n + k] = -g     # tau2((0,c)) = (-gamma(c), 0)
    return prod, d
