"""Complex builders and the (co)cyclic homology engines.

Bar resolutions and bar complexes, the twisted coalgebra Hochschild complex
with its graded action, coinvariants, cotensor products and their derived
dimensions, the comparison isomorphism onto the cotensor model, the tensor
trivialization maps, and assembly of validated (co)cyclic modules together
with Hochschild/bar/cyclic dimension computations.

Degree bookkeeping: every constructed object records the top internal degree
it was built through; consumers asking beyond the certified window get a
DegreeOutOfRange error, never a silent wrong answer.
"""

from .errors import (
    DegreeOutOfRange,
    IdentityViolation,
    NotAYD,
    NotCounital,
    NotStable,
    NotSubcoalgebra,
    ShapeMismatch,
    WellDefinednessFailure,
)
from .equivariant import (
    action_of_basis,
    antipode_inv_of,
    regular_bicomodule,
)
from .linalg import (
    GradedComplex,
    Matrix,
    QuotientSpace,
    block_matrix,
    map_well_defined,
    permute_slots,
    rank_kernel,
    slotted,
    solve_columns,
    swap_matrix,
)


def _pow(n, k):
    return n**k if k >= 0 else 0


def diagonal_action(B, factors):
    """Diagonal B-action tensor on a product of B-modules.

    ``factors`` is a list of (dim, action) pairs in slot order; Sweedler legs
    are dealt left to right.
    """
    if not factors:
        return B.counit
    dim0, act0 = factors[0]
    if len(factors) == 1:
        return act0
    rest = factors[1:]
    rest_dim = 1
    for d, _ in rest:
        rest_dim *= d
    act_rest = diagonal_action(B, rest)
    f = B.field
    b = B.dim
    # B (x) V0 (x) W -> (B (x) V0) (x) (B (x) W) -> V0 (x) W
    spread = B.comult.kron(Matrix.identity(f, dim0 * rest_dim))
    reorder = permute_slots(f, [b, b, dim0, rest_dim], [0, 2, 1, 3])
    return act0.kron(act_rest).mul(reorder).mul(spread)


def right_coaction_of_modcomod(X):
    """Flip the left coaction of a coefficient into a right one.

    x -> x_(0) (x) x_(-1); the leg order convention downstream multiplies
    this leg last.
    """
    f = X.over.field
    return swap_matrix(f, X.over.dim, X.dim).mul(X.coaction)


def diagonal_right_coaction(B, factors):
    """Diagonal right B-coaction on a product of right comodules.

    ``factors`` is a list of (dim, coaction V -> V (x) B); legs multiply in
    slot order.
    """
    f = B.field
    b = B.dim
    dim0, rho0 = factors[0]
    if len(factors) == 1:
        return rho0
    rest = factors[1:]
    rest_dim = 1
    for d, _ in rest:
        rest_dim *= d
    rho_rest = diagonal_right_coaction(B, rest)
    # V0 (x) W -> V0 (x) B (x) W (x) B -> V0 (x) W (x) B (x) B -> V0 (x) W (x) B
    spread = rho0.kron(rho_rest)
    reorder = permute_slots(f, [dim0, b, rest_dim, b], [0, 2, 1, 3])
    collect = Matrix.identity(f, dim0 * rest_dim).kron(B.mult)
    return collect.mul(reorder).mul(spread)


# ---------------------------------------------------------------------------
# Cosimplicial modules
# ---------------------------------------------------------------------------


class CosimplicialModule:
    """Degreewise spaces with cofaces V_n -> V_{n+1} and optional B-action.

    ``cofaces[n]`` lists the n+2 cofaces leaving degree n. ``actions[n]``
    (when present) lists one matrix L_b per basis element of B. The coface
    identities are validated entry-exactly at construction.
    """

    def __init__(self, field, dims, cofaces, actions=None, over=None, check=True):
        self.field = field
        self.dims = list(dims)
        self.top = len(self.dims) - 1
        self.cofaces = cofaces
        self.actions = actions
        self.over = over
        if check:
            self.validate()

    def validate(self):
        for n in range(self.top):
            faces = self.cofaces[n]
            if len(faces) != n + 2:
                raise ShapeMismatch(f"degree {n} must carry {n + 2} cofaces")
            for d in faces:
                if d.cols != self.dims[n] or d.rows != self.dims[n + 1]:
                    raise ShapeMismatch(f"coface at degree {n} has wrong shape")
        for n in range(self.top - 1):
            lower = self.cofaces[n]
            upper = self.cofaces[n + 1]
            for j in range(n + 3):
                for i in range(j):
                    lhs = upper[j].mul(lower[i])
                    rhs = upper[i].mul(lower[j - 1])
                    if lhs != rhs:
                        raise ShapeMismatch(
                            f"coface identity d_{j} d_{i} = d_{i} d_{j-1} fails at degree {n}")

    def differential(self, n, drop_last=False):
        """Alternating coface sum out of degree n (b' when drop_last)."""
        faces = self.cofaces[n]
        upto = len(faces) - (1 if drop_last else 0)
        f = self.field
        acc = Matrix.zero(f, self.dims[n + 1], self.dims[n])
        sign = 1
        for j in range(upto):
            acc = acc.add(faces[j]) if sign > 0 else acc.sub(faces[j])
            sign = -sign
        return acc

    def to_complex(self, drop_last=False):
        diffs = {n: self.differential(n, drop_last) for n in range(self.top)}
        return GradedComplex(self.field, +1, self.dims, diffs)


# ---------------------------------------------------------------------------
# Bar resolution and bar complex
# ---------------------------------------------------------------------------


def bar(C, variant, maxdeg):
    """Bar resolution (degree n space C^{(x) n+2}) or bar complex of C.

    For the resolution variant, C may be a plain coalgebra description or a
    module coalgebra; in the latter case the diagonal B-action matrices are
    attached degreewise. The complex variant returns the GradedComplex with
    CB_0 = C and d_0 the comultiplication.
    """
    if maxdeg < 0:
        raise DegreeOutOfRange("maxdeg must be nonnegative")
    mc = None
    desc = C
    if hasattr(C, "base"):
        mc, desc = C, C.base
    if variant == "complex":
        return bar_complex(desc, maxdeg)
    if variant != "resolution":
        raise ShapeMismatch(f"unknown bar variant {variant!r}")
    f = desc.field
    c = desc.dim
    dims = [_pow(c, n + 2) for n in range(maxdeg + 1)]
    cofaces = []
    for n in range(maxdeg):
        faces = []
        for j in range(n + 2):
            faces.append(slotted(f, _pow(c, j), desc.comult, _pow(c, n + 1 - j)))
        cofaces.append(faces)
    actions = None
    over = None
    if mc is not None:
        over = mc.over
        actions = []
        for n in range(maxdeg + 1):
            big = diagonal_action(over, [(c, mc.action)] * (n + 2))
            actions.append([action_of_basis(big, over.dim, dims[n], b)
                            for b in range(over.dim)])
    return CosimplicialModule(f, dims, cofaces, actions=actions, over=over)


def bar_complex(desc, maxN):
    """CB_* with CB_0 = C, CB_n = C^{(x) n+1}, d_0 = comultiplication."""
    f = desc.field
    c = desc.dim
    dims = [c] + [_pow(c, n + 1) for n in range(1, maxN + 1)]
    diffs = {0: desc.comult}
    for n in range(1, maxN):
        acc = Matrix.zero(f, dims[n + 1], dims[n])
        sign = 1
        for j in range(n + 1):
            face = slotted(f, _pow(c, j), desc.comult, _pow(c, n - j))
            acc = acc.add(face) if sign > 0 else acc.sub(face)
            sign = -sign
        diffs[n] = acc
    return GradedComplex(f, +1, dims, diffs)


def bar_coactions(desc, n):
    """Left and right C-coactions on the bar resolution degree n space."""
    f = desc.field
    c = desc.dim
    left = slotted(f, 1, desc.comult, _pow(c, n + 1))
    right = slotted(f, _pow(c, n + 1), desc.comult, 1)
    return left, right


# ---------------------------------------------------------------------------
# Twisted Cartier-Hochschild complex
# ---------------------------------------------------------------------------


def twisted_ch(C, M, X, maxdeg, check=True):
    """CH with coefficients in M twisted by X: degree n space X (x) M (x) C^n.

    Cofaces come from the smash comodule structure: the zeroth applies the
    right coaction of M, the middle ones comultiply a C slot, the last wraps
    the left legs around with the coefficient twist
    x (x) m (x) ... -> x_(0) (x) m_(0) (x) ... (x) x_(-1)(m_(-1)).
    The graded B-action is attached and the commutators [L_b, d_j] for
    j <= n are verified to vanish.
    """
    B = C.over
    f = B.field
    b = B.dim
    c = C.dim
    m = M.dim
    x = X.dim
    if M.coalgebra is not C and M.coalgebra.base.comult != C.base.comult:
        raise ShapeMismatch("bicomodule must live over the same module coalgebra")
    dims = [x * m * _pow(c, n) for n in range(maxdeg + 1)]
    cofaces = []
    for n in range(maxdeg):
        faces = [slotted(f, x, M.right_coaction, _pow(c, n))]
        for j in range(1, n + 1):
            faces.append(slotted(f, x * m * _pow(c, j - 1), C.base.comult, _pow(c, n - j)))
        # last: apply both left coactions and push the acted leg to the end
        cn = _pow(c, n)
        spread = X.coaction.kron(M.left_coaction).kron(Matrix.identity(f, cn))
        reorder = permute_slots(f, [b, x, c, m, cn], [1, 3, 4, 0, 2])
        act_last = Matrix.identity(f, x * m * cn).kron(C.action)
        faces.append(act_last.mul(reorder).mul(spread))
        cofaces.append(faces)
    actions = []
    for n in range(maxdeg + 1):
        cn = _pow(c, n)
        rest_dim = m * cn
        rest = diagonal_action(B, [(m, M.action)] + [(c, C.action)] * n)
        spread = B.comult.kron(Matrix.identity(f, x * rest_dim))
        reorder = permute_slots(f, [b, b, x, rest_dim], [1, 2, 0, 3])
        big = X.action.kron(rest).mul(reorder).mul(spread)
        actions.append([action_of_basis(big, b, dims[n], bb) for bb in range(b)])
    cs = CosimplicialModule(f, dims, cofaces, actions=actions, over=B, check=check)
    if check:
        for n in range(maxdeg):
            for j in range(n + 1):  # the last coface is exempt
                for bb in range(b):
                    lhs = cs.actions[n + 1][bb].mul(cs.cofaces[n][j])
                    rhs = cs.cofaces[n][j].mul(cs.actions[n][bb])
                    if lhs != rhs:
                        raise ShapeMismatch(
                            f"[L_b, d_{j}] != 0 at degree {n} for basis {bb}")
    return cs


def coinvariants(field, B, action, dim):
    """Quotient of a B-module by the span of b.v - eps(b) v.

    Returns (dim, projection); the underlying QuotientSpace is available via
    :func:`coinvariant_space` for consumers needing sections.
    """
    q = coinvariant_space(field, B, action, dim)
    return q.dim, q.projection


def coinvariant_space(field, B, action, dim):
    eps = B.counit.rowdict.get(0, {})
    rels = []
    I = Matrix.identity(field, dim)
    for bb in range(B.dim):
        L = action_of_basis(action, B.dim, dim, bb)
        e = eps.get(bb, field.zero)
        R = L.sub(I.scale(e)) if e != field.zero else L
        rels.extend(col for col in R.columns() if col)
    return QuotientSpace(field, dim, rels)


def coinvariant_space_from_matrices(field, B, L_list, dim):
    eps = B.counit.rowdict.get(0, {})
    rels = []
    I = Matrix.identity(field, dim)
    for bb, L in enumerate(L_list):
        e = eps.get(bb, field.zero)
        R = L.sub(I.scale(e)) if e != field.zero else L
        rels.extend(col for col in R.columns() if col)
    return QuotientSpace(field, dim, rels)


class InducedComplex:
    """A coinvariant complex together with its degreewise quotient data."""

    def __init__(self, complex, quotients):
        self.complex = complex
        self.quotients = quotients

    @property
    def dims(self):
        return self.complex.dims


def induced_complex(T, X, check_flags=True):
    """Coinvariants of a twisted CH complex, with well-definedness verified.

    Requires the coefficient to be anti-Yetter-Drinfeld (the hypothesis of
    the descent); each differential must map the relation subspace into the
    next one, exactly, and the induced differentials must square to zero.
    """
    if check_flags and not X.ayd:
        raise NotAYD("coefficient is not anti-Yetter-Drinfeld")
    B = T.over
    f = T.field
    quots = [coinvariant_space_from_matrices(f, B, T.actions[n], T.dims[n])
             for n in range(T.top + 1)]
    diffs = {}
    for n in range(T.top):
        d = T.differential(n)
        if not map_well_defined(d, quots[n], quots[n + 1]):
            raise WellDefinednessFailure(
                f"differential at degree {n} does not descend to coinvariants")
        diffs[n] = quots[n].induce(quots[n + 1], d)
    cx = GradedComplex(f, +1, [q.dim for q in quots], diffs)
    return InducedComplex(cx, quots)


# ---------------------------------------------------------------------------
# Cotensor products and derived dimensions
# ---------------------------------------------------------------------------


def cotensor(X_dim, rho_X, C_desc, Y_dim, rho_Y):
    """X box_C Y: kernel of rho_X (x) id - id (x) rho_Y inside X (x) Y.

    ``rho_X``: X -> X (x) C (right), ``rho_Y``: Y -> C (x) Y (left).
    Returns (dim, inclusion).
    """
    f = C_desc.field
    a = slotted(f, 1, rho_X, Y_dim)
    bmat = slotted(f, X_dim, rho_Y, 1)
    _, ker = rank_kernel(a.sub(bmat))
    return ker.cols, ker


def cotor(C_desc, X, Y, maxdeg, equivariant=None):
    """Dims of the derived cotensor: homology of X box CBbar_*(C) box Y.

    ``X = (dim, right coaction)``, ``Y = (dim, left coaction)``. With
    ``equivariant=(B, action_X, action_C, action_Y)`` the induced B-action
    matrices on degreewise representatives are returned as well.
    """
    if C_desc.counit is None:
        raise NotCounital("derived cotensor needs a counital coalgebra")
    f = C_desc.field
    c = C_desc.dim
    xd, rho_X = X
    yd, rho_Y = Y
    top = maxdeg + 1
    inclusions = []
    dims = []
    for n in range(top + 1):
        w = _pow(c, n + 2)
        lam = slotted(f, 1, C_desc.comult, _pow(c, n + 1))  # W -> C (x) W
        rho = slotted(f, _pow(c, n + 1), C_desc.comult, 1)  # W -> W (x) C
        left_eq = slotted(f, 1, rho_X, w * yd).sub(slotted(f, xd, lam, yd))
        right_eq = slotted(f, xd, rho, yd).sub(slotted(f, xd * w, rho_Y, 1))
        _, ker = rank_kernel(left_eq.vstack(right_eq))
        inclusions.append(ker)
        dims.append(ker.cols)
    diffs = {}
    res = bar(C_desc, "resolution", top)
    for n in range(top):
        d_amb = slotted(f, xd, res.differential(n), yd)
        induced = solve_columns(inclusions[n + 1], d_amb.mul(inclusions[n]))
        if induced is None:
            raise WellDefinednessFailure(
                f"bar differential does not preserve the cotensor subspace at degree {n}")
        diffs[n] = induced
    cx = GradedComplex(f, +1, dims, diffs)
    out_dims = [cx.homology(n) for n in range(maxdeg + 1)]
    if equivariant is None:
        return out_dims
    B, act_X, act_C, act_Y = equivariant
    actions = []
    for n in range(top + 1):
        big = diagonal_action(B, [(xd, act_X)] + [(c, act_C)] * (n + 2) + [(yd, act_Y)])
        per_b = []
        for bb in range(B.dim):
            L = action_of_basis(big, B.dim, xd * _pow(c, n + 2) * yd, bb)
            small = solve_columns(inclusions[n], L.mul(inclusions[n]))
            if small is None:
                raise WellDefinednessFailure("cotensor subspace is not B-stable")
            per_b.append(small)
        actions.append(per_b)
    return out_dims, actions


def doi_check(C_desc, M, maxdeg):
    """Verify the comparison map CH_*(C, M) -> M box_{C^e} CBbar_*(C).

    ``M = (dim, left coaction, right coaction)``. True iff the canonical map
    is a degreewise isomorphism onto the cotensor subspace and commutes with
    the differentials through maxdeg.
    """
    if C_desc.counit is None:
        raise NotCounital("the comparison needs a counital coalgebra")
    f = C_desc.field
    c = C_desc.dim
    md, lco, rco = M
    res = bar(C_desc, "resolution", maxdeg + 1)

    def rho_e_M():
        # m -> m_(0) (x) (m_(1) (x) m_(-1))
        step = lco  # m -> m_(-1) (x) m_(0)
        step2 = Matrix.identity(f, c).kron(rco).mul(step)  # c_l, m_0, c_r
        return permute_slots(f, [c, md, c], [1, 2, 0]).mul(step2)

    def lambda_e_W(n):
        w = _pow(c, n + 2)
        lam = slotted(f, 1, C_desc.comult, _pow(c, n + 1))  # W -> C (x) W
        rho = slotted(f, _pow(c, n + 1), C_desc.comult, 1)
        step = slotted(f, c, rho, 1).mul(lam)  # c_l, w, c_r
        return permute_slots(f, [c, w, c], [0, 2, 1]).mul(step)

    rho_m = rho_e_M()
    inclusions = []
    for n in range(maxdeg + 1):
        w = _pow(c, n + 2)
        eq = slotted(f, 1, rho_m, w).sub(slotted(f, md, lambda_e_W(n), 1))
        _, ker = rank_kernel(eq)
        inclusions.append(ker)

    # comparison: m (x) cvec -> m_(0) (x) m_(1) (x) cvec (x) m_(-1)
    phis = []
    ch_faces = _ch_cofaces(C_desc, M, maxdeg)
    for n in range(maxdeg + 1):
        cn = _pow(c, n)
        step = Matrix.identity(f, c).kron(rco).mul(lco)  # m -> c_l, m0, c_r
        spread = step.kron(Matrix.identity(f, cn))
        phi = permute_slots(f, [c, md, c, cn], [1, 2, 3, 0]).mul(spread)
        phis.append(phi)
        sub = SubSpaceCheck(inclusions[n])
        if not sub.contains_all(phi):
            return False
        r, _ = rank_kernel(phi)
        if r != md * cn or inclusions[n].cols != md * cn:
            return False
    for n in range(maxdeg):
        d_ch = _alternating(f, ch_faces[n])
        d_bar = slotted(f, md, res.differential(n), 1)
        if d_bar.mul(phis[n]) != phis[n + 1].mul(d_ch):
            return False
    return True


class SubSpaceCheck:
    """Column-span membership helper for inclusion matrices."""

    def __init__(self, inclusion):
        from .linalg import SubSpace

        self.space = SubSpace.from_columns(inclusion)

    def contains_all(self, M):
        return self.space.contains_columns(M)


def _ch_cofaces(C_desc, M, maxdeg):
    """Plain (untwisted) Cartier-Hochschild cofaces for a bicomodule."""
    f = C_desc.field
    c = C_desc.dim
    md, lco, rco = M
    out = []
    for n in range(maxdeg):
        faces = [slotted(f, 1, rco, _pow(c, n))]
        for j in range(1, n + 1):
            faces.append(slotted(f, md * _pow(c, j - 1), C_desc.comult, _pow(c, n - j)))
        cn = _pow(c, n)
        spread = lco.kron(Matrix.identity(f, cn))
        wrap = permute_slots(f, [c, md, cn], [1, 2, 0]).mul(spread)
        faces.append(wrap)
        out.append(faces)
    return out


def _alternating(field, faces):
    acc = None
    sign = 1
    for d in faces:
        if acc is None:
            acc = d if sign > 0 else d.neg()
        else:
            acc = acc.add(d) if sign > 0 else acc.sub(d)
        sign = -sign
    return acc


# ---------------------------------------------------------------------------
# Trivialization isomorphisms
# ---------------------------------------------------------------------------


def shear_map(n, B):
    """The shear isomorphism on B^{(x) n} and its inverse.

    Gamma(b1 (x) ... (x) bn) = b1_(1) (x) b1_(2) b2_(1) (x) ... ; the inverse
    interleaves the antipode. Both the mutual-inverse identities and the
    intertwining of the diagonal action with first-slot multiplication are
    verified before returning.
    """
    f = B.field
    d = B.dim
    I = Matrix.identity(f, d)
    if n < 1:
        raise ShapeMismatch("shear map needs n >= 1")

    def shear_rec(k):
        if k == 1:
            return I
        rest = shear_rec(k - 1)
        diag = diagonal_action(B, [(d, B.mult)] * (k - 1))
        spread = B.comult.kron(rest)
        return I.kron(diag).mul(spread)

    g = shear_rec(n)
    # inverse: comultiply slots 1..n-1, then fold S between adjacent legs
    if n == 1:
        ginv = I
    else:
        spread = None
        for _ in range(n - 1):
            spread = B.comult if spread is None else spread.kron(B.comult)
        spread = spread.kron(I)
        ms = B.mult.mul(B.antipode.kron(I))
        fold = I
        for _ in range(n - 1):
            fold = fold.kron(ms)
        ginv = fold.mul(spread)
    big = Matrix.identity(f, _pow(d, n))
    if g.mul(ginv) != big or ginv.mul(g) != big:
        raise IdentityViolation(n, "shear inverse")
    first_mult = B.mult.kron(Matrix.identity(f, _pow(d, n - 1)))
    diag_full = diagonal_action(B, [(d, B.mult)] * n)
    if g.mul(first_mult) != diag_full.mul(Matrix.identity(f, d).kron(g)):
        raise IdentityViolation(n, "shear intertwining")
    return g, ginv


def untwist(B, U, V):
    """Mutually inverse maps between k (x)_B (U (x) V) and U^op (x)_B V.

    ``U``/``V`` are (dim, action) pairs of left B-modules. Returns (phi, psi)
    on the two quotient spaces, verified mutual inverses; the two relation
    subspaces are checked to coincide, which is the content of the
    trivialization.
    """
    sinv = antipode_inv_of(B)
    f = B.field
    ud, act_u = U
    vd, act_v = V
    amb = ud * vd
    diag = diagonal_action(B, [(ud, act_u), (vd, act_v)])
    q1 = coinvariant_space(f, B, diag, amb)
    rels2 = []
    I_v = Matrix.identity(f, vd)
    I_u = Matrix.identity(f, ud)
    for bb in range(B.dim):
        sb = sinv.col(bb)  # S^{-1}(e_b) coordinates
        L_s = None
        for i, coeff in sb.items():
            term = action_of_basis(act_u, B.dim, ud, i).scale(coeff)
            L_s = term if L_s is None else L_s.add(term)
        if L_s is None:
            L_s = Matrix.zero(f, ud, ud)
        L_vb = action_of_basis(act_v, B.dim, vd, bb)
        R = L_s.kron(I_v).sub(I_u.kron(L_vb))
        rels2.extend(col for col in R.columns() if col)
    q2 = QuotientSpace(f, amb, rels2)
    ident = Matrix.identity(f, amb)
    if not (map_well_defined(ident, q2, q1) and map_well_defined(ident, q1, q2)):
        raise IdentityViolation(0, "trivialization relation exchange")
    phi = q1.projection.mul(q2.section)
    psi = q2.projection.mul(q1.section)
    if phi.mul(psi) != Matrix.identity(f, q1.dim) or psi.mul(phi) != Matrix.identity(f, q2.dim):
        raise IdentityViolation(0, "trivialization mutual inverse")
    return phi, psi


# ---------------------------------------------------------------------------
# Cocyclic and cyclic modules
# ---------------------------------------------------------------------------


class CocyclicModule:
    """Validated cocyclic module on coinvariant spaces (coalgebra side)."""

    def __init__(self, field, over, dims, cofaces, tau, quotients, ambient_dims):
        self.field = field
        self.over = over
        self.dims = list(dims)
        self.top = len(self.dims) - 1
        self.cofaces = cofaces  # cofaces[n]: list of n+2 maps V_n -> V_{n+1}
        self.tau = tau  # tau[n]: V_n -> V_n
        self.quotients = quotients
        self.ambient_dims = ambient_dims
        self.orientation = +1

    def validate(self):
        f = self.field
        for n in range(self.top + 1):
            t = self.tau[n]
            power = Matrix.identity(f, self.dims[n])
            for _ in range(n + 1):
                power = t.mul(power)
            if power != Matrix.identity(f, self.dims[n]):
                raise IdentityViolation(n, "tau^{n+1} = id")
        for n in range(1, self.top + 1):
            faces_in = self.cofaces[n - 1]
            for j in range(1, n + 1):
                if self.tau[n].mul(faces_in[j]) != faces_in[j - 1].mul(self.tau[n - 1]):
                    raise IdentityViolation(n, f"tau d_{j} = d_{j-1} tau")
            if self.tau[n].mul(faces_in[0]) != faces_in[n]:
                raise IdentityViolation(n, "tau d_0 = d_n")


class CyclicModule:
    """Validated cyclic module on cotensor subspaces (algebra side)."""

    def __init__(self, field, over, dims, faces, tau, inclusions, ambient_dims):
        self.field = field
        self.over = over
        self.dims = list(dims)
        self.top = len(self.dims) - 1
        self.faces = faces  # faces[n]: list of n+1 maps V_n -> V_{n-1}
        self.tau = tau
        self.inclusions = inclusions
        self.ambient_dims = ambient_dims
        self.orientation = -1

    def validate(self):
        f = self.field
        for n in range(self.top + 1):
            t = self.tau[n]
            power = Matrix.identity(f, self.dims[n])
            for _ in range(n + 1):
                power = t.mul(power)
            if power != Matrix.identity(f, self.dims[n]):
                raise IdentityViolation(n, "tau^{n+1} = id")
        for n in range(1, self.top + 1):
            faces = self.faces[n]
            lower = self.faces[n - 1] if n >= 1 else None
            for j in range(1, n + 1):
                for i in range(j):
                    if n >= 2:
                        lhs = lower[i].mul(faces[j])
                        rhs = lower[j - 1].mul(faces[i])
                        if lhs != rhs:
                            raise IdentityViolation(n, f"d_{i} d_{j} = d_{j-1} d_{i}")
            for i in range(1, n + 1):
                if faces[i].mul(self.tau[n]) != self.tau[n - 1].mul(faces[i - 1]):
                    raise IdentityViolation(n, f"d_{i} tau = tau d_{i-1}")
            if faces[0].mul(self.tau[n]) != faces[n]:
                raise IdentityViolation(n, "d_0 tau = d_n")


def assemble(side, main, X, maxdeg):
    """Build the validated (co)cyclic module of a triple.

    Coalgebra side: coinvariants of X (x) C^{(x) n+1} with the twisted
    cofaces and the cyclic rotation through the coefficient coaction.
    Algebra side: the subspace of A^{(x) n+1} (x) X on which the total
    coaction is trivial, with multiplication faces and the rotation twisted
    through the coaction. Every (co)cyclic identity is verified on the
    constructed spaces; assembly fails on any violation.
    """
    if not X.stable:
        raise NotStable("coefficient is not stable")
    if side == "coalgebra":
        return _assemble_coalgebra(main, X, maxdeg)
    if side == "algebra":
        return _assemble_algebra(main, X, maxdeg)
    raise ShapeMismatch(f"unknown side {side!r}")


def _assemble_coalgebra(C, X, maxdeg):
    B = C.over
    f = B.field
    c = C.dim
    x = X.dim
    M = regular_bicomodule(C)
    T = twisted_ch(C, M, X, maxdeg, check=True)
    quots = [coinvariant_space_from_matrices(f, B, T.actions[n], T.dims[n])
             for n in range(maxdeg + 1)]
    cofaces = []
    for n in range(maxdeg):
        faces = []
        for j, d in enumerate(T.cofaces[n]):
            if not map_well_defined(d, quots[n], quots[n + 1]):
                raise IdentityViolation(n, f"coface d_{j} well-defined on coinvariants")
            faces.append(quots[n].induce(quots[n + 1], d))
        cofaces.append(faces)
    taus = []
    for n in range(maxdeg + 1):
        cn = _pow(c, n)
        spread = X.coaction.kron(Matrix.identity(f, c * cn))
        reorder = permute_slots(f, [B.dim, x, c, cn], [1, 3, 0, 2])
        t_amb = Matrix.identity(f, x * cn).kron(C.action).mul(reorder).mul(spread)
        if not map_well_defined(t_amb, quots[n], quots[n]):
            raise IdentityViolation(n, "cyclic operator well-defined on coinvariants")
        taus.append(quots[n].induce(quots[n], t_amb))
    cm = CocyclicModule(f, B, [q.dim for q in quots], cofaces, taus, quots, T.dims)
    cm.validate()
    return cm


def _assemble_algebra(A, X, maxdeg):
    B = A.over
    f = B.field
    a = A.dim
    x = X.dim
    rho_x = right_coaction_of_modcomod(X)
    inclusions = []
    dims = []
    amb_dims = []
    unit = B.unit
    for n in range(maxdeg + 1):
        amb = _pow(a, n + 1) * x
        amb_dims.append(amb)
        rho = diagonal_right_coaction(B, [(a, A.coaction)] * (n + 1) + [(x, rho_x)])
        triv = Matrix.identity(f, amb).kron(unit)
        _, ker = rank_kernel(rho.sub(triv))
        inclusions.append(ker)
        dims.append(ker.cols)

    def restrict(Mamb, n_src, n_dst):
        small = solve_columns(inclusions[n_dst], Mamb.mul(inclusions[n_src]))
        if small is None:
            raise IdentityViolation(n_src, "operator preserves the cotensor subspace")
        return small

    taus_amb = []
    for n in range(maxdeg + 1):
        an = _pow(a, n)
        spread = Matrix.identity(f, an).kron(A.coaction).kron(Matrix.identity(f, x))
        reorder = permute_slots(f, [an, a, B.dim, x], [1, 0, 2, 3])
        t_amb = Matrix.identity(f, _pow(a, n + 1)).kron(X.action).mul(reorder).mul(spread)
        taus_amb.append(t_amb)
    faces = [None]
    faces[0] = []  # degree 0 has no faces
    all_faces = [[]]
    for n in range(1, maxdeg + 1):
        lst = []
        for j in range(n):
            d_amb = slotted(f, _pow(a, j), A.base.mult, _pow(a, n - 1 - j) * x)
            lst.append(d_amb)
        d0 = lst[0]
        lst.append(d0.mul(taus_amb[n]))
        all_faces.append(lst)
    faces_small = [[]]
    for n in range(1, maxdeg + 1):
        faces_small.append([restrict(d, n, n - 1) for d in all_faces[n]])
    taus_small = [restrict(taus_amb[n], n, n) for n in range(maxdeg + 1)]
    cm = CyclicModule(f, B, dims, faces_small, taus_small, inclusions, amb_dims)
    cm.validate()
    return cm


# ---------------------------------------------------------------------------
# Homology engines
# ---------------------------------------------------------------------------


def _hochschild_complex_cocyclic(cm, drop_last=False):
    f = cm.field
    diffs = {}
    for n in range(cm.top):
        faces = cm.cofaces[n]
        upto = len(faces) - (1 if drop_last else 0)
        diffs[n] = _alternating(f, faces[:upto])
    return GradedComplex(f, +1, cm.dims, diffs)


def _hochschild_complex_cyclic(cm, drop_last=False):
    f = cm.field
    diffs = {}
    for n in range(1, cm.top + 1):
        faces = cm.faces[n]
        upto = len(faces) - (1 if drop_last else 0)
        diffs[n] = _alternating(f, faces[:upto])
    return GradedComplex(f, -1, cm.dims, diffs)


def _lambda_n(cm, n):
    f = cm.field
    t = cm.tau[n]
    return t if n % 2 == 0 else t.neg()


def _norm_n(cm, n):
    f = cm.field
    lam = _lambda_n(cm, n)
    acc = Matrix.identity(f, cm.dims[n])
    out = acc
    for _ in range(n):
        acc = lam.mul(acc)
        out = out.add(acc)
    return out


def cyclic_total_complex(cm, maxtot):
    """Total complex of the first-quadrant (b, b', 1 - lambda, N) bicomplex.

    Works for both orientations: cochain for cocyclic modules, chain for
    cyclic modules. Total degree runs through ``maxtot``.
    """
    f = cm.field
    if maxtot > cm.top:
        raise DegreeOutOfRange(
            f"total degree {maxtot} needs internal degree {maxtot}, built through {cm.top}")
    cochain = cm.orientation == +1
    if cochain:
        b_full = {n: _alternating(f, cm.cofaces[n]) for n in range(cm.top)}
        b_prime = {n: _alternating(f, cm.cofaces[n][:-1]) for n in range(cm.top)}
    else:
        b_full = {n: _alternating(f, cm.faces[n]) for n in range(1, cm.top + 1)}
        b_prime = {n: _alternating(f, cm.faces[n][:-1]) for n in range(1, cm.top + 1)}
    tot_dims = []
    blocks = []  # per total degree: list of (p, q)
    for m in range(maxtot + 1):
        pq = [(p, m - p) for p in range(m + 1)]
        blocks.append(pq)
        tot_dims.append(sum(cm.dims[q] for _, q in pq))
    diffs = {}
    for m in range(maxtot + 1):
        src = blocks[m]
        tgt_deg = m + 1 if cochain else m - 1
        if not (0 <= tgt_deg <= maxtot):
            continue
        tgt = blocks[tgt_deg]
        tgt_index = {pq: i for i, pq in enumerate(tgt)}
        grid = [[None] * len(src) for _ in range(len(tgt))]
        for si, (p, q) in enumerate(src):
            if cochain:
                vq = (p, q + 1)
                if vq in tgt_index and q < cm.top:
                    grid[tgt_index[vq]][si] = b_full[q] if p % 2 == 0 else b_prime[q].neg()
                hq = (p + 1, q)
                if hq in tgt_index:
                    lam = _lambda_n(cm, q)
                    one = Matrix.identity(f, cm.dims[q])
                    grid[tgt_index[hq]][si] = one.sub(lam) if p % 2 == 0 else _norm_n(cm, q)
            else:
                vq = (p, q - 1)
                if vq in tgt_index and q >= 1:
                    grid[tgt_index[vq]][si] = b_full[q] if p % 2 == 0 else b_prime[q].neg()
                hq = (p - 1, q)
                if hq in tgt_index:
                    lam = _lambda_n(cm, q)
                    one = Matrix.identity(f, cm.dims[q])
                    grid[tgt_index[hq]][si] = one.sub(lam) if p % 2 == 1 else _norm_n(cm, q)
        diffs[m] = block_matrix(f, grid,
                                [cm.dims[q] for _, q in tgt],
                                [cm.dims[q] for _, q in src])
    return GradedComplex(f, +1 if cochain else -1, tot_dims, diffs)


def homology(obj, theory, maxdeg):
    """Dimensions per degree of the chosen theory of a (co)cyclic module."""
    if theory not in ("hochschild", "cyclic", "bar"):
        raise ShapeMismatch(f"unknown theory {theory!r}")
    is_cocyclic = isinstance(obj, CocyclicModule)
    if theory in ("hochschild", "bar"):
        if maxdeg + 1 > obj.top:
            raise DegreeOutOfRange(
                f"degree {maxdeg} needs internal degree {maxdeg + 1}, built through {obj.top}")
        drop = theory == "bar"
        cx = (_hochschild_complex_cocyclic(obj, drop) if is_cocyclic
              else _hochschild_complex_cyclic(obj, drop))
        return [cx.homology(n) for n in range(maxdeg + 1)]
    if maxdeg + 1 > obj.top:
        raise DegreeOutOfRange(
            f"cyclic degree {maxdeg} needs internal degree {maxdeg + 1}, built through {obj.top}")
    tot = cyclic_total_complex(obj, maxdeg + 1)
    return [tot.homology(n) for n in range(maxdeg + 1)]


# ---------------------------------------------------------------------------
# Relative bar complex
# ---------------------------------------------------------------------------


def relative_bar(ses, maxdeg):
    """The two-sided complex K (x) C^{(x) n} (x) C/K with its B-action.

    Needs subcoalgebra mode so K carries its own comultiplication. Returns
    (GradedComplex, actions) where actions[n] lists the diagonal L_b per
    basis element; [L_b, d] = 0 is verified.
    """
    if ses.mode != "subcoalgebra":
        raise NotSubcoalgebra("relative bar complex needs a subcoalgebra")
    C = ses.C
    B = C.over
    f = B.field
    c = C.dim
    Kmc = ses.k_module_coalgebra()
    k = Kmc.dim
    Q = ses.quotient
    q = Q.dim
    K_incl = ses.K
    proj = ses.projection
    sec = ses.space.section
    rho_q = slotted(f, c, proj, 1).mul(C.base.comult).mul(sec)  # C/K -> C (x) C/K
    delta_k_into_c = Matrix.identity(f, k).kron(K_incl).mul(Kmc.base.comult)  # K -> K (x) C
    dims = [k * _pow(c, n) * q for n in range(maxdeg + 2)]
    diffs = {}
    for n in range(maxdeg + 1):
        faces = [slotted(f, 1, delta_k_into_c, _pow(c, n) * q)]
        for j in range(1, n + 1):
            faces.append(slotted(f, k * _pow(c, j - 1), C.base.comult, _pow(c, n - j) * q))
        faces.append(slotted(f, k * _pow(c, n), rho_q, 1))
        diffs[n] = _alternating(f, faces)
    cx = GradedComplex(f, +1, dims, diffs)
    actions = []
    for n in range(maxdeg + 2):
        big = diagonal_action(
            B, [(k, Kmc.action)] + [(c, C.action)] * n + [(q, Q.action)])
        actions.append([action_of_basis(big, B.dim, dims[n], bb) for bb in range(B.dim)])
    for n in range(maxdeg + 1):
        for bb in range(B.dim):
            if actions[n + 1][bb].mul(diffs[n]) != diffs[n].mul(actions[n][bb]):
                raise ShapeMismatch(f"relative bar differential is not B-linear at degree {n}")
    return cx, actions
