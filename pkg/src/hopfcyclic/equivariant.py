"""Equivariant structures over a fixed bialgebra B.

Module coalgebras (B acts, comultiplication is B-linear), comodule algebras
(B coacts, multiplication is colinear), coefficient module/comodules with
computed stability and anti-Yetter-Drinfeld flags, short exact sequences of
coalgebras with induced quotient structure, H-counitality probes, and the
projectivity test. All conditions are verified entry-exactly; nothing is
asserted on trust.
"""

from .errors import (
    AuditFailed,
    MissingAntipodeInverse,
    NotBStable,
    NotCoideal,
    NotSubcoalgebra,
    ParseError,
    ShapeMismatch,
)
from .hopf import AxiomReport, BialgebraDesc, _compare, matrix_from_json
from .linalg import (
    Matrix,
    QuotientSpace,
    SubSpace,
    invert,
    permute_slots,
    solve_columns,
    swap_matrix,
)


def left_mult_matrix(desc, b_index):
    """L_b on the underlying space of an algebra description."""
    e_b = Matrix.from_entries(desc.field, desc.dim, 1, [(b_index, 0, desc.field.one)])
    return desc.mult.mul(e_b.kron(desc.identity_matrix()))


def action_of_basis(action, dim_b, dim_x, b_index):
    """Single-element action matrix out of a B (x) X -> X tensor."""
    f = action.field
    rd = {}
    for i, row in action.rowdict.items():
        base = b_index * dim_x
        tgt = {}
        for j, v in row.items():
            if base <= j < base + dim_x:
                tgt[j - base] = v
        if tgt:
            rd[i] = tgt
    return Matrix(f, dim_x, dim_x, rd)


def antipode_inv_of(B):
    """Cached antipode inverse, computing and caching on demand."""
    if B.antipode_inv is not None:
        return B.antipode_inv
    if B.antipode is None:
        raise MissingAntipodeInverse("no antipode present")
    sinv = invert(B.antipode)
    if sinv is None:
        raise MissingAntipodeInverse("antipode is not invertible")
    B.antipode_inv = sinv  # cache; descs are otherwise immutable
    return sinv


class ModuleCoalgebra:
    """A coalgebra C with a compatible left B-action.

    ``action`` is the tensor B (x) C -> C as a dim_C x (dim_B * dim_C)
    matrix. Construction audits associativity, unitality and the
    comultiplication compatibility (b(c))_(1) (x) (b(c))_(2)
    = b_(1)(c_(1)) (x) b_(2)(c_(2)), plus the counit law when counits exist.
    """

    def __init__(self, base, over, action, check=True):
        if base.comult is None:
            raise ShapeMismatch("base of a module coalgebra needs a comultiplication")
        self.base = base
        self.over = over
        self.action = action
        if action.rows != base.dim or action.cols != over.dim * base.dim:
            raise ShapeMismatch("action tensor has wrong shape")
        if check:
            report = audit_structure(self, "module_coalgebra")
            if not report.ok:
                raise AuditFailed(report)

    @property
    def dim(self):
        return self.base.dim

    def action_of(self, b_index):
        return action_of_basis(self.action, self.over.dim, self.base.dim, b_index)

    def __repr__(self):
        return f"ModuleCoalgebra(dim={self.dim} over dim={self.over.dim})"


class ComoduleAlgebra:
    """An algebra A with a compatible right B-coaction A -> A (x) B."""

    def __init__(self, base, over, coaction, check=True):
        if base.mult is None:
            raise ShapeMismatch("base of a comodule algebra needs a multiplication")
        self.base = base
        self.over = over
        self.coaction = coaction
        if coaction.rows != base.dim * over.dim or coaction.cols != base.dim:
            raise ShapeMismatch("coaction tensor has wrong shape")
        if check:
            report = audit_structure(self, "comodule_algebra")
            if not report.ok:
                raise AuditFailed(report)

    @property
    def dim(self):
        return self.base.dim

    def __repr__(self):
        return f"ComoduleAlgebra(dim={self.dim} over dim={self.over.dim})"


class EquivariantBicomodule:
    """A C-bicomodule with a B-action making both coactions equivariant.

    ``left_coaction``: M -> C (x) M, ``right_coaction``: M -> M (x) C,
    ``action``: B (x) M -> M, with C a module coalgebra over the same B.
    """

    def __init__(self, coalgebra, dim, action, left_coaction, right_coaction, check=True):
        self.coalgebra = coalgebra
        self.dim = dim
        self.action = action
        self.left_coaction = left_coaction
        self.right_coaction = right_coaction
        c, b = coalgebra.dim, coalgebra.over.dim
        if action.rows != dim or action.cols != b * dim:
            raise ShapeMismatch("bicomodule action tensor has wrong shape")
        if left_coaction.rows != c * dim or left_coaction.cols != dim:
            raise ShapeMismatch("left coaction has wrong shape")
        if right_coaction.rows != dim * c or right_coaction.cols != dim:
            raise ShapeMismatch("right coaction has wrong shape")
        if check:
            report = audit_structure(self, "equivariant_bicomodule")
            if not report.ok:
                raise AuditFailed(report)

    def action_of(self, b_index):
        return action_of_basis(self.action, self.coalgebra.over.dim, self.dim, b_index)


def regular_bicomodule(mc):
    """C over itself: both coactions are the comultiplication."""
    return EquivariantBicomodule(
        mc, mc.dim, mc.action, mc.base.comult, mc.base.comult, check=True
    )


class ModComod:
    """A space with a B-action and a left B-coaction, no compatibility assumed.

    ``stable`` and ``ayd`` are computed at construction, never asserted:
    stable means action following coaction is the identity, ayd means the
    coaction of an acted element twists by conjugation through the inverse
    antipode. Without an invertible antipode the ayd flag is recorded False.
    """

    def __init__(self, over, dim, action, coaction):
        self.over = over
        self.dim = dim
        self.action = action
        self.coaction = coaction
        b = over.dim
        if action.rows != dim or action.cols != b * dim:
            raise ShapeMismatch("coefficient action tensor has wrong shape")
        if coaction.rows != b * dim or coaction.cols != dim:
            raise ShapeMismatch("coefficient coaction tensor has wrong shape")
        self.stable = action.mul(coaction) == Matrix.identity(over.field, dim)
        self.ayd = self._compute_ayd()

    def _compute_ayd(self):
        B = self.over
        if B.antipode is None:
            return False
        try:
            sinv = antipode_inv_of(B)
        except MissingAntipodeInverse:
            return False
        f = B.field
        d, x = B.dim, self.dim
        I_B = B.identity_matrix()
        I_X = Matrix.identity(f, x)
        lhs = self.coaction.mul(self.action)
        # b_(1) x_(-1) S^{-1}(b_(3)) (x) b_(2) x_(0)
        delta2 = B.comult.kron(I_B).mul(B.comult)  # b -> b1 (x) b2 (x) b3
        spread = delta2.kron(self.coaction)  # B(x)X -> B,B,B,Bx,X
        reorder = permute_slots(f, [d, d, d, d, x], [0, 3, 2, 1, 4])
        m3 = B.mult.mul(B.mult.kron(I_B))  # triple product
        m3s = m3.mul(I_B.kron(I_B).kron(sinv))
        rhs = m3s.kron(self.action).mul(reorder).mul(spread)
        return lhs == rhs

    def action_of(self, b_index):
        return action_of_basis(self.action, self.over.dim, self.dim, b_index)

    def __repr__(self):
        return f"ModComod(dim={self.dim}, stable={self.stable}, ayd={self.ayd})"


# ---------------------------------------------------------------------------
# Structure audits
# ---------------------------------------------------------------------------


def audit_structure(obj, kind):
    """Verify exactly the invariants of the given structure kind.

    Returns an AxiomReport whose failures carry a witness basis tuple of the
    acting/coacting element followed by the module element.
    """
    if kind == "module_coalgebra":
        return _audit_module_coalgebra(obj)
    if kind == "comodule_algebra":
        return _audit_comodule_algebra(obj)
    if kind in ("equivariant_comodule", "equivariant_bicomodule"):
        return _audit_equivariant_bicomodule(obj, both=(kind == "equivariant_bicomodule"))
    raise ParseError(f"unknown structure kind {kind!r}")


def _names(B, other_names):
    return [f"{b}|{c}" for b in B.basis for c in other_names]


def _audit_module_coalgebra(mc):
    B, C, act = mc.over, mc.base, mc.action
    f = B.field
    I_B, I_C = B.identity_matrix(), C.identity_matrix()
    names = _names(B, C.basis)
    checks = []
    assoc_l = act.mul(I_B.kron(act))
    assoc_r = act.mul(B.mult.kron(I_C))
    checks.append(_compare("action associativity", assoc_l, assoc_r, _names(B, names), 1))
    checks.append(_compare("action unitality", act.mul(B.unit.kron(I_C)), I_C, C.basis, 1))
    lhs = C.comult.mul(act)
    mid = I_B.kron(swap_matrix(f, B.dim, C.dim)).kron(I_C)
    rhs = act.kron(act).mul(mid).mul(B.comult.kron(C.comult))
    checks.append(_compare("comultiplication compatibility", lhs, rhs, names, 1))
    if C.counit is not None and B.counit is not None:
        checks.append(_compare("counit compatibility", C.counit.mul(act),
                               B.counit.kron(C.counit), names, 1))
    return AxiomReport(checks)


def _audit_comodule_algebra(ca):
    A, B, rho = ca.base, ca.over, ca.coaction
    f = B.field
    I_A, I_B = A.identity_matrix(), B.identity_matrix()
    names = A.basis
    pair_names = [f"{a}|{b}" for a in A.basis for b in A.basis]
    checks = []
    coassoc_l = rho.kron(I_B).mul(rho)
    coassoc_r = I_A.kron(B.comult).mul(rho)
    checks.append(_compare("coaction coassociativity", coassoc_l, coassoc_r, names, 1))
    if B.counit is not None:
        checks.append(_compare("coaction counitality", I_A.kron(B.counit).mul(rho), I_A, names, 1))
    lhs = rho.mul(A.mult)
    mid = I_A.kron(swap_matrix(f, B.dim, A.dim)).kron(I_B)
    rhs = A.mult.kron(B.mult).mul(mid).mul(rho.kron(rho))
    checks.append(_compare("multiplicativity", lhs, rhs, pair_names, 1))
    if A.unit is not None and B.unit is not None:
        checks.append(_compare("unit colinearity", rho.mul(A.unit), A.unit.kron(B.unit), ["1"], 0))
    return AxiomReport(checks)


def _audit_equivariant_bicomodule(m, both=True):
    mc = m.coalgebra
    B, C = mc.over, mc.base
    f = B.field
    I_B = B.identity_matrix()
    I_M = Matrix.identity(f, m.dim)
    mnames = [str(i) for i in range(m.dim)]
    names = _names(B, mnames)
    checks = []
    # left coaction coassociativity and equivariance
    lco = m.left_coaction
    coassoc_l = C.comult.kron(I_M).mul(lco)
    coassoc_r = Matrix.identity(f, C.dim).kron(lco).mul(lco)
    checks.append(_compare("left coaction coassociativity", coassoc_l, coassoc_r, mnames, 1))
    lhs = lco.mul(m.action)
    mid = I_B.kron(swap_matrix(f, B.dim, C.dim)).kron(I_M)
    rhs = mc.action.kron(m.action).mul(mid).mul(B.comult.kron(lco))
    checks.append(_compare("left coaction equivariance", lhs, rhs, names, 1))
    if both:
        rco = m.right_coaction
        coassoc_l = rco.kron(Matrix.identity(f, C.dim)).mul(rco)
        coassoc_r = I_M.kron(C.comult).mul(rco)
        checks.append(_compare("right coaction coassociativity", coassoc_l, coassoc_r, mnames, 1))
        lhs = rco.mul(m.action)
        mid2 = I_B.kron(swap_matrix(f, B.dim, m.dim)).kron(Matrix.identity(f, C.dim))
        rhs = m.action.kron(mc.action).mul(mid2).mul(B.comult.kron(rco))
        checks.append(_compare("right coaction equivariance", lhs, rhs, names, 1))
        bicosym_l = lco.kron(Matrix.identity(f, C.dim)).mul(rco)
        bicosym_r = Matrix.identity(f, C.dim).kron(rco).mul(lco)
        checks.append(_compare("bicomodule compatibility", bicosym_l, bicosym_r, mnames, 1))
    # action associativity and unitality
    assoc_l = m.action.mul(I_B.kron(m.action))
    assoc_r = m.action.mul(B.mult.kron(I_M))
    checks.append(_compare("action associativity", assoc_l, assoc_r, _names(B, names), 1))
    checks.append(_compare("action unitality", m.action.mul(B.unit.kron(I_M)), I_M, mnames, 1))
    return AxiomReport(checks)


# ---------------------------------------------------------------------------
# Coefficients
# ---------------------------------------------------------------------------


def counit_action(B, dim):
    """b . x = eps(b) x as a B (x) X -> X tensor."""
    f = B.field
    eps = B.counit.rowdict.get(0, {})
    ents = []
    for b, v in eps.items():
        for x in range(dim):
            ents.append((x, b * dim + x, v))
    return Matrix.from_entries(f, dim, B.dim * dim, ents)


def unit_coaction(B, dim):
    """x -> unit (x) x as an X -> B (x) X tensor."""
    f = B.field
    ents = []
    for b, v in B.unit.col(0).items():
        for x in range(dim):
            ents.append((b * dim + x, x, v))
    return Matrix.from_entries(f, B.dim * dim, dim, ents)


def make_coefficient(kind, B, payload=None):
    """The coefficient module/comodules used throughout.

    eps: coaction from the payload (default: one-dimensional trivial), action
    through the counit. unit: action from the payload, coaction through the
    unit. r_ad: B with the regular action and the co-adjoint coaction
    x_(1) S^{-1}(x_(3)) (x) x_(2). ad_r: B with the adjoint action
    b_(1) x S^{-1}(b_(2)) and the comultiplication coaction.
    """
    f = B.field
    if kind == "eps":
        if payload is None:
            dim, coaction = 1, unit_coaction(B, 1)
        else:
            dim, coaction = payload
        return ModComod(B, dim, counit_action(B, dim), coaction)
    if kind == "unit":
        if payload is None:
            dim, action = 1, counit_action(B, 1)
        else:
            dim, action = payload
        return ModComod(B, dim, action, unit_coaction(B, dim))
    if kind in ("r_ad", "ad_r"):
        sinv = antipode_inv_of(B)
        d = B.dim
        I_B = B.identity_matrix()
        if kind == "r_ad":
            delta2 = B.comult.kron(I_B).mul(B.comult)  # x1 (x) x2 (x) x3
            reorder = permute_slots(f, [d, d, d], [0, 2, 1])  # x1, x3, x2
            pair = B.mult.mul(I_B.kron(sinv)).kron(I_B)  # x1 S^{-1}(x3) (x) x2
            coaction = pair.mul(reorder).mul(delta2)
            return ModComod(B, d, B.mult, coaction)
        # ad_r
        spread = B.comult.kron(I_B)  # B (x) X -> b1, b2, x
        reorder = permute_slots(f, [d, d, d], [0, 2, 1])  # b1, x, b2
        act = B.mult.mul(B.mult.kron(I_B)).mul(I_B.kron(I_B).kron(sinv)).mul(reorder).mul(spread)
        return ModComod(B, d, act, B.comult)
    raise ParseError(f"unknown coefficient kind {kind!r}")


def coefficient_from_json(B, doc):
    if "kind" in doc:
        return make_coefficient(doc["kind"], B)
    try:
        action = matrix_from_json(B.field, doc["action"])
        coaction = matrix_from_json(B.field, doc["coaction"])
        dim = int(doc.get("dim", action.rows))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed coefficient document: {exc}") from exc
    return ModComod(B, dim, action, coaction)


# ---------------------------------------------------------------------------
# Short exact sequences of coalgebras
# ---------------------------------------------------------------------------


class CoalgebraSES:
    """0 -> K -> C -> C/K -> 0 data with the induced quotient structure."""

    def __init__(self, C, K_basis, quotient_mc, mode, quot_space, b_splitting,
                 K_counit_zero):
        self.C = C
        self.K = K_basis  # Matrix: columns a basis of the subspace
        self.quotient = quotient_mc
        self.mode = mode
        self.space = quot_space  # QuotientSpace with projection/section
        self.b_splitting = b_splitting  # Matrix or None
        self.K_counit_zero = K_counit_zero

    @property
    def projection(self):
        return self.space.projection

    def k_module_coalgebra(self):
        """K as a module coalgebra in its own right (subcoalgebra mode)."""
        if self.mode != "subcoalgebra":
            raise NotSubcoalgebra("K carries a coalgebra structure only in subcoalgebra mode")
        return _restrict_module_coalgebra(self.C, self.K)


def _restrict_module_coalgebra(C, K_basis):
    """Module-coalgebra structure on a B-stable subcoalgebra span."""
    f = C.base.field
    kdim = K_basis.cols
    # comult in K coordinates: solve K (x) K . X = comult . K
    amb = C.base.comult.mul(K_basis)
    kk = K_basis.kron(K_basis)
    comult_k = solve_columns(kk, amb)
    if comult_k is None:
        raise NotSubcoalgebra("comultiplication does not restrict to the subspace")
    act_amb = C.action.mul(Matrix.identity(f, C.over.dim).kron(K_basis))
    action_k = solve_columns(K_basis, act_amb)
    if action_k is None:
        raise NotBStable("action does not restrict to the subspace")
    counit_k = C.base.counit.mul(K_basis) if C.base.counit is not None else None
    names = [f"k{i}" for i in range(kdim)]
    desc = BialgebraDesc(f, names, "coalgebra", comult=comult_k, counit=counit_k)
    return ModuleCoalgebra(desc, C.over, action_k)


def quotient_ses(C, K_gens, mode):
    """Validate a B-stable subcoalgebra/coideal and build the quotient.

    Searches for a B-linear splitting of C ->> C/K and records None when the
    intertwiner system is inconsistent.
    """
    if mode not in ("subcoalgebra", "coideal"):
        raise ParseError(f"unknown SES mode {mode!r}")
    B, Cdesc = C.over, C.base
    f = Cdesc.field
    n = Cdesc.dim
    if K_gens.rows != n:
        raise ShapeMismatch("K generators do not live in C")
    ksub = SubSpace.from_columns(K_gens)
    K_basis = ksub.basis_matrix()
    kdim = K_basis.cols

    # B-stability
    for b in range(B.dim):
        act_b = C.action_of(b)
        if not ksub.contains_columns(act_b.mul(K_basis)):
            raise NotBStable(f"action of basis element {B.basis[b]} leaves the subspace")

    # mode condition
    delta_K = Cdesc.comult.mul(K_basis)
    if mode == "subcoalgebra":
        kxk = SubSpace.from_columns(K_basis.kron(K_basis))
        if not kxk.contains_columns(delta_K):
            raise NotSubcoalgebra("comultiplication does not map K into K (x) K")
    else:
        mixed = SubSpace.from_columns(
            K_basis.kron(Matrix.identity(f, n)).hstack(Matrix.identity(f, n).kron(K_basis)))
        if not mixed.contains_columns(delta_K):
            raise NotCoideal("comultiplication does not map K into K (x) C + C (x) K")
        if Cdesc.counit is not None and not Cdesc.counit.mul(K_basis).is_zero():
            raise NotCoideal("counit does not vanish on K")
    K_counit_zero = Cdesc.counit is None or Cdesc.counit.mul(K_basis).is_zero()

    # quotient structure on a complement basis
    qspace = QuotientSpace(f, n, K_basis.columns())
    proj, sec = qspace.projection, qspace.section
    qdim = qspace.dim
    comult_q = proj.kron(proj).mul(Cdesc.comult).mul(sec)
    # representative independence: K must die under (proj (x) proj) . comult
    if not proj.kron(proj).mul(delta_K).is_zero():
        raise NotCoideal("quotient comultiplication is not well-defined")
    counit_q = None
    if Cdesc.counit is not None:
        cand = Cdesc.counit.mul(sec)
        iq = Matrix.identity(f, qdim)
        if (cand.kron(iq).mul(comult_q) == iq and iq.kron(cand).mul(comult_q) == iq):
            counit_q = cand
    names = [f"q{i}" for i in range(qdim)]
    qdesc = BialgebraDesc(f, names, "coalgebra", comult=comult_q, counit=counit_q)
    action_q = proj.mul(C.action).mul(Matrix.identity(f, B.dim).kron(sec))
    quotient_mc = ModuleCoalgebra(qdesc, B, action_q)

    b_splitting = _find_b_linear_section(C, quotient_mc, proj)
    return CoalgebraSES(C, K_basis, quotient_mc, mode, qspace, b_splitting, K_counit_zero)


def _find_b_linear_section(C, quotient_mc, proj):
    """Solve proj . s = id with s . L_b = L_b . s for all basis b, or None."""
    B = C.over
    f = B.field
    n, q = C.dim, quotient_mc.dim
    constraints = [([(proj, Matrix.identity(f, q))], Matrix.identity(f, q))]
    for b in range(B.dim):
        act_b = C.action_of(b)
        act_qb = quotient_mc.action_of(b)
        constraints.append(
            ([(Matrix.identity(f, n), act_qb), (act_b.neg(), Matrix.identity(f, q))],
             Matrix.zero(f, n, q)))
    return solve_matrix_system(f, n, q, constraints)


def solve_matrix_system(field, m, n, constraints):
    """Solve sum_k A_k U B_k = R (several constraints) for an m x n unknown U.

    Each constraint is ``(terms, R)`` with ``terms`` a list of (A, B) pairs.
    Returns U as a Matrix, or None when inconsistent. Unknowns are vectorized
    row-major: U[i, j] -> i * n + j.
    """
    f = field
    rows = []
    rhs_entries = []
    rowcount = 0
    for terms, R in constraints:
        out_rows = R.rows
        out_cols = R.cols
        # coefficient of U[i,j] in constraint entry (r, c): sum_k A_k[r,i] B_k[j,c]
        coeff = {}
        for A, Bm in terms:
            if A.rows != out_rows or A.cols != m or Bm.rows != n or Bm.cols != out_cols:
                raise ShapeMismatch("constraint term shapes do not match")
            for r, arow in A.rowdict.items():
                for i, av in arow.items():
                    for j, brow in Bm.rowdict.items():
                        for c, bv in brow.items():
                            key = (r, c)
                            slot = coeff.setdefault(key, {})
                            w = f.add(slot.get(i * n + j, f.zero), f.mul(av, bv))
                            if w == f.zero:
                                slot.pop(i * n + j, None)
                            else:
                                slot[i * n + j] = w
        for (r, c), slot in sorted(coeff.items()):
            rows.append((rowcount, slot))
            v = R.rowdict.get(r, {}).get(c, f.zero)
            if v != f.zero:
                rhs_entries.append((rowcount, 0, v))
            rowcount += 1
        # rows of R with no unknown coefficients must be zero for consistency
        for r, rrow in R.rowdict.items():
            for c, v in rrow.items():
                if (r, c) not in coeff and v != f.zero:
                    return None
    A_big = Matrix(f, rowcount, m * n, {i: dict(s) for i, s in rows if s})
    rhs = Matrix.from_entries(f, rowcount, 1, rhs_entries)
    x = solve_columns(A_big, rhs)
    if x is None:
        return None
    col = x.col(0)
    return Matrix.from_entries(f, m, n, [(k // n, k % n, v) for k, v in col.items()])


# ---------------------------------------------------------------------------
# Probes
# ---------------------------------------------------------------------------


def h_counitality_probe(C_desc, maxdeg):
    """Homology dims of the bar complex of C through degree maxdeg.

    All zeros means "H-counital up to maxdeg"; acyclicity beyond the
    truncation is never claimed.
    """
    from .complexes import bar_complex  # local import: complexes builds on this module

    if maxdeg < 1:
        raise ShapeMismatch("probe needs maxdeg >= 1")
    cx = bar_complex(C_desc, maxdeg + 1)
    return [cx.homology(n) for n in range(maxdeg + 1)]


def is_projective(B, action, dim):
    """True iff the action epimorphism B (x) P -> P splits B-linearly.

    When B carries a normalized co-integral the Maschke-style shortcut says
    yes; the direct intertwiner solve runs regardless and the two must agree.
    """
    from .hopf import find_integral

    f = B.field
    I_P = Matrix.identity(f, dim)
    constraints = [([(action, I_P)], I_P)]
    big = B.dim * dim
    for b in range(B.dim):
        act_b = action_of_basis(action, B.dim, dim, b)
        lb_free = left_mult_matrix(B, b).kron(I_P)
        constraints.append(
            ([(Matrix.identity(f, big), act_b), (lb_free.neg(), I_P)], Matrix.zero(f, big, dim)))
    section = solve_matrix_system(f, big, dim, constraints)
    direct = section is not None
    if B.unit is not None and B.counit is not None and B.level in ("bialgebra", "hopf"):
        if find_integral(B, "cointegral") is not None and not direct:
            raise ShapeMismatch("co-integral shortcut disagrees with the direct section solve")
    return direct


# ---------------------------------------------------------------------------
# Direct sums (fixture machinery)
# ---------------------------------------------------------------------------


def direct_sum_coalgebras(a, b):
    """Componentwise direct sum of two coalgebra descriptions."""
    f = a.field
    if f != b.field:
        raise ShapeMismatch("direct sum needs a common field")
    na, nb = a.dim, b.dim
    n = na + nb
    ents = []
    for jk, i, v in a.comult.entries():
        j, k = divmod(jk, na)
        ents.append((j * n + k, i, v))
    for jk, i, v in b.comult.entries():
        j, k = divmod(jk, nb)
        ents.append(((j + na) * n + (k + na), i + na, v))
    comult = Matrix.from_entries(f, n * n, n, ents)
    counit = None
    if a.counit is not None and b.counit is not None:
        ents = [(0, i, v) for _, i, v in a.counit.entries()]
        ents += [(0, i + na, v) for _, i, v in b.counit.entries()]
        counit = Matrix.from_entries(f, 1, n, ents)
    names = [f"l.{x}" for x in a.basis] + [f"r.{x}" for x in b.basis]
    return BialgebraDesc(f, names, "coalgebra", comult=comult, counit=counit)


def direct_sum_module_coalgebras(a, b):
    """Direct sum of module coalgebras over the same B, componentwise action."""
    if a.over is not b.over and a.over.mult != b.over.mult:
        raise ShapeMismatch("direct sum needs a common acting bialgebra")
    B = a.over
    f = B.field
    na, nb = a.dim, b.dim
    n = na + nb
    base = direct_sum_coalgebras(a.base, b.base)
    ents = []
    for i, col, v in a.action.entries():
        bb, c = divmod(col, na)
        ents.append((i, bb * n + c, v))
    for i, col, v in b.action.entries():
        bb, c = divmod(col, nb)
        ents.append((i + na, bb * n + (c + na), v))
    action = Matrix.from_entries(f, n, B.dim * n, ents)
    return ModuleCoalgebra(base, B, action)


def direct_sum_comodule_algebras(a, b):
    """Product algebra A_1 x A_2 with the componentwise coaction."""
    B = a.over
    f = B.field
    na, nb = a.dim, b.dim
    n = na + nb
    ents = []
    for i, col, v in a.base.mult.entries():
        x, y = divmod(col, na)
        ents.append((i, x * n + y, v))
    for i, col, v in b.base.mult.entries():
        x, y = divmod(col, nb)
        ents.append((i + na, (x + na) * n + (y + na), v))
    mult = Matrix.from_entries(f, n, n * n, ents)
    unit = None
    if a.base.unit is not None and b.base.unit is not None:
        ents = [(i, 0, v) for i, _, v in a.base.unit.entries()]
        ents += [(i + na, 0, v) for i, _, v in b.base.unit.entries()]
        unit = Matrix.from_entries(f, n, 1, ents)
    names = [f"l.{x}" for x in a.base.basis] + [f"r.{x}" for x in b.base.basis]
    desc = BialgebraDesc(f, names, "algebra", mult=mult, unit=unit)
    d = B.dim
    ents = []
    for row, i, v in a.coaction.entries():
        x, leg = divmod(row, d)
        ents.append((x * d + leg, i, v))
    for row, i, v in b.coaction.entries():
        x, leg = divmod(row, d)
        ents.append(((x + na) * d + leg, i + na, v))
    coaction = Matrix.from_entries(f, n * d, n, ents)
    return ComoduleAlgebra(desc, B, coaction)


def regular_comodule_algebra(B):
    """B over itself with the comultiplication as the right coaction."""
    return ComoduleAlgebra(B, B, B.comult)


def regular_module_coalgebra(B):
    """B over itself by left multiplication."""
    return ModuleCoalgebra(B, B, B.mult)


def eps_module_coalgebra(C_desc, B):
    """Any coalgebra as a B-module coalgebra through the counit action."""
    return ModuleCoalgebra(C_desc, B, counit_action(B, C_desc.dim))


