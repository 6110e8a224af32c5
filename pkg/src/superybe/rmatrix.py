"""Super r-matrices and the super classical Yang-Baxter equation.

Pan-supersymmetry, the CYBE defect 3-tensor, both directions of the
r-matrix <-> O-operator correspondence, the induced coadjoint operators,
the 2-cocycle characterization of non-degenerate solutions, the +/- tree
hierarchy, and the same-algebra parity pair for self-reversing
representations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .graded import (
    EVEN,
    ZERO,
    GradedLinearMap,
    Parity,
    SuperSpace,
    Tensor2,
    Tensor3,
    sign,
    suspend_map,
    twist,
)
from .liesuper import (
    BilinearForm,
    LieSuperAlgebra,
    classify_form,
    semidirect_labels,
    semidirect_product,
)
from .oop import _check_candidate, is_intertwiner
from .reps import Representation, adjoint, dual_rep, parity_reverse_rep


@dataclass(frozen=True)
class RMatrix:
    """A homogeneous 2-tensor over a Lie superalgebra."""

    algebra: LieSuperAlgebra
    tensor: Tensor2

    def __post_init__(self):
        if self.tensor.left != self.algebra.space or self.tensor.right != self.algebra.space:
            raise ValueError("tensor does not live on the algebra's space")
        if self.tensor.parity is None:
            raise ValueError("r-matrix candidates must be homogeneous")

    @staticmethod
    def from_terms(g: LieSuperAlgebra, terms, parity: "Parity | None" = None) -> "RMatrix":
        t = Tensor2.from_terms(g.space, g.space, terms, parity)
        if t.parity is None:
            # zero tensor with no declared parity defaults to even
            t = Tensor2(t.left, t.right, t.coeffs, EVEN)
        return RMatrix(g, t)

    @property
    def parity(self) -> Parity:
        return self.tensor.parity

    @property
    def space(self) -> SuperSpace:
        return self.algebra.space


def is_pan_supersymmetric(r: RMatrix) -> bool:
    """sigma(r) = -(-1)^{|r|} r: even skew-supersymmetric or odd
    supersymmetric."""
    return twist(r.tensor).coeffs == r.tensor.scale(-sign(r.parity)).coeffs


def scybe_defect(r: RMatrix, threads: "int | None" = None) -> Tensor3:
    """[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23] as a 3-tensor.

    The three term families carry the displayed Koszul signs: the factor
    (-1)^{|y_i||x_j|} on the first and third, none on the second.
    """
    g = r.algebra
    space = g.space
    n = space.dim
    P = space.parities
    entries = list(r.tensor.nonzero())

    def accumulate(pairs):
        grid = Tensor3.zero_grid(n)
        for (i, j), a in pairs:
            for (k, l), b in entries:
                coeff = a * b
                s = sign(P[j] * P[k])
                c1 = g.structure[i][k]
                for m in range(n):
                    if c1[m] != 0:
                        grid[m][j][l] += s * coeff * c1[m]
                c2 = g.structure[j][k]
                for m in range(n):
                    if c2[m] != 0:
                        grid[i][m][l] += coeff * c2[m]
                c3 = g.structure[j][l]
                for m in range(n):
                    if c3[m] != 0:
                        grid[i][k][m] += s * coeff * c3[m]
        return grid

    if not threads or threads <= 1 or len(entries) < 2:
        return Tensor3.from_grid(space, accumulate(entries))

    chunk = max(1, (len(entries) + threads - 1) // threads)
    parts = [entries[lo : lo + chunk] for lo in range(0, len(entries), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        grids = list(pool.map(accumulate, parts))
    total = Tensor3.zero_grid(n)
    for grid in grids:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    total[i][j][k] += grid[i][j][k]
    return Tensor3.from_grid(space, total)


def is_super_rmatrix(r: RMatrix, threads: "int | None" = None) -> bool:
    return scybe_defect(r, threads=threads).is_zero()


# ---------------------------------------------------------------------------
# tensor <-> operator


def rmatrix_to_operator(r: RMatrix) -> GradedLinearMap:
    """T_r: g* -> g with T_r(e_i*) = (-1)^{|e_i*|} sum_j a_ji e_j."""
    space = r.space
    n = space.dim
    a = r.tensor.coeffs
    m = tuple(
        tuple(sign(space.parities[i]) * a[j][i] for i in range(n)) for j in range(n)
    )
    return GradedLinearMap(space.dual(), space, r.parity, m)


def operator_to_tensor(t: GradedLinearMap) -> Tensor2:
    """Inverse of rmatrix_to_operator: the 2-tensor a map g* -> g encodes."""
    space = t.codomain
    if t.domain != space.dual():
        raise ValueError("expected a map dual(g) -> g")
    n = space.dim
    a = tuple(
        tuple(sign(space.parities[q]) * t.matrix[p][q] for q in range(n)) for p in range(n)
    )
    return Tensor2(space, space, a, t.parity)


# ---------------------------------------------------------------------------
# O-operator -> r-matrix in a semidirect product


# the semidirect hosts depend only on the representation, not on the
# operator; cache them so bulk verdict checks do not rebuild and reverify
@lru_cache(maxsize=None)
def _plain_semidirect(rho: Representation):
    rho_star = dual_rep(rho)
    h = semidirect_product(rho.algebra, rho_star)
    alg_labels, mod_labels = semidirect_labels(rho.algebra.space, rho_star.space)
    return h, alg_labels, mod_labels


@lru_cache(maxsize=None)
def _dual_semidirect(rho: Representation):
    srho = parity_reverse_rep(rho)
    srho_star = dual_rep(srho)
    h = semidirect_product(rho.algebra, srho_star)
    alg_labels, mod_labels = semidirect_labels(rho.algebra.space, srho_star.space)
    _, perm = rho.space.suspended_with_permutation()
    return h, alg_labels, mod_labels, perm


def operator_to_rmatrix(
    t: GradedLinearMap, rho: Representation, variant: str = "plain"
) -> RMatrix:
    """The pan-supersymmetric tensor a homogeneous map V -> g induces.

    plain: r_T = sum_i (T v_i (x) v_i* + (-1)^{(|T|+1)(|v_i|+1)} v_i* (x) T v_i)
           in g |x_{rho*} V*, parity |T|;
    dual:  r_{T^s} = sum_i (T v_i (x) (s v_i)* + (-1)^{|T||v_i|} (s v_i)* (x) T v_i)
           in g |x_{(rho^s)*} (sV)*, parity |T| + 1.

    The tensor solves the super CYBE exactly when T satisfies the
    O-operator identity.
    """
    _check_candidate(t, rho)
    V = rho.space
    pt = t.parity
    terms: dict = {}
    if variant == "plain":
        h, alg_labels, mod_labels = _plain_semidirect(rho)
        parity = pt
        for i in range(V.dim):
            col = t.column(i)
            s = sign((pt + 1) * (V.parities[i] + 1))
            for k, x in enumerate(col):
                if x != 0:
                    key = (alg_labels[k], mod_labels[i])
                    terms[key] = terms.get(key, ZERO) + x
                    key = (mod_labels[i], alg_labels[k])
                    terms[key] = terms.get(key, ZERO) + s * x
    elif variant == "dual":
        h, alg_labels, mod_labels, perm = _dual_semidirect(rho)
        parity = pt ^ 1
        for i in range(V.dim):
            col = t.column(i)
            s = sign(pt * V.parities[i])
            slot = mod_labels[perm[i]]
            for k, x in enumerate(col):
                if x != 0:
                    key = (alg_labels[k], slot)
                    terms[key] = terms.get(key, ZERO) + x
                    key = (slot, alg_labels[k])
                    terms[key] = terms.get(key, ZERO) + s * x
    else:
        raise ValueError(f"unknown variant {variant!r}")
    tensor = Tensor2.from_terms(h.space, h.space, terms, parity)
    return RMatrix(h, tensor)


def induced_coadjoint_operator(
    t: GradedLinearMap, rho: Representation, variant: str = "plain"
) -> GradedLinearMap:
    """The operator the induced tensor defines on the semidirect product,
    written directly on dual(h):

    plain: (v_i*)* -> (-1)^{|v_i|} T(v_i),      e_j* -> -(-1)^{|T|} T*(e_j*);
    dual:  ((sv_i)*)* -> (-1)^{|v_i|+1} T(v_i), e_j* -> (-1)^{|T|} (T^s)*(e_j*).

    It is an O-operator for the coadjoint representation of h exactly when
    T satisfies the identity; it equals rmatrix_to_operator of the induced
    tensor under the double-dual identification.
    """
    from .graded import dual_map

    _check_candidate(t, rho)
    V = rho.space
    g = rho.algebra
    pt = t.parity
    if variant == "plain":
        h, alg_labels, mod_labels = _plain_semidirect(rho)
        slot_of = {mod_labels[i]: i for i in range(V.dim)}
        tstar = dual_map(t)  # g* -> V*
        sgn_mod = lambda i: sign(V.parities[i])
        sgn_alg = -sign(pt)
        parity = pt
    elif variant == "dual":
        h, alg_labels, mod_labels, perm = _dual_semidirect(rho)
        slot_of = {mod_labels[perm[i]]: i for i in range(V.dim)}
        tstar = dual_map(suspend_map(t))  # g* -> (sV)*
        sgn_mod = lambda i: sign(V.parities[i] + 1)
        sgn_alg = sign(pt)
        parity = pt ^ 1
    else:
        raise ValueError(f"unknown variant {variant!r}")

    hspace = h.space
    alg_pos = {lab: k for k, lab in enumerate(alg_labels)}
    mod_pos = {lab: hspace.index(lab) for lab in mod_labels}
    cols = []
    for q, lab in enumerate(hspace.labels):
        col = [ZERO] * hspace.dim
        if lab in slot_of:
            i = slot_of[lab]
            image = t.column(i)
            s = sgn_mod(i)
            for k, x in enumerate(image):
                if x != 0:
                    col[hspace.index(alg_labels[k])] = s * x
        else:
            j = alg_pos[lab]
            image = tstar.column(j)  # coordinates over V* resp. (sV)*
            for m, x in enumerate(image):
                if x != 0:
                    col[mod_pos[mod_labels[m]]] = sgn_alg * x
        cols.append(tuple(col))
    return GradedLinearMap.from_columns(hspace.dual(), hspace, parity, cols)


# ---------------------------------------------------------------------------
# 2-cocycles from non-degenerate tensors


class DegenerateRMatrix(Exception):
    pass


def beta_form(r: RMatrix) -> BilinearForm:
    """beta_r(u, v) = <T_r^{-1} u, v> for non-degenerate r."""
    t = rmatrix_to_operator(r)
    if not t.is_invertible():
        raise DegenerateRMatrix("the tensor is degenerate (T_r is singular)")
    inv = t.inverse()  # g -> g*
    n = r.space.dim
    gram = tuple(tuple(inv.matrix[j][i] for j in range(n)) for i in range(n))
    return BilinearForm(r.space, gram, r.parity)


def beta_cocycle_check(r: RMatrix) -> "tuple[BilinearForm, bool]":
    """The induced form and whether (defect vanishes) == (2-cocycle).

    The boolean must always be true for pan-supersymmetric non-degenerate
    input; a false return is a library-bug sentinel.
    """
    beta = beta_form(r)
    flags = classify_form(beta, r.algebra)
    return beta, is_super_rmatrix(r) == flags.two_cocycle


# ---------------------------------------------------------------------------
# the +/- hierarchy


class HierarchyError(Exception):
    pass


def _step_plus(g: LieSuperAlgebra, r: RMatrix) -> RMatrix:
    rho = adjoint(g)
    h = semidirect_product(g, rho)  # g |x_ad g
    alg_labels, mod_labels = semidirect_labels(g.space, g.space)
    terms: dict = {}
    p = r.parity
    for (j, i), a in r.tensor.nonzero():
        # coefficient a_ji sits at tensor slot (j, i)
        s = sign((p + 1) * (g.space.parities[i] + 1))
        key = (alg_labels[j], mod_labels[i])
        terms[key] = terms.get(key, ZERO) + a
        key = (mod_labels[i], alg_labels[j])
        terms[key] = terms.get(key, ZERO) + s * a
    return RMatrix(h, Tensor2.from_terms(h.space, h.space, terms, p))


def _step_minus(g: LieSuperAlgebra, r: RMatrix) -> RMatrix:
    srho = parity_reverse_rep(adjoint(g))
    h = semidirect_product(g, srho)
    alg_labels, mod_labels = semidirect_labels(g.space, srho.space)
    _, perm = g.space.suspended_with_permutation()
    terms: dict = {}
    p = r.parity
    for (j, i), a in r.tensor.nonzero():
        s_i = sign(g.space.parities[i])
        s = sign(g.space.parities[i] * p)
        slot = mod_labels[perm[i]]
        key = (alg_labels[j], slot)
        terms[key] = terms.get(key, ZERO) + s_i * a
        key = (slot, alg_labels[j])
        terms[key] = terms.get(key, ZERO) + s_i * s * a
    return RMatrix(h, Tensor2.from_terms(h.space, h.space, terms, p ^ 1))


def hierarchy_trace(g: LieSuperAlgebra, r: RMatrix, word: str) -> list[RMatrix]:
    """Apply the letters of word left to right; one output per level.

    Requires a pan-supersymmetric solution of the super CYBE to start;
    every level then remains one.
    """
    if r.algebra != g:
        raise ValueError("tensor does not live over the given algebra")
    if not is_pan_supersymmetric(r):
        raise HierarchyError("the starting tensor is not pan-supersymmetric")
    if not is_super_rmatrix(r):
        raise HierarchyError("the starting tensor does not solve the super CYBE")
    levels = []
    current = r
    for letter in word:
        if letter == "+":
            current = _step_plus(current.algebra, current)
        elif letter == "-":
            current = _step_minus(current.algebra, current)
        else:
            raise HierarchyError(f"hierarchy word letters must be + or -, got {letter!r}")
        levels.append(current)
    return levels


def hierarchy_walk(g: LieSuperAlgebra, r: RMatrix, word: str) -> RMatrix:
    levels = hierarchy_trace(g, r, word)
    return levels[-1] if levels else r


# ---------------------------------------------------------------------------
# same-algebra parity pair


def same_algebra_pair(
    t: GradedLinearMap, rho: Representation, phi: GradedLinearMap
) -> "tuple[RMatrix, RMatrix]":
    """(r_T, r_{T^s}) both in g |x_{rho*} V*, for self-reversing (V, rho).

    phi must be an even invertible intertwiner V -> sV; the second tensor
    is induced by the transported operator T^s phi and satisfies
    r_{T^s} = sum_i (T^s phi(v_i) (x) v_i*
                     + (-1)^{|T|+|T||v_i|} v_i* (x) T^s phi(v_i)).
    """
    _check_candidate(t, rho)
    srho = parity_reverse_rep(rho)
    if phi.domain != rho.space or phi.codomain != srho.space:
        raise ValueError("phi must map V to sV")
    if not is_intertwiner(phi, rho, srho):
        raise ValueError("phi does not intertwine the representation and its reverse")
    if not phi.is_invertible():
        raise ValueError("phi is not invertible")
    r_plain = operator_to_rmatrix(t, rho, "plain")
    transported = suspend_map(t).compose(phi)
    r_dual = operator_to_rmatrix(transported, rho, "plain")
    return r_plain, r_dual
