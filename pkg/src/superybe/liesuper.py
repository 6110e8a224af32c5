"""Lie superalgebras by structure constants.

Axiom verification, bilinear-form classification, the semidirect product
with a module, and the transport between O-operators for the coadjoint
action and Rota-Baxter operators along an even invariant form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, TYPE_CHECKING

from . import linalg
from .graded import (
    EVEN,
    ZERO,
    GradedLinearMap,
    Parity,
    RationalLike,
    Scalar,
    SuperSpace,
    merge_spaces,
    parity_name,
    rat,
    sign,
    vec_scale,
)

if TYPE_CHECKING:
    from .reps import Representation


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    """Per-axiom pass/fail with the first offending witness."""

    items: tuple[CheckItem, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.ok]

    def __str__(self):
        lines = []
        for item in self.items:
            status = "pass" if item.ok else "FAIL"
            suffix = f" ({item.detail})" if item.detail else ""
            lines.append(f"{item.name}: {status}{suffix}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LieSuperAlgebra:
    """Structure constants c_ij^k with [e_i, e_j] = sum_k c_ij^k e_k."""

    space: SuperSpace
    structure: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self):
        n = self.space.dim
        if len(self.structure) != n or any(
            len(row) != n or any(len(entry) != n for entry in row) for row in self.structure
        ):
            raise ValueError("structure constant shape mismatch")

    @staticmethod
    def from_brackets(
        space: SuperSpace,
        brackets: Mapping["tuple[str, str]", Mapping[str, RationalLike]],
    ) -> "LieSuperAlgebra":
        """Build from i <= j bracket entries; the rest follow from the sign
        rule c_ji^k = -(-1)^{|e_i||e_j|} c_ij^k.  Rejects i > j entries and
        nonzero even diagonals, which super skew-symmetry forbids."""
        n = space.dim
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), terms in brackets.items():
            i, j = space.index(a), space.index(b)
            if i > j:
                raise ValueError(
                    f"bracket [{a}, {b}] given out of order; supply the i <= j entry"
                )
            value = space.vector(terms)
            if i == j and space.parities[i] == EVEN and any(x != 0 for x in value):
                raise ValueError(f"[{a}, {a}] must vanish for even {a}")
            for k, x in enumerate(value):
                c[i][j][k] = x
        for i in range(n):
            for j in range(i + 1, n):
                s = sign(space.parities[i] * space.parities[j])
                for k in range(n):
                    c[j][i][k] = -s * c[i][j][k]
        return LieSuperAlgebra(space, tuple(tuple(tuple(r) for r in p) for p in c))

    @property
    def dim(self) -> int:
        return self.space.dim

    def bracket_basis(self, i: int, j: int) -> tuple[Scalar, ...]:
        return self.structure[i][j]

    def bracket(self, x, y) -> tuple[Scalar, ...]:
        """[x, y] for coordinate vectors x, y."""
        n = self.space.dim
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cij = self.structure[i][j]
                coeff = xi * yj
                for k in range(n):
                    if cij[k] != 0:
                        out[k] += coeff * cij[k]
        return tuple(out)

    def ad(self, i: int) -> GradedLinearMap:
        """The adjoint action of the i-th basis element."""
        n = self.space.dim
        m = tuple(
            tuple(self.structure[i][j][k] for j in range(n)) for k in range(n)
        )
        return GradedLinearMap(self.space, self.space, self.space.parities[i], m)

    def is_abelian(self) -> bool:
        return all(
            c == 0 for plane in self.structure for row in plane for c in row
        )


def check_lie_axioms(g: LieSuperAlgebra) -> CheckReport:
    """Verify parity consistency, super skew-symmetry and the super Jacobi
    identity exhaustively; each axiom reports its first offending triple."""
    space = g.space
    n = space.dim
    L = space.labels
    P = space.parities

    parity_item = CheckItem("parity consistency", True)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if g.structure[i][j][k] != 0 and P[k] != (P[i] + P[j]) % 2:
                    parity_item = CheckItem(
                        "parity consistency",
                        False,
                        f"[{L[i]}, {L[j]}] has a component along {L[k]} of wrong parity",
                    )
                    break
            if not parity_item.ok:
                break
        if not parity_item.ok:
            break

    skew_item = CheckItem("super skew-symmetry", True)
    for i in range(n):
        for j in range(n):
            s = sign(P[i] * P[j])
            for k in range(n):
                if g.structure[i][j][k] != -s * g.structure[j][i][k]:
                    skew_item = CheckItem(
                        "super skew-symmetry",
                        False,
                        f"[{L[i]}, {L[j]}] != -(-1)^(|{L[i]}||{L[j]}|) [{L[j]}, {L[i]}]",
                    )
                    break
            if not skew_item.ok:
                break
        if not skew_item.ok:
            break

    jacobi_item = CheckItem("super Jacobi", True)
    for i in range(n):
        ei = space.basis_vector(i)
        for j in range(n):
            ej = space.basis_vector(j)
            for k in range(n):
                ek = space.basis_vector(k)
                lhs = g.bracket(ei, g.bracket(ej, ek))
                rhs1 = g.bracket(g.bracket(ei, ej), ek)
                rhs2 = vec_scale(sign(P[i] * P[j]), g.bracket(ej, g.bracket(ei, ek)))
                if any(a != b + c for a, b, c in zip(lhs, rhs1, rhs2)):
                    jacobi_item = CheckItem(
                        "super Jacobi",
                        False,
                        f"fails at triple ({L[i]}, {L[j]}, {L[k]})",
                    )
                    break
            if not jacobi_item.ok:
                break
        if not jacobi_item.ok:
            break

    return CheckReport((parity_item, skew_item, jacobi_item))


# ---------------------------------------------------------------------------
# bilinear forms


@dataclass(frozen=True)
class BilinearForm:
    """A homogeneous bilinear form given by its Gram matrix beta(e_i, e_j).

    An even form vanishes on mixed-parity pairs, an odd form on
    equal-parity pairs.
    """

    space: SuperSpace
    gram: tuple[tuple[Scalar, ...], ...]
    parity: Parity

    def __post_init__(self):
        n = self.space.dim
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("Gram matrix shape mismatch")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != 0 and (
                    (self.space.parities[i] + self.space.parities[j]) % 2 != self.parity
                ):
                    raise ValueError(
                        f"form entry ({self.space.labels[i]}, {self.space.labels[j]}) "
                        f"violates declared parity {parity_name(self.parity)}"
                    )

    @staticmethod
    def from_terms(space, terms: Mapping["tuple[str, str]", RationalLike], parity: Parity):
        n = space.dim
        grid = [[ZERO] * n for _ in range(n)]
        for (a, b), c in terms.items():
            grid[space.index(a)][space.index(b)] = rat(c)
        return BilinearForm(space, tuple(tuple(r) for r in grid), parity)

    def value(self, i: int, j: int) -> Scalar:
        return self.gram[i][j]


@dataclass(frozen=True)
class FormFlags:
    supersymmetric: bool
    skew_supersymmetric: bool
    invariant: bool
    two_cocycle: bool
    non_degenerate: bool

    def as_dict(self):
        return {
            "supersymmetric": self.supersymmetric,
            "skew-supersymmetric": self.skew_supersymmetric,
            "invariant": self.invariant,
            "two-cocycle": self.two_cocycle,
            "non-degenerate": self.non_degenerate,
        }


def classify_form(beta: BilinearForm, g: LieSuperAlgebra) -> FormFlags:
    """Decide the five standard flags by exhaustive basis evaluation."""
    if beta.space != g.space:
        raise ValueError("form does not live on the algebra's space")
    space = g.space
    n = space.dim
    P = space.parities
    B = beta.gram

    supersym = all(
        B[i][j] == sign(P[i] * P[j]) * B[j][i] for i in range(n) for j in range(n)
    )
    skew = all(
        B[i][j] == -sign(P[i] * P[j]) * B[j][i] for i in range(n) for j in range(n)
    )

    def beta_vec(x, y) -> Scalar:
        total = ZERO
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj != 0 and B[i][j] != 0:
                    total += xi * yj * B[i][j]
        return total

    invariant = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum(
                    (g.structure[i][j][m] * B[m][k] for m in range(n)), ZERO
                )
                rhs = sum(
                    (B[i][m] * g.structure[j][k][m] for m in range(n)), ZERO
                )
                if lhs != rhs:
                    invariant = False
                    break
            if not invariant:
                break
        if not invariant:
            break

    cocycle = skew
    if cocycle:
        for i in range(n):
            ei = space.basis_vector(i)
            for j in range(n):
                ej = space.basis_vector(j)
                for k in range(n):
                    ek = space.basis_vector(k)
                    lhs = beta_vec(g.bracket(ei, ej), ek)
                    rhs = sign(P[j] * P[k]) * beta_vec(g.bracket(ei, ek), ej) + beta_vec(
                        ei, g.bracket(ej, ek)
                    )
                    if lhs != rhs:
                        cocycle = False
                        break
                if not cocycle:
                    break
            if not cocycle:
                break

    nondeg = linalg.rank([list(r) for r in B]) == n
    return FormFlags(supersym, skew, invariant, cocycle, nondeg)


# ---------------------------------------------------------------------------
# semidirect product


def semidirect_labels(g_space: SuperSpace, module_space: SuperSpace):
    """Deterministic labels for the two embedded summands of g (+) V.

    Plain labels when disjoint; pair notation (x,0) / (0,v) on collision.
    """
    if set(g_space.labels) & set(module_space.labels):
        alg = tuple(f"({l},0)" for l in g_space.labels)
        mod = tuple(f"(0,{l})" for l in module_space.labels)
    else:
        alg = g_space.labels
        mod = module_space.labels
    return alg, mod


def semidirect_product(g: LieSuperAlgebra, rho: "Representation") -> LieSuperAlgebra:
    """g |x V with [(x,u), (y,v)] = ([x,y], rho(x)v - (-1)^{|u||y|} rho(y)u).

    Basis order: g first, then the module, re-sorted into canonical parity
    blocks.  The adjoint summand gets pair labels to avoid collisions.
    """
    if rho.algebra != g:
        raise ValueError("representation is not over this algebra")
    V = rho.space
    alg_labels, mod_labels = semidirect_labels(g.space, V)
    a_space = SuperSpace(alg_labels, g.space.parities)
    m_space = SuperSpace(mod_labels, V.parities)
    total, alg_embed, mod_embed = merge_spaces(a_space, m_space)

    n = total.dim
    ng = g.space.dim
    nv = V.dim
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]

    for i in range(ng):
        for j in range(ng):
            for k in range(ng):
                v = g.structure[i][j][k]
                if v != 0:
                    c[alg_embed[i]][alg_embed[j]][alg_embed[k]] = v

    for a in range(ng):
        act = rho.action[a]
        for i in range(nv):
            col = act.column(i)
            s = sign(V.parities[i] * g.space.parities[a])
            for k in range(nv):
                if col[k] != 0:
                    c[alg_embed[a]][mod_embed[i]][mod_embed[k]] = col[k]
                    c[mod_embed[i]][alg_embed[a]][mod_embed[k]] = -s * col[k]

    return LieSuperAlgebra(total, tuple(tuple(tuple(r) for r in p) for p in c))


# ---------------------------------------------------------------------------
# transport along an even invariant form


def form_to_dual_map(beta: BilinearForm, g: LieSuperAlgebra) -> GradedLinearMap:
    """phi: g -> g* with <phi(x), y> = beta(x, y), for an even
    supersymmetric invariant non-degenerate form."""
    flags = classify_form(beta, g)
    problems = []
    if beta.parity != EVEN:
        problems.append("not even")
    if not flags.supersymmetric:
        problems.append("not supersymmetric")
    if not flags.invariant:
        problems.append("not invariant")
    if not flags.non_degenerate:
        problems.append("degenerate")
    if problems:
        raise ValueError("form unsuitable for transport: " + ", ".join(problems))
    n = g.space.dim
    m = tuple(tuple(beta.gram[i][j] for i in range(n)) for j in range(n))
    return GradedLinearMap(g.space, g.space.dual(), EVEN, m)


def rota_baxter_transport(t: GradedLinearMap, phi: GradedLinearMap) -> GradedLinearMap:
    """T on (g*, ad*) composed with phi, a weight-0 Rota-Baxter candidate."""
    return t.compose(phi)
