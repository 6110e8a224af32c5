"""Representations of Lie superalgebras.

Construction and verification, the dual and parity-reverse
representations, direct sums, and an exact even-intertwiner solver that
decides isomorphism by nullspace plus grid polynomial identity testing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .graded import (
    EVEN,
    ZERO,
    GradedLinearMap,
    SuperSpace,
    merge_spaces,
    sign,
    vec_add,
    vec_scale,
)
from .liesuper import CheckItem, CheckReport, LieSuperAlgebra


def check_representation(
    g: LieSuperAlgebra, space: SuperSpace, action: Sequence[GradedLinearMap]
) -> CheckReport:
    """Verify that the candidate action is a homogeneous Lie superalgebra
    homomorphism into gl(space); reports the first offending pair."""
    n = g.space.dim
    L = g.space.labels

    shape_item = CheckItem("action shape and parity", True)
    if len(action) != n:
        shape_item = CheckItem(
            "action shape and parity", False, f"expected {n} action maps, got {len(action)}"
        )
    else:
        for i, m in enumerate(action):
            if m.domain != space or m.codomain != space:
                shape_item = CheckItem(
                    "action shape and parity", False, f"action of {L[i]} acts on the wrong space"
                )
                break
            if m.parity != g.space.parities[i]:
                shape_item = CheckItem(
                    "action shape and parity",
                    False,
                    f"action of {L[i]} must have parity of {L[i]}",
                )
                break

    def mat_mul(a, b):
        d = len(a)
        return [
            [sum((a[r][m] * b[m][c] for m in range(d) if a[r][m] != 0), ZERO) for c in range(d)]
            for r in range(d)
        ]

    hom_item = CheckItem("homomorphism property", True)
    if shape_item.ok:
        d = space.dim
        mats = [m.matrix for m in action]
        for i in range(n):
            for j in range(n):
                s = sign(g.space.parities[i] * g.space.parities[j])
                ij = mat_mul(mats[i], mats[j])
                ji = mat_mul(mats[j], mats[i])
                ok = True
                for r in range(d):
                    for c in range(d):
                        lhs = sum(
                            (g.structure[i][j][k] * mats[k][r][c] for k in range(n)), ZERO
                        )
                        if lhs != ij[r][c] - s * ji[r][c]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    hom_item = CheckItem(
                        "homomorphism property",
                        False,
                        f"fails at pair ({L[i]}, {L[j]})",
                    )
                    break
            if not hom_item.ok:
                break

    return CheckReport((shape_item, hom_item))


@dataclass(frozen=True)
class Representation:
    """A verified action of a Lie superalgebra on a superspace.

    Verification runs at construction; downstream constructions may
    assume their inputs are genuine representations.
    """

    algebra: LieSuperAlgebra
    space: SuperSpace
    action: tuple[GradedLinearMap, ...]

    def __post_init__(self):
        report = check_representation(self.algebra, self.space, self.action)
        if not report.ok:
            raise ValueError(f"not a representation: {report.failures()[0].detail}")

    @staticmethod
    def from_images(g: LieSuperAlgebra, space: SuperSpace, images) -> "Representation":
        """images: {algebra label: {space label: {space label: coeff}}}."""
        action = []
        for i, lab in enumerate(g.space.labels):
            table = images.get(lab, {})
            action.append(
                GradedLinearMap.from_images(space, space, g.space.parities[i], table)
            )
        return Representation(g, space, tuple(action))

    def act(self, i: int, v):
        return self.action[i].apply(v)

    def apply_vec(self, x, v):
        """rho(x)v for an algebra coordinate vector x (applied termwise)."""
        out = (ZERO,) * self.space.dim
        for a, xa in enumerate(x):
            if xa == 0:
                continue
            out = vec_add(out, vec_scale(xa, self.action[a].apply(v)))
        return out


def adjoint(g: LieSuperAlgebra) -> Representation:
    return Representation(g, g.space, tuple(g.ad(i) for i in range(g.space.dim)))


def trivial_rep(g: LieSuperAlgebra, space: SuperSpace) -> Representation:
    action = tuple(
        GradedLinearMap.zero(space, space, g.space.parities[i]) for i in range(g.space.dim)
    )
    return Representation(g, space, action)


def dual_rep(rho: Representation) -> Representation:
    """(V*, rho*) with <rho*(x)u*, v> = -(-1)^{|x||u*|} <u*, rho(x)v>."""
    space = rho.space
    dual = space.dual()
    n = space.dim
    action = []
    for a, m in enumerate(rho.action):
        pa = rho.algebra.space.parities[a]
        mat = tuple(
            tuple(-sign(pa * space.parities[i]) * m.matrix[i][j] for i in range(n))
            for j in range(n)
        )
        action.append(GradedLinearMap(dual, dual, pa, mat))
    return Representation(rho.algebra, dual, tuple(action))


def coadjoint(g: LieSuperAlgebra) -> Representation:
    return dual_rep(adjoint(g))


def parity_reverse_rep(rho: Representation) -> Representation:
    """(sV, rho^s) with rho^s(x)(sv) = (-1)^{|x|} s(rho(x)v)."""
    space = rho.space
    svspace, perm = space.suspended_with_permutation()
    n = space.dim
    action = []
    for a, m in enumerate(rho.action):
        pa = rho.algebra.space.parities[a]
        s = sign(pa)
        grid = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if m.matrix[i][j] != 0:
                    grid[perm[i]][perm[j]] = s * m.matrix[i][j]
        action.append(GradedLinearMap(svspace, svspace, pa, tuple(tuple(r) for r in grid)))
    return Representation(rho.algebra, svspace, tuple(action))


def _sum_spaces(a: SuperSpace, b: SuperSpace):
    """Merge for direct sums; colliding labels fall back to pair notation."""
    if set(a.labels) & set(b.labels):
        a = SuperSpace(tuple(f"({l},0)" for l in a.labels), a.parities)
        b = SuperSpace(tuple(f"(0,{l})" for l in b.labels), b.parities)
    return merge_spaces(a, b)


def direct_sum_with_embeddings(rho1: Representation, rho2: Representation):
    """The block-diagonal sum plus the index embeddings of both summands."""
    rep, emb1, emb2 = _direct_sum_impl(rho1, rho2)
    return rep, emb1, emb2


def direct_sum_rep(rho1: Representation, rho2: Representation) -> Representation:
    """Block-diagonal action on the canonical merge of the two spaces."""
    return _direct_sum_impl(rho1, rho2)[0]


def _direct_sum_impl(rho1: Representation, rho2: Representation):
    if rho1.algebra != rho2.algebra:
        raise ValueError("direct sum requires representations of the same algebra")
    total, emb1, emb2 = _sum_spaces(rho1.space, rho2.space)
    n = total.dim
    action = []
    for a in range(rho1.algebra.space.dim):
        grid = [[ZERO] * n for _ in range(n)]
        m1 = rho1.action[a].matrix
        for i in range(rho1.space.dim):
            for j in range(rho1.space.dim):
                if m1[i][j] != 0:
                    grid[emb1[i]][emb1[j]] = m1[i][j]
        m2 = rho2.action[a].matrix
        for i in range(rho2.space.dim):
            for j in range(rho2.space.dim):
                if m2[i][j] != 0:
                    grid[emb2[i]][emb2[j]] = m2[i][j]
        action.append(
            GradedLinearMap(total, total, rho1.algebra.space.parities[a], tuple(tuple(r) for r in grid))
        )
    return Representation(rho1.algebra, total, tuple(action)), emb1, emb2


def self_reversing_double(rho: Representation) -> Representation:
    """V (+) sV with the summandwise action; always self-reversing."""
    return direct_sum_rep(rho, parity_reverse_rep(rho))


# ---------------------------------------------------------------------------
# even intertwiners and isomorphism testing


@dataclass(frozen=True)
class IsoSearchResult:
    """Outcome of the invertible-even-intertwiner search.

    status "found" carries the isomorphism and its exact inverse;
    "none" is a proof of non-isomorphism (grid PIT exhausted);
    "inconclusive" only arises in the randomized fallback.
    """

    status: str
    iso: "GradedLinearMap | None" = None
    inverse: "GradedLinearMap | None" = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def intertwiner_space(rho1: Representation, rho2: Representation) -> list[GradedLinearMap]:
    """Exact basis of {phi even : phi rho1(x) = rho2(x) phi for all x}."""
    if rho1.algebra != rho2.algebra:
        raise ValueError("intertwiners require a common algebra")
    V1, V2 = rho1.space, rho2.space
    # unknowns: entries (k, i) with |w_k| = |v_i| (phi is even)
    positions = [
        (k, i)
        for k in range(V2.dim)
        for i in range(V1.dim)
        if V2.parities[k] == V1.parities[i]
    ]
    pos_index = {p: t for t, p in enumerate(positions)}
    rows = []
    for a in range(rho1.algebra.space.dim):
        m1 = rho1.action[a].matrix
        m2 = rho2.action[a].matrix
        # (phi m1 - m2 phi)[k][j] = sum_i phi[k][i] m1[i][j] - sum_l m2[k][l] phi[l][j]
        for k in range(V2.dim):
            for j in range(V1.dim):
                row = [ZERO] * len(positions)
                for i in range(V1.dim):
                    if m1[i][j] != 0 and (k, i) in pos_index:
                        row[pos_index[(k, i)]] += m1[i][j]
                for l in range(V2.dim):
                    if m2[k][l] != 0 and (l, j) in pos_index:
                        row[pos_index[(l, j)]] -= m2[k][l]
                if any(x != 0 for x in row):
                    rows.append(row)
    basis_raw = linalg.nullspace(rows, ncols=len(positions))
    result = []
    for v in basis_raw:
        grid = [[ZERO] * V1.dim for _ in range(V2.dim)]
        for t, (k, i) in enumerate(positions):
            grid[k][i] = v[t]
        result.append(GradedLinearMap(V1, V2, EVEN, tuple(tuple(r) for r in grid)))
    return result


_RANDOM_FALLBACK_TRIES = 200
_GRID_DIMENSION_LIMIT = 6


def find_even_isomorphism(rho1: Representation, rho2: Representation) -> IsoSearchResult:
    """Search the even intertwiner space for an invertible element.

    det(sum t_a phi_a) has total degree <= dim V, so vanishing on the full
    grid {0..dim V}^k proves there is no invertible intertwiner; the grid
    is scanned lazily in lexicographic order and the first hit is
    returned.  For k > 6 a deterministic randomized fallback runs instead
    and absence is reported as "inconclusive"."""
    V1, V2 = rho1.space, rho2.space
    if (V1.even_dim, V1.odd_dim) != (V2.even_dim, V2.odd_dim):
        return IsoSearchResult("none")
    basis = intertwiner_space(rho1, rho2)
    k = len(basis)
    if k == 0:
        if V1.dim == 0:
            empty = GradedLinearMap.zero(V1, V2, EVEN)
            return IsoSearchResult("found", empty, GradedLinearMap.zero(V2, V1, EVEN))
        return IsoSearchResult("none")
    n = V1.dim
    mats = [b.matrix for b in basis]

    def combination(ts):
        grid = [[ZERO] * n for _ in range(n)]
        for t, m in zip(ts, mats):
            if t == 0:
                continue
            for i in range(n):
                row = m[i]
                gi = grid[i]
                for j in range(n):
                    if row[j] != 0:
                        gi[j] += t * row[j]
        return grid

    def attempt(ts):
        grid = combination(ts)
        if linalg.det(grid) == 0:
            return None
        phi = GradedLinearMap(V1, V2, EVEN, tuple(tuple(r) for r in grid))
        return IsoSearchResult("found", phi, phi.inverse())

    if k <= _GRID_DIMENSION_LIMIT:
        for ts in itertools.product(range(n + 1), repeat=k):
            hit = attempt(ts)
            if hit is not None:
                return hit
        return IsoSearchResult("none")

    rng = random.Random(0x5EBE)  # deterministic fallback
    for _ in range(_RANDOM_FALLBACK_TRIES):
        ts = [rng.randrange(0, 1 << 20) for _ in range(k)]
        hit = attempt(ts)
        if hit is not None:
            return hit
    return IsoSearchResult("inconclusive")


def is_intertwiner(phi: GradedLinearMap, rho1: Representation, rho2: Representation) -> bool:
    """phi rho1(x) = rho2(x) phi on every algebra basis element."""
    if phi.domain != rho1.space or phi.codomain != rho2.space:
        return False
    for a in range(rho1.algebra.space.dim):
        if phi.compose(rho1.action[a]).matrix != rho2.action[a].compose(phi).matrix:
            return False
    return True


def is_self_reversing(rho: Representation) -> IsoSearchResult:
    return find_even_isomorphism(rho, parity_reverse_rep(rho))


def is_self_dual(rho: Representation) -> IsoSearchResult:
    return find_even_isomorphism(rho, dual_rep(rho))
