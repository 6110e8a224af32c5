"""Exact Z2-graded linear algebra.

Superspaces with an ordered homogeneous basis, homogeneous linear maps,
2- and 3-index coefficient tensors, the suspension (parity reverse) and
dual constructions, and the canonical pairings with their Koszul signs.
Every scalar is an exact rational; equality everywhere is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

EVEN = 0
ODD = 1

Parity = int
Scalar = Fraction
RationalLike = Union[Fraction, int, str]
Vector = "tuple[Scalar, ...]"
Matrix = "tuple[tuple[Scalar, ...], ...]"

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: RationalLike) -> Scalar:
    """Coerce an int, a 'p' / 'p/q' string, or a Fraction to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def sign(exponent: int) -> int:
    """(-1)**exponent for a Z2 exponent computed as an integer."""
    return -1 if exponent % 2 else 1


def parity_name(p: Parity) -> str:
    return "even" if p % 2 == EVEN else "odd"


def suspend_label(name: str) -> str:
    """Toggle the suspension marker: e -> se, se -> e.

    The toggle is an involution on every string; labels that genuinely
    start with 's' should not be used for base spaces that get suspended.
    """
    if name.startswith("s") and len(name) > 1:
        return name[1:]
    return "s" + name


def dual_label(name: str) -> str:
    return name + "*"


# ---------------------------------------------------------------------------
# superspaces


@dataclass(frozen=True)
class SuperSpace:
    """An ordered homogeneous basis with a parity per basis element.

    Canonical block order is enforced: every even label precedes every
    odd label. All graded objects in the library live over these.
    """

    labels: tuple[str, ...]
    parities: tuple[Parity, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise ValueError("labels and parities differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels in {self.labels}")
        for p in self.parities:
            if p not in (EVEN, ODD):
                raise ValueError(f"parity must be 0 or 1, got {p!r}")
        seen_odd = False
        for p in self.parities:
            if p == ODD:
                seen_odd = True
            elif seen_odd:
                raise ValueError(
                    f"basis not in canonical block order (even block first): {self.labels}"
                )

    @staticmethod
    def make(even: Sequence[str] = (), odd: Sequence[str] = ()) -> "SuperSpace":
        labels = tuple(even) + tuple(odd)
        parities = (EVEN,) * len(even) + (ODD,) * len(odd)
        return SuperSpace(labels, parities)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return sum(1 for p in self.parities if p == EVEN)

    @property
    def odd_dim(self) -> int:
        return sum(1 for p in self.parities if p == ODD)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def parity(self, i: int) -> Parity:
        return self.parities[i]

    def basis_vector(self, i: int) -> tuple[Scalar, ...]:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def zero_vector(self) -> tuple[Scalar, ...]:
        return (ZERO,) * self.dim

    def vector(self, components: Mapping[str, RationalLike]) -> tuple[Scalar, ...]:
        out = [ZERO] * self.dim
        for label, value in components.items():
            out[self.index(label)] = rat(value)
        return tuple(out)

    def dual(self) -> "SuperSpace":
        # same index set, identical parities
        return SuperSpace(tuple(dual_label(l) for l in self.labels), self.parities)

    def suspended(self) -> "SuperSpace":
        space, _ = self.suspended_with_permutation()
        return space

    def suspended_with_permutation(self) -> "tuple[SuperSpace, tuple[int, ...]]":
        """The parity-reversed space and the permutation old index -> new index."""
        items = [(suspend_label(l), p ^ 1) for l, p in zip(self.labels, self.parities)]
        order = [i for i, (_, p) in enumerate(items) if p == EVEN]
        order += [i for i, (_, p) in enumerate(items) if p == ODD]
        perm = [0] * self.dim
        for new, old in enumerate(order):
            perm[old] = new
        labels = tuple(items[old][0] for old in order)
        parities = tuple(items[old][1] for old in order)
        return SuperSpace(labels, parities), tuple(perm)


def suspend_space(space: SuperSpace) -> SuperSpace:
    """Interchange the even and odd parts; labels get the toggled s-marker."""
    return space.suspended()


def dual_space(space: SuperSpace) -> SuperSpace:
    return space.dual()


def merge_spaces(a: SuperSpace, b: SuperSpace) -> "tuple[SuperSpace, tuple[int, ...], tuple[int, ...]]":
    """Concatenate two spaces (disjoint labels) and re-sort into canonical
    block order, stably, a's basis first.  Returns the merged space and the
    embeddings old-index -> merged-index for a and for b."""
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise ValueError(f"label collision while merging spaces: {sorted(clash)}")
    labels = a.labels + b.labels
    parities = a.parities + b.parities
    order = [i for i, p in enumerate(parities) if p == EVEN]
    order += [i for i, p in enumerate(parities) if p == ODD]
    position = [0] * len(labels)
    for new, old in enumerate(order):
        position[old] = new
    merged = SuperSpace(tuple(labels[o] for o in order), tuple(parities[o] for o in order))
    perm_a = tuple(position[: a.dim])
    perm_b = tuple(position[a.dim :])
    return merged, perm_a, perm_b


# ---------------------------------------------------------------------------
# vectors (plain tuples of Fractions relative to a SuperSpace)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v):
    if c == 1:
        return tuple(v)
    return tuple(c * x for x in v)


def vec_is_zero(v) -> bool:
    return all(x == 0 for x in v)


def vector_parity(space: SuperSpace, v) -> "Parity | None":
    """Common parity of the nonzero components, or None if mixed/zero-free."""
    parities = {space.parities[i] for i, x in enumerate(v) if x != 0}
    if len(parities) == 1:
        return parities.pop()
    return None


def format_vector(space: SuperSpace, v) -> str:
    terms = []
    for i, x in enumerate(v):
        if x != 0:
            terms.append(f"{x} {space.labels[i]}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# homogeneous linear maps


@dataclass(frozen=True)
class GradedLinearMap:
    """A homogeneous linear map between superspaces.

    The matrix is indexed (codomain basis x domain basis); homogeneity
    means entry (k, i) vanishes unless |cod_k| = |dom_i| + parity.
    """

    domain: SuperSpace
    codomain: SuperSpace
    parity: Parity
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.parity not in (EVEN, ODD):
            raise ValueError("map parity must be 0 or 1")
        if len(self.matrix) != self.codomain.dim:
            raise ValueError("matrix row count does not match codomain dimension")
        for row in self.matrix:
            if len(row) != self.domain.dim:
                raise ValueError("matrix column count does not match domain dimension")
        for k in range(self.codomain.dim):
            for i in range(self.domain.dim):
                if self.matrix[k][i] != 0 and (
                    self.codomain.parities[k] != (self.domain.parities[i] ^ self.parity)
                ):
                    raise ValueError(
                        f"inhomogeneous map: entry ({self.codomain.labels[k]}, "
                        f"{self.domain.labels[i]}) nonzero but parities disagree "
                        f"with declared map parity {parity_name(self.parity)}"
                    )

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(domain: SuperSpace, codomain: SuperSpace, parity: Parity) -> "GradedLinearMap":
        row = (ZERO,) * domain.dim
        return GradedLinearMap(domain, codomain, parity, (row,) * codomain.dim)

    @staticmethod
    def identity(space: SuperSpace) -> "GradedLinearMap":
        m = tuple(
            tuple(ONE if i == j else ZERO for j in range(space.dim)) for i in range(space.dim)
        )
        return GradedLinearMap(space, space, EVEN, m)

    @staticmethod
    def from_images(
        domain: SuperSpace,
        codomain: SuperSpace,
        parity: Parity,
        images: Mapping[str, Mapping[str, RationalLike]],
    ) -> "GradedLinearMap":
        """Build from a {domain label: {codomain label: coefficient}} table;
        omitted domain labels map to zero."""
        cols = {}
        for src, terms in images.items():
            cols[domain.index(src)] = codomain.vector(terms)
        m = tuple(
            tuple(cols.get(i, codomain.zero_vector())[k] for i in range(domain.dim))
            for k in range(codomain.dim)
        )
        return GradedLinearMap(domain, codomain, parity, m)

    @staticmethod
    def from_columns(domain, codomain, parity, columns) -> "GradedLinearMap":
        m = tuple(
            tuple(columns[i][k] for i in range(domain.dim)) for k in range(codomain.dim)
        )
        return GradedLinearMap(domain, codomain, parity, m)

    # -- evaluation ----------------------------------------------------

    def column(self, i: int) -> tuple[Scalar, ...]:
        """Image of the i-th domain basis vector."""
        return tuple(self.matrix[k][i] for k in range(self.codomain.dim))

    def apply(self, v) -> tuple[Scalar, ...]:
        out = [ZERO] * self.codomain.dim
        for i, x in enumerate(v):
            if x == 0:
                continue
            for k in range(self.codomain.dim):
                m = self.matrix[k][i]
                if m != 0:
                    out[k] += m * x
        return tuple(out)

    def image_of(self, label: str) -> tuple[Scalar, ...]:
        return self.column(self.domain.index(label))

    # -- algebra -------------------------------------------------------

    def compose(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """self after other; parities add."""
        if other.codomain != self.domain:
            raise ValueError("composition domain/codomain mismatch")
        cols = [self.apply(other.column(i)) for i in range(other.domain.dim)]
        return GradedLinearMap.from_columns(
            other.domain, self.codomain, (self.parity + other.parity) % 2, cols
        )

    def __add__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        if (self.domain, self.codomain, self.parity) != (
            other.domain,
            other.codomain,
            other.parity,
        ):
            raise ValueError("can only add maps of equal type and parity")
        m = tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix)
        )
        return GradedLinearMap(self.domain, self.codomain, self.parity, m)

    def __sub__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return self + other.scale(-1)

    def scale(self, c: RationalLike) -> "GradedLinearMap":
        c = rat(c) if not isinstance(c, int) else c
        m = tuple(tuple(c * a for a in row) for row in self.matrix)
        return GradedLinearMap(self.domain, self.codomain, self.parity, m)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.matrix for a in row)

    def inverse(self) -> "GradedLinearMap":
        from . import linalg

        if self.domain.dim != self.codomain.dim:
            raise ValueError("only square maps can be inverted")
        inv = linalg.invert([list(row) for row in self.matrix])
        if inv is None:
            raise ValueError("map is not invertible")
        return GradedLinearMap(
            self.codomain, self.domain, self.parity, tuple(tuple(row) for row in inv)
        )

    def is_invertible(self) -> bool:
        from . import linalg

        return self.domain.dim == self.codomain.dim and linalg.rank(
            [list(row) for row in self.matrix]
        ) == self.domain.dim


def suspend_map(t: GradedLinearMap) -> GradedLinearMap:
    """T^s(su) = T(u): same images, suspended domain, parity flipped."""
    sdom, perm = t.domain.suspended_with_permutation()
    cols = [None] * t.domain.dim
    for i in range(t.domain.dim):
        cols[perm[i]] = t.column(i)
    return GradedLinearMap.from_columns(sdom, t.codomain, t.parity ^ 1, cols)


def dual_map(t: GradedLinearMap) -> GradedLinearMap:
    """T*: cod* -> dom* fixed by <T*(x*), v> = (-1)^{|T||x*|} <x*, T(v)>."""
    dom, cod = t.domain, t.codomain
    m = tuple(
        tuple(sign(t.parity * cod.parities[j]) * t.matrix[j][i] for j in range(cod.dim))
        for i in range(dom.dim)
    )
    return GradedLinearMap(cod.dual(), dom.dual(), t.parity, m)


def double_dual_embedding(space: SuperSpace) -> GradedLinearMap:
    """theta: V -> V** with e_i -> (-1)^{|e_i|} (e_i*)*."""
    bidual = space.dual().dual()
    m = tuple(
        tuple(
            (sign(space.parities[i]) * ONE if i == k else ZERO)
            for i in range(space.dim)
        )
        for k in range(space.dim)
    )
    return GradedLinearMap(space, bidual, EVEN, m)


def relabel_domain(t: GradedLinearMap, new_domain: SuperSpace) -> GradedLinearMap:
    """Reinterpret the domain along the positional identification of parity
    blocks (old even block -> new even block in order, same for odd).
    Requires matching block dimensions; used to read a map off sV as a map
    off V when dim V_0 = dim V_1."""
    old = t.domain
    if (old.even_dim, old.odd_dim) != (new_domain.even_dim, new_domain.odd_dim):
        raise ValueError("parity block dimensions do not match")
    return GradedLinearMap(new_domain, t.codomain, t.parity, t.matrix)


# ---------------------------------------------------------------------------
# 2- and 3-index coefficient tensors


def _infer_parity(left: SuperSpace, right: SuperSpace, coeffs) -> "Parity | None":
    found = {
        (left.parities[i] + right.parities[j]) % 2
        for i in range(left.dim)
        for j in range(right.dim)
        if coeffs[i][j] != 0
    }
    if len(found) == 1:
        return found.pop()
    return None


@dataclass(frozen=True)
class Tensor2:
    """Coefficient array a_ij of an element sum a_ij e_i (x) e_j.

    parity None means inhomogeneous (or an undeclared zero tensor).
    """

    left: SuperSpace
    right: SuperSpace
    coeffs: tuple[tuple[Scalar, ...], ...]
    parity: "Parity | None" = None

    def __post_init__(self):
        if len(self.coeffs) != self.left.dim or any(
            len(r) != self.right.dim for r in self.coeffs
        ):
            raise ValueError("tensor coefficient shape mismatch")
        if self.parity is not None:
            for i in range(self.left.dim):
                for j in range(self.right.dim):
                    if self.coeffs[i][j] != 0 and (
                        (self.left.parities[i] + self.right.parities[j]) % 2 != self.parity
                    ):
                        raise ValueError(
                            f"tensor entry ({self.left.labels[i]}, {self.right.labels[j]}) "
                            f"violates declared parity {parity_name(self.parity)}"
                        )

    @staticmethod
    def from_terms(
        left: SuperSpace,
        right: SuperSpace,
        terms: Mapping["tuple[str, str]", RationalLike],
        parity: "Parity | None" = None,
    ) -> "Tensor2":
        grid = [[ZERO] * right.dim for _ in range(left.dim)]
        for (a, b), c in terms.items():
            grid[left.index(a)][right.index(b)] += rat(c)
        coeffs = tuple(tuple(row) for row in grid)
        if parity is None:
            parity = _infer_parity(left, right, coeffs)
        return Tensor2(left, right, coeffs, parity)

    @staticmethod
    def zero(left: SuperSpace, right: SuperSpace, parity: "Parity | None" = None) -> "Tensor2":
        return Tensor2(left, right, ((ZERO,) * right.dim,) * left.dim, parity)

    @property
    def is_homogeneous(self) -> bool:
        if self.parity is not None:
            return True
        return _infer_parity(self.left, self.right, self.coeffs) is not None or self.is_zero()

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def nonzero(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c != 0:
                    yield (i, j), c

    def add(self, other: "Tensor2") -> "Tensor2":
        if (self.left, self.right) != (other.left, other.right):
            raise ValueError("tensor space mismatch")
        coeffs = tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.coeffs, other.coeffs)
        )
        parity = self.parity if self.parity == other.parity else None
        if parity is None:
            parity = _infer_parity(self.left, self.right, coeffs)
        return Tensor2(self.left, self.right, coeffs, parity)

    def scale(self, c: RationalLike) -> "Tensor2":
        c = rat(c) if not isinstance(c, int) else c
        return Tensor2(
            self.left,
            self.right,
            tuple(tuple(c * a for a in row) for row in self.coeffs),
            self.parity,
        )

    def __str__(self):
        terms = []
        for (i, j), c in self.nonzero():
            terms.append(f"{c} {self.left.labels[i]}(x){self.right.labels[j]}")
        return " + ".join(terms) if terms else "0"


def twist(t: Tensor2) -> Tensor2:
    """sigma(v (x) w) = (-1)^{|v||w|} w (x) v, extended linearly."""
    out = [[ZERO] * t.left.dim for _ in range(t.right.dim)]
    for (i, j), c in t.nonzero():
        out[j][i] = sign(t.left.parities[i] * t.right.parities[j]) * c
    return Tensor2(t.right, t.left, tuple(tuple(r) for r in out), t.parity)


@dataclass(frozen=True)
class Tensor3:
    """Coefficient array of an element of V (x) V (x) V over one superspace."""

    space: SuperSpace
    coeffs: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self):
        n = self.space.dim
        if len(self.coeffs) != n or any(
            len(p) != n or any(len(r) != n for r in p) for p in self.coeffs
        ):
            raise ValueError("3-tensor coefficient shape mismatch")

    @staticmethod
    def zero_grid(n: int):
        return [[[ZERO] * n for _ in range(n)] for _ in range(n)]

    @staticmethod
    def from_grid(space: SuperSpace, grid) -> "Tensor3":
        return Tensor3(space, tuple(tuple(tuple(r) for r in p) for p in grid))

    def is_zero(self) -> bool:
        return all(c == 0 for p in self.coeffs for r in p for c in r)

    def nonzero(self):
        for i, plane in enumerate(self.coeffs):
            for j, row in enumerate(plane):
                for k, c in enumerate(row):
                    if c != 0:
                        yield (i, j, k), c

    def __str__(self):
        L = self.space.labels
        terms = [f"{c} {L[i]}(x){L[j]}(x){L[k]}" for (i, j, k), c in self.nonzero()]
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# canonical pairings


def pair_eval(space: SuperSpace, ustar, v) -> Scalar:
    """<u*, v> for u* in coordinates over dual(space), v over space.

    The dual basis pairs as <e_i*, e_j> = delta_ij.
    """
    if len(ustar) != space.dim or len(v) != space.dim:
        raise ValueError("pairing space mismatch")
    return sum((a * b for a, b in zip(ustar, v)), ZERO)


def pair_eval_reversed(space: SuperSpace, v, ustar) -> Scalar:
    """<v, u*> = (-1)^{|u*||v|} <u*, v>, extended linearly per component."""
    if len(ustar) != space.dim or len(v) != space.dim:
        raise ValueError("pairing space mismatch")
    return sum(
        (sign(space.parities[i]) * v[i] * ustar[i] for i in range(space.dim)),
        ZERO,
    )


def pair2_eval(tstar: Tensor2, t: Tensor2) -> Scalar:
    """<u1* (x) u2*, v1 (x) v2> = (-1)^{|u2*||v1|} <u1*, v1><u2*, v2>."""
    if (tstar.left, tstar.right) != (t.left.dual(), t.right.dual()):
        raise ValueError("pairing space mismatch")
    total = ZERO
    for (i, j), s in tstar.nonzero():
        c = t.coeffs[i][j]
        if c != 0:
            total += sign(t.right.parities[j] * t.left.parities[i]) * s * c
    return total
