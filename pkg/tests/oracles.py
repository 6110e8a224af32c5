"""Independent oracles for the test suite.

These recompute the two central identities from scratch: the CYBE defect
by a dense triple loop that derives every sign from the parity table,
and the O-operator defect with Koszul signs computed from the parities
of the objects actually interchanged, not from the library's exponent
formulas.  They intentionally share no code with the package internals.
"""

from collections import defaultdict
from fractions import Fraction

ZERO = Fraction(0)


def koszul(p, q):
    """The sign produced by interchanging homogeneous objects of the
    given parities."""
    return -1 if (p % 2) and (q % 2) else 1


def naive_scybe_defect(g, tensor):
    """[[r, r]] as {(i, j, k): coefficient}, densely over all index pairs.

    First and third commutator families pick up the sign from swapping
    the second tensor leg of one factor past the first leg of the other;
    the middle family needs no swap.
    """
    space = g.space
    n = space.dim
    P = space.parities
    a = tensor.coeffs
    out = defaultdict(lambda: ZERO)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    c = a[i][j] * a[k][l]
                    if c == 0:
                        continue
                    swap = koszul(P[j], P[k])
                    for m in range(n):
                        c1 = g.structure[i][k][m]
                        if c1 != 0:
                            out[(m, j, l)] += swap * c * c1
                        c2 = g.structure[j][k][m]
                        if c2 != 0:
                            out[(i, m, l)] += c * c2
                        c3 = g.structure[j][l][m]
                        if c3 != 0:
                            out[(i, k, m)] += swap * c * c3
    return {key: value for key, value in out.items() if value != 0}


def first_principles_oop_ok(t, rho):
    """The O-operator identity with every sign derived by koszul() on the
    parities of the interchanged objects."""
    g = rho.algebra
    V = rho.space
    pt = t.parity
    n = V.dim
    for i in range(n):
        for j in range(n):
            tv = t.column(i)
            tw = t.column(j)
            p_tv = (pt + V.parities[i]) % 2
            p_tw = (pt + V.parities[j]) % 2
            # first term: T(v) moves past the outer map T
            s1 = koszul(p_tv, pt)
            # second term: v moves past T(w)
            s2 = koszul(V.parities[i], p_tw)
            lhs = g.bracket(tv, tw)
            first = rho.apply_vec(tv, V.basis_vector(j))
            second = rho.apply_vec(tw, V.basis_vector(i))
            inner = tuple(s1 * x - s2 * y for x, y in zip(first, second))
            rhs = t.apply(inner)
            if any(x != y for x, y in zip(lhs, rhs)):
                return False
    return True
