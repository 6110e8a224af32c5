from fractions import Fraction

import pytest

from superybe import (
    EVEN,
    LieSuperAlgebra,
    SuperSpace,
    adjoint,
    check_lie_axioms,
    classify_form,
    coadjoint,
    form_to_dual_map,
    grid_search_oops,
    is_rota_baxter,
    load_fixture,
    oop_holds,
    rota_baxter_transport,
    semidirect_product,
    trivial_rep,
)
from superybe.liesuper import BilinearForm

from conftest import gl11_with_supertrace, random_homogeneous_map


class TestAxiomChecks:
    def test_ef_algebra_passes(self):
        assert check_lie_axioms(load_fixture("ex3.2").parts["algebra"]).ok

    def test_sl11_passes(self):
        assert check_lie_axioms(load_fixture("ex2.3").parts["algebra"]).ok

    def test_abelian_passes(self):
        space = SuperSpace.make(even=["a", "b"], odd=["c"])
        assert check_lie_axioms(LieSuperAlgebra.from_brackets(space, {})).ok

    def test_jacobi_failure_is_reported_with_triple(self):
        space = SuperSpace.make(even=["a", "b"], odd=["c"])
        g = LieSuperAlgebra.from_brackets(
            space, {("a", "b"): {"a": 1}, ("a", "c"): {"c": 1}}
        )
        report = check_lie_axioms(g)
        assert not report.ok
        failing = report.failures()[0]
        assert failing.name == "super Jacobi"
        assert "triple" in failing.detail

    def test_parity_inconsistency_detected(self):
        space = SuperSpace.make(even=["e"], odd=["f"])
        zero = (Fraction(0), Fraction(0))
        ef = (Fraction(0), Fraction(1))
        # [e, e] = f breaks parity consistency
        g = LieSuperAlgebra(space, ((ef, zero), (zero, zero)))
        report = check_lie_axioms(g)
        assert not report.items[0].ok
        assert report.items[0].name == "parity consistency"

    def test_from_brackets_rejects_wrong_order(self):
        space = SuperSpace.make(even=["e"], odd=["f"])
        with pytest.raises(ValueError):
            LieSuperAlgebra.from_brackets(space, {("f", "e"): {"f": 1}})

    def test_from_brackets_rejects_even_diagonal(self):
        space = SuperSpace.make(even=["e"], odd=["f"])
        with pytest.raises(ValueError):
            LieSuperAlgebra.from_brackets(space, {("e", "e"): {"e": 1}})

    def test_sign_rule_fill(self):
        g = load_fixture("ex3.2").parts["algebra"]
        e = g.space.vector({"e": 1})
        f = g.space.vector({"f": 1})
        assert g.bracket(f, e) == g.space.vector({"f": -1})
        assert g.bracket(f, f) == g.space.zero_vector()


class TestClassifyForm:
    def test_zero_form_flags(self):
        g = load_fixture("ex3.2").parts["algebra"]
        zero = BilinearForm.from_terms(g.space, {}, EVEN)
        flags = classify_form(zero, g)
        assert flags.supersymmetric and flags.skew_supersymmetric
        assert flags.invariant and flags.two_cocycle
        assert not flags.non_degenerate

    def test_sl11_even_form_not_invariant(self):
        g = load_fixture("ex2.3").parts["algebra"]
        beta = BilinearForm.from_terms(g.space, {("e1", "e1"): 1}, EVEN)
        flags = classify_form(beta, g)
        assert flags.supersymmetric
        assert not flags.invariant

    def test_flags_stable_under_block_permutation(self):
        g, beta = gl11_with_supertrace()
        flags = classify_form(beta, g)
        # swap the two odd basis elements everywhere
        space = SuperSpace.make(even=["a", "b"], odd=["y", "x"])
        perm = [0, 1, 3, 2]
        n = 4
        structure = tuple(
            tuple(
                tuple(g.structure[perm[i]][perm[j]][perm[k]] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        gram = tuple(
            tuple(beta.gram[perm[i]][perm[j]] for j in range(n)) for i in range(n)
        )
        g2 = LieSuperAlgebra(space, structure)
        assert check_lie_axioms(g2).ok
        beta2 = BilinearForm(space, gram, EVEN)
        assert classify_form(beta2, g2) == flags

    def test_supertrace_form_flags(self):
        g, beta = gl11_with_supertrace()
        flags = classify_form(beta, g)
        assert flags.supersymmetric and flags.invariant and flags.non_degenerate
        assert not flags.skew_supersymmetric


class TestSemidirect:
    def test_adjoint_double_matches_printed_table(self):
        fx = load_fixture("ex3.17")
        g = fx.parts["algebra"]
        assert semidirect_product(g, adjoint(g)) == fx.parts["gplus"]

    def test_zero_action_gives_central_module(self):
        g = load_fixture("ex3.2").parts["algebra"]
        v = SuperSpace.make(even=["u"], odd=["m"])
        h = semidirect_product(g, trivial_rep(g, v))
        assert check_lie_axioms(h).ok
        u = h.space.vector({"u": 1})
        for i in range(h.space.dim):
            assert h.bracket(h.space.basis_vector(i), u) == h.space.zero_vector()

    def test_output_passes_axioms_for_fixture_reps(self):
        for name in ("ex3.2", "ex2.3", "ex3.20"):
            fx = load_fixture(name)
            g = fx.parts["algebra"]
            rho = fx.parts.get("rho") or fx.parts["coadjoint"]
            assert check_lie_axioms(semidirect_product(g, rho)).ok


class TestFormTransport:
    def test_one_dimensional_even_abelian(self):
        space = SuperSpace.make(even=["e"])
        g = LieSuperAlgebra.from_brackets(space, {})
        beta = BilinearForm.from_terms(space, {("e", "e"): 3}, EVEN)
        phi = form_to_dual_map(beta, g)
        assert phi.image_of("e") == space.dual().vector({"e*": 3})

    def test_degenerate_form_rejected(self):
        space = SuperSpace.make(even=["e"])
        g = LieSuperAlgebra.from_brackets(space, {})
        beta = BilinearForm.from_terms(space, {}, EVEN)
        with pytest.raises(ValueError):
            form_to_dual_map(beta, g)

    def test_oop_iff_rota_baxter_random(self, rng):
        g, beta = gl11_with_supertrace()
        phi = form_to_dual_map(beta, g)
        coad = coadjoint(g)
        for _ in range(100):
            parity = rng.randint(0, 1)
            t = random_homogeneous_map(rng, g.space.dual(), g.space, parity, -1, 1)
            assert oop_holds(t, coad) == is_rota_baxter(rota_baxter_transport(t, phi), g)

    def test_oop_iff_rota_baxter_true_cases(self):
        g, beta = gl11_with_supertrace()
        phi = form_to_dual_map(beta, g)
        coad = coadjoint(g)
        found = grid_search_oops(g, coad, EVEN, [-1, 0, 1])
        assert found, "expected at least the zero operator"
        hits = 0
        for t in found[:50]:
            assert is_rota_baxter(rota_baxter_transport(t, phi), g)
            hits += 1
        assert hits > 1
