from fractions import Fraction

import pytest

from superybe import (
    EVEN,
    ODD,
    DegenerateRMatrix,
    GradedLinearMap,
    HierarchyError,
    LieSuperAlgebra,
    RMatrix,
    SuperSpace,
    beta_cocycle_check,
    beta_form,
    classify_form,
    coadjoint,
    hierarchy_trace,
    hierarchy_walk,
    induced_coadjoint_operator,
    is_oop,
    is_pan_supersymmetric,
    is_super_rmatrix,
    load_fixture,
    oop_holds,
    operator_to_rmatrix,
    operator_to_tensor,
    rmatrix_to_operator,
    same_algebra_pair,
    scybe_defect,
)

from conftest import (
    equivalence_cases,
    random_homogeneous_map,
    random_pan_supersymmetric,
)
from oracles import naive_scybe_defect


class TestPanSupersymmetry:
    def test_printed_examples(self):
        fx = load_fixture("ex4.4")
        assert is_pan_supersymmetric(fx.parts["r0"])
        assert is_pan_supersymmetric(fx.parts["r1"])

    def test_symmetric_even_square_fails(self):
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {("e", "e"): 1})
        assert not is_pan_supersymmetric(r)

    def test_equivalent_to_the_pairing_characterization(self, rng):
        # sigma(r) = -(-1)^{|r|} r holds exactly when
        # <w*, T_r(v*)> = -(-1)^{|v*||w*|} <v*, T_r(w*)> on all basis pairs
        from superybe import pair_eval, rmatrix_to_operator
        from superybe.graded import sign
        from conftest import random_tensor

        for _, g, _ in equivalence_cases()[:3]:
            space = g.space
            dual = space.dual()
            for _ in range(30):
                parity = rng.randint(0, 1)
                r = RMatrix(g, random_tensor(rng, space, parity=parity))
                t = rmatrix_to_operator(r)
                pairing_skew = all(
                    pair_eval(space, dual.basis_vector(w), t.column(v))
                    == -sign(space.parities[v] * space.parities[w])
                    * pair_eval(space, dual.basis_vector(v), t.column(w))
                    for v in range(space.dim)
                    for w in range(space.dim)
                )
                assert is_pan_supersymmetric(r) == pairing_skew

    def test_generator_always_produces_pan_supersymmetric(self, rng):
        for _, g, _ in equivalence_cases()[:3]:
            for parity in (EVEN, ODD):
                for _ in range(20):
                    r = random_pan_supersymmetric(rng, g, parity)
                    assert is_pan_supersymmetric(r)


class TestScybeDefect:
    def test_solutions_have_zero_defect(self):
        fx = load_fixture("ex4.4")
        assert scybe_defect(fx.parts["r0"]).is_zero()
        assert scybe_defect(fx.parts["r1"]).is_zero()

    def test_abelian_always_solves(self, rng):
        space = SuperSpace.make(even=["a"], odd=["c"])
        g = LieSuperAlgebra.from_brackets(space, {})
        for parity in (EVEN, ODD):
            for _ in range(10):
                r = random_pan_supersymmetric(rng, g, parity)
                assert scybe_defect(r).is_zero()

    def test_mixed_tensor_has_nonzero_component(self):
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {("e", "f"): 1})
        defect = scybe_defect(r)
        # the middle commutator family contributes -e (x) f (x) f
        e, f = g.space.index("e"), g.space.index("f")
        assert dict(defect.nonzero()) == {(e, f, f): Fraction(-1)}

    def test_even_square_solves_without_pan_supersymmetry(self):
        # every bracket in the expansion hits [e, e] = 0
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {("e", "e"): 1})
        assert scybe_defect(r).is_zero()
        assert not is_pan_supersymmetric(r)

    def test_matches_naive_oracle_on_random_tensors(self, rng):
        for _, g, _ in equivalence_cases()[:3]:
            for _ in range(40):
                parity = rng.randint(0, 1)
                r = random_pan_supersymmetric(rng, g, parity)
                expected = naive_scybe_defect(g, r.tensor)
                got = {key: value for key, value in scybe_defect(r).nonzero()}
                assert got == expected

    def test_threads_do_not_change_the_defect(self):
        fx = load_fixture("ex4.4")
        r1 = fx.parts["r1"]
        assert scybe_defect(r1, threads=3) == scybe_defect(r1)


class TestOperatorTensorConversions:
    def test_printed_tensors_map_to_printed_operators(self):
        fx = load_fixture("ex4.4")
        assert rmatrix_to_operator(fx.parts["r0"]) == fx.parts["T0"]
        assert rmatrix_to_operator(fx.parts["r1"]) == fx.parts["T1"]

    def test_zero_tensor_gives_zero_map(self):
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {})
        assert rmatrix_to_operator(r).is_zero()

    def test_round_trip_on_random_tensors(self, rng):
        for _, g, _ in equivalence_cases()[:3]:
            for _ in range(25):
                r = random_pan_supersymmetric(rng, g, rng.randint(0, 1))
                assert operator_to_tensor(rmatrix_to_operator(r)) == r.tensor

    def test_pan_supersymmetric_equivalence(self, rng):
        # zero defect iff the operator satisfies the identity, exactly
        for _, g, _ in equivalence_cases()[:3]:
            coad = coadjoint(g)
            for _ in range(60):
                r = random_pan_supersymmetric(rng, g, rng.randint(0, 1))
                assert is_super_rmatrix(r) == oop_holds(rmatrix_to_operator(r), coad)


class TestOperatorToRMatrix:
    def test_identity_on_prelie_gives_printed_tensor(self):
        fx = load_fixture("closing-prelie")
        assert fx.parts["pair"][0] == fx.parts["r_id"]

    def test_zero_operator_gives_zero_solution(self):
        fx = load_fixture("ex2.3")
        rho = fx.parts["rho"]
        z = GradedLinearMap.zero(rho.space, fx.parts["algebra"].space, EVEN)
        for variant in ("plain", "dual"):
            r = operator_to_rmatrix(z, rho, variant)
            assert r.tensor.is_zero()
            assert scybe_defect(r).is_zero()

    def test_family_operator_and_perturbation(self):
        fx = load_fixture("ex3.7")
        rho = fx.parts["rho"]
        good = fx.parts["T3"](1, 1, 1, 1)
        bad = fx.parts["T3_shape"](1, 1, 1, 2)
        for variant in ("plain", "dual"):
            assert scybe_defect(operator_to_rmatrix(good, rho, variant)).is_zero()
            assert not scybe_defect(operator_to_rmatrix(bad, rho, variant)).is_zero()

    def test_outputs_are_always_pan_supersymmetric(self, rng):
        for name, g, rho in equivalence_cases()[:3]:
            for _ in range(20):
                t = random_homogeneous_map(rng, rho.space, g.space, rng.randint(0, 1))
                for variant in ("plain", "dual"):
                    assert is_pan_supersymmetric(operator_to_rmatrix(t, rho, variant))


class TestInducedCoadjointOperator:
    def test_equals_operator_of_induced_tensor(self, rng):
        for name, g, rho in equivalence_cases()[:3]:
            for _ in range(10):
                t = random_homogeneous_map(rng, rho.space, g.space, rng.randint(0, 1))
                for variant in ("plain", "dual"):
                    direct = induced_coadjoint_operator(t, rho, variant)
                    via_tensor = rmatrix_to_operator(operator_to_rmatrix(t, rho, variant))
                    assert direct == via_tensor

    def test_true_case(self):
        fx = load_fixture("ex3.2")
        t0 = fx.parts["T0"]
        coad = fx.parts["coadjoint"]
        m = induced_coadjoint_operator(t0, coad, "plain")
        h = operator_to_rmatrix(t0, coad, "plain").algebra
        assert oop_holds(m, coadjoint(h))

    def test_zero_case(self):
        fx = load_fixture("ex3.2")
        coad = fx.parts["coadjoint"]
        z = GradedLinearMap.zero(coad.space, fx.parts["algebra"].space, EVEN)
        m = induced_coadjoint_operator(z, coad, "plain")
        assert m.is_zero()


class TestBetaCocycle:
    def test_odd_nondegenerate_solution_gives_cocycle(self):
        fx = load_fixture("ex4.4")
        beta, agreement = beta_cocycle_check(fx.parts["r1"])
        assert agreement
        flags = classify_form(beta, fx.parts["algebra"])
        assert flags.two_cocycle and flags.skew_supersymmetric

    def test_degenerate_tensor_rejected(self):
        fx = load_fixture("ex4.4")
        with pytest.raises(DegenerateRMatrix):
            beta_cocycle_check(fx.parts["r0"])

    def test_scaling_inverts_the_form(self):
        fx = load_fixture("ex4.4")
        r1 = fx.parts["r1"]
        scaled = RMatrix(r1.algebra, r1.tensor.scale(Fraction(3, 2)))
        beta1 = beta_form(r1)
        beta2 = beta_form(scaled)
        assert all(
            beta2.gram[i][j] == Fraction(2, 3) * beta1.gram[i][j]
            for i in range(2)
            for j in range(2)
        )
        assert beta_cocycle_check(scaled)[1]

    def test_non_pan_supersymmetric_tensor_gives_non_skew_form(self):
        # the converse direction of the skew characterization
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {("e", "e"): 1, ("f", "f"): 1})
        assert not is_pan_supersymmetric(r)
        beta = beta_form(r)
        assert beta.gram[0][0] != 0  # a skew form would vanish on (e, e)

    def test_skew_supersymmetry_of_beta(self, rng):
        # for non-degenerate homogeneous pan-supersymmetric tensors
        from superybe.graded import sign

        found = 0
        for _, g, _ in equivalence_cases()[:3]:
            for _ in range(100):
                r = random_pan_supersymmetric(rng, g, rng.randint(0, 1))
                try:
                    beta = beta_form(r)
                except DegenerateRMatrix:
                    # e.g. sl(1|1) admits no non-degenerate pan-supersymmetric
                    # tensor at all: the even ones kill the e1 row, and the
                    # odd ones cannot be invertible on a 1|2 space
                    continue
                found += 1
                P = g.space.parities
                n = g.space.dim
                for i in range(n):
                    for j in range(n):
                        assert beta.gram[i][j] == -sign(P[i] * P[j]) * beta.gram[j][i]
        assert found > 0


class TestHierarchy:
    def test_level_one_matches_printed_tables(self):
        fx = load_fixture("ex3.17")
        g = fx.parts["algebra"]
        assert hierarchy_walk(g, fx.parts["r0"], "+") == fx.parts["r0_plus"]
        assert hierarchy_walk(g, fx.parts["r0"], "-") == fx.parts["r0_minus"]
        assert hierarchy_walk(g, fx.parts["r1"], "+") == fx.parts["r1_plus"]
        assert hierarchy_walk(g, fx.parts["r1"], "-") == fx.parts["r1_minus"]

    def test_empty_word_returns_input(self):
        fx = load_fixture("ex4.4")
        g = fx.parts["algebra"]
        assert hierarchy_walk(g, fx.parts["r0"], "") == fx.parts["r0"]

    def test_non_solution_start_rejected(self):
        g = load_fixture("ex3.2").parts["algebra"]
        r = RMatrix.from_terms(g, {("f", "f"): 1, ("e", "e"): 0})
        bad = RMatrix.from_terms(g, {("e", "e"): 1})
        with pytest.raises(HierarchyError):
            hierarchy_walk(g, bad, "+")

    def test_deeper_words_keep_all_stated_properties(self):
        fx = load_fixture("ex4.4")
        g = fx.parts["algebra"]
        for start in ("r0", "r1"):
            r = fx.parts[start]
            for word in ("+-", "-+", "--", "++"):
                levels = hierarchy_trace(g, r, word)
                dim = g.space.dim
                parity = r.parity
                for letter, level in zip(word, levels):
                    dim *= 2
                    if letter == "-":
                        parity ^= 1
                    assert level.algebra.space.dim == dim
                    assert level.parity == parity
                    assert is_pan_supersymmetric(level)
                    assert scybe_defect(level).is_zero()

    def test_trace_letters_compose(self):
        fx = load_fixture("ex4.4")
        g = fx.parts["algebra"]
        r = fx.parts["r1"]
        levels = hierarchy_trace(g, r, "+-")
        step1 = hierarchy_walk(g, r, "+")
        assert levels[0] == step1
        assert levels[1] == hierarchy_walk(step1.algebra, step1, "-")


def _printed_sl11_pair(parts, l1, l2, l3, l4):
    """The closing sl(1|1) display, coefficient for coefficient."""
    h = parts["pair_algebra"]
    r_t = RMatrix.from_terms(
        h,
        {
            ("e1", "v1*"): l2,
            ("e1", "v2*"): l3,
            ("f1", "w1*"): l1,
            ("f2", "w1*"): l2,
            ("f1", "w2*"): l3,
            ("f2", "w2*"): l4,
            ("v1*", "e1"): -l2,
            ("v2*", "e1"): -l3,
            ("w1*", "f1"): l1,
            ("w1*", "f2"): l2,
            ("w2*", "f1"): l3,
            ("w2*", "f2"): l4,
        },
        parity=EVEN,
    )
    r_ts = RMatrix.from_terms(
        h,
        {
            ("e1", "w2*"): -l2,
            ("e1", "w1*"): l3,
            ("f1", "v2*"): l1,
            ("f2", "v2*"): l2,
            ("f1", "v1*"): -l3,
            ("f2", "v1*"): -l4,
            ("w2*", "e1"): -l2,
            ("w1*", "e1"): l3,
            ("v2*", "f1"): l1,
            ("v2*", "f2"): l2,
            ("v1*", "f1"): -l3,
            ("v1*", "f2"): -l4,
        },
        parity=ODD,
    )
    return r_t, r_ts


def _sl11_pair_algebra():
    space = SuperSpace(
        ("e1", "v1*", "v2*", "f1", "f2", "w1*", "w2*"), (0, 0, 0, 1, 1, 1, 1)
    )
    return LieSuperAlgebra.from_brackets(
        space,
        {
            ("e1", "v1*"): {"v1*": -1},
            ("e1", "v2*"): {"v2*": -1},
            ("e1", "w1*"): {"w1*": -1},
            ("e1", "w2*"): {"w2*": -1},
            ("v1*", "f1"): {"w1*": 1},  # [f1, v1*] = -w1*
            ("f1", "w2*"): {"v2*": 1},
            ("v2*", "f2"): {"w2*": 1},  # [f2, v2*] = -w2*
            ("f2", "w1*"): {"v1*": 1},
            ("f1", "f2"): {"e1": 1},
        },
    )


class TestSameAlgebraPair:
    def test_closing_prelie_pair(self):
        fx = load_fixture("closing-prelie")
        pair = same_algebra_pair(
            fx.parts["identity"].map, fx.parts["left_regular"], fx.parts["phi"]
        )
        assert pair == (fx.parts["r_id"], fx.parts["r_ids"])
        assert pair[0].algebra == pair[1].algebra == fx.parts["algebra"]

    def test_closing_sl11_pair_printed_tables(self):
        fx = load_fixture("ex3.7")
        rho = fx.parts["rho"]
        phi = fx.parts["phi"]
        h = _sl11_pair_algebra()
        from superybe.liesuper import check_lie_axioms

        assert check_lie_axioms(h).ok
        for params in ((1, 1, 1, 1), (1, 2, 3, 6)):
            t = fx.parts["T3"](*params)
            r_t, r_ts = same_algebra_pair(t, rho, phi)
            assert r_t.algebra == h
            expected_t, expected_ts = _printed_sl11_pair(
                {"pair_algebra": h}, *[Fraction(p) for p in params]
            )
            assert r_t == expected_t
            assert r_ts == expected_ts
            assert scybe_defect(r_t).is_zero() and scybe_defect(r_ts).is_zero()

    def test_zero_operator_gives_zero_pair(self):
        fx = load_fixture("ex2.3")
        rho = fx.parts["rho"]
        phi = fx.parts["phi"]
        z = GradedLinearMap.zero(rho.space, fx.parts["algebra"].space, EVEN)
        r_t, r_ts = same_algebra_pair(z, rho, phi)
        assert r_t.tensor.is_zero() and r_ts.tensor.is_zero()

    def test_bad_intertwiner_rejected(self):
        fx = load_fixture("ex2.3")
        rho = fx.parts["rho"]
        srho_space = rho.space.suspended()
        bogus = GradedLinearMap.from_images(
            rho.space,
            srho_space,
            EVEN,
            {"v1": {"sw1": 1}, "v2": {"sw2": 1}, "w1": {"sv1": 1}, "w2": {"sv2": 1}},
        )
        t = load_fixture("ex3.7").parts["T3"](1, 1, 1, 1)
        with pytest.raises(ValueError):
            same_algebra_pair(t, rho, bogus)
