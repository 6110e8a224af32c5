import json

import pytest

from superybe.cli import main
from superybe.fileformat import parse

EX32 = """\
[space]
even = e
odd = f

[bracket]
e f = 1 f

[rep coad on g*]
e f* = -1 f*
f f* = -1 e*

[map T0 : g* -> g parity even]
f* = -1 f

[map T1 : g* -> g parity odd]
e* = 1 f
f* = -1 e

[map bad : g* -> g parity even]
e* = 1 e
f* = 1 f

[tensor r0]
f f = 1

[tensor ref]
e f = 1
"""

PRELIE = """\
[space]
even = e
odd = f

[bracket]
f f = -2 e

[prelie A]
e e = 1 e
e f = 1 f
f e = 1 f
f f = -1 e
"""

SL11 = """\
[space]
even = e1
odd = f1 f2

[bracket]
f1 f2 = 1 e1

[space V]
even = v1 v2
odd = w1 w2

[rep rho on V]
e1 v1 = 1 v1
e1 v2 = 1 v2
e1 w1 = 1 w1
e1 w2 = 1 w2
f1 v2 = 1 w2
f1 w1 = 1 v1
f2 v1 = 1 w1
f2 w2 = 1 v2
"""


@pytest.fixture
def ex32_file(tmp_path):
    path = tmp_path / "ex32.sy"
    path.write_text(EX32)
    return str(path)


@pytest.fixture
def prelie_file(tmp_path):
    path = tmp_path / "prelie.sy"
    path.write_text(PRELIE)
    return str(path)


@pytest.fixture
def sl11_file(tmp_path):
    path = tmp_path / "sl11.sy"
    path.write_text(SL11)
    return str(path)


class TestValidate:
    def test_valid_file(self, ex32_file, capsys):
        assert main(["validate", ex32_file]) == 0
        out = capsys.readouterr().out
        assert "super Jacobi: PASS" in out

    def test_invalid_rep_exits_one(self, tmp_path, capsys):
        path = tmp_path / "bad.sy"
        path.write_text(
            "[space]\neven = e\nodd = f\n[bracket]\ne f = 1 f\n"
            # rescaled adjoint action: fails the homomorphism property
            "[rep r on g]\ne f = 2 f\nf e = -1 f\n"
        )
        assert main(["validate", str(path)]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_parse_error_exits_two(self, tmp_path, capsys):
        path = tmp_path / "broken.sy"
        path.write_text("[space]\neven = e\nodd = f\n[bracket]\ne f = 1 e\n")
        assert main(["validate", str(path)]) == 2
        assert "line 5" in capsys.readouterr().err

    def test_missing_file_exits_two(self, capsys):
        assert main(["validate", "/nonexistent.sy"]) == 2

    def test_form_classification_is_reported(self, tmp_path, capsys):
        path = tmp_path / "form.sy"
        path.write_text(
            "[space]\neven = a b\nodd = x y\n"
            "[bracket]\na x = 1 x\na y = -1 y\nb x = -1 x\nb y = 1 y\nx y = 1 a + 1 b\n"
            "[form str]\na a = 1\nb b = -1\nx y = 1\ny x = -1\n"
        )
        assert main(["validate", str(path), "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        flags = payload["forms"]["str"]
        assert flags["supersymmetric"] and flags["invariant"] and flags["non-degenerate"]


class TestCheckOop:
    def test_passing_map(self, ex32_file, capsys):
        assert main(["check-oop", ex32_file, "--map", "T0", "--rep", "coad"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_failing_map_lists_defects(self, ex32_file, capsys):
        assert main(["check-oop", ex32_file, "--map", "bad", "--rep", "coad"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "defect[" in out

    def test_json_report(self, ex32_file, capsys):
        assert (
            main(["check-oop", ex32_file, "--map", "T1", "--rep", "coad", "--json"]) == 0
        )
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True
        assert payload["command"] == "check-oop"
        assert payload["checks"][0]["ok"] is True

    def test_unknown_map_exits_two(self, ex32_file):
        assert main(["check-oop", ex32_file, "--map", "nope", "--rep", "coad"]) == 2


class TestCheckCybe:
    def test_solution(self, ex32_file):
        assert main(["check-cybe", ex32_file, "--tensor", "r0"]) == 0

    def test_non_solution_lists_components(self, ex32_file, capsys):
        assert main(["check-cybe", ex32_file, "--tensor", "ref"]) == 1
        out = capsys.readouterr().out
        assert "defect[" in out

    def test_json_components(self, ex32_file, capsys):
        main(["check-cybe", ex32_file, "--tensor", "ref", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["defect_components"]


class TestDualize:
    def test_emits_reparsable_document(self, ex32_file, capsys):
        assert main(["dualize", ex32_file, "--map", "T1", "--rep", "coad"]) == 0
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        assert "T1s" in doc.maps
        assert doc.maps["T1s"].parity == 0
        assert "coads" in doc.reps


class TestBuildRMatrix:
    def test_plain_variant(self, ex32_file, capsys):
        assert (
            main(["build-rmatrix", ex32_file, "--map", "T0", "--rep", "coad"]) == 0
        )
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        assert doc.algebra is not None
        assert "r_T0" in doc.tensors

    def test_dual_variant_of_non_operator_fails(self, ex32_file, capsys):
        code = main(
            ["build-rmatrix", ex32_file, "--map", "bad", "--rep", "coad", "--variant", "dual"]
        )
        assert code == 1


class TestHierarchy:
    def test_plus_walk_matches_printed_tensor(self, ex32_file, capsys):
        assert main(["hierarchy", ex32_file, "--tensor", "r0", "--word", "+"]) == 0
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        from superybe import load_fixture

        fx = load_fixture("ex3.17")
        assert doc.algebra == fx.parts["gplus"]
        assert doc.tensors["r0_+"] == fx.parts["r0_plus"].tensor

    def test_trace_emits_every_level(self, ex32_file, capsys):
        assert (
            main(["hierarchy", ex32_file, "--tensor", "r0", "--word", "+-", "--trace"]) == 0
        )
        out = capsys.readouterr().out
        assert out.count("[bracket]") == 2

    def test_non_solution_start_exits_one(self, ex32_file):
        assert main(["hierarchy", ex32_file, "--tensor", "ref", "--word", "+"]) == 1

    def test_malformed_word_exits_two(self, ex32_file):
        assert main(["hierarchy", ex32_file, "--tensor", "r0", "--word", "+x"]) == 2


class TestPrelieCommand:
    def test_subadjacent(self, prelie_file, capsys):
        assert main(["prelie", prelie_file, "subadjacent"]) == 0
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        f = doc.algebra.space.vector({"f": 1})
        assert doc.algebra.bracket(f, f) == doc.algebra.space.vector({"e": -2})

    def test_rmatrix_pair(self, prelie_file, capsys):
        assert main(["prelie", prelie_file, "rmatrix-pair"]) == 0
        out = capsys.readouterr().out
        assert "# plain variant" in out and "# dual variant" in out

    def test_rmatrix_pair_json(self, prelie_file, capsys):
        assert main(["prelie", prelie_file, "rmatrix-pair", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert "plain" in payload and "dual" in payload

    def test_from_oop(self, sl11_file, tmp_path, capsys):
        text = SL11 + "\n[map T : V -> g parity even]\nv1 = 1 e1\nw1 = 1 f2\n"
        path = tmp_path / "withmap.sy"
        path.write_text(text)
        assert (
            main(["prelie", str(path), "from-oop", "--map", "T", "--rep", "rho"]) == 0
        )
        out = capsys.readouterr().out
        assert "[prelie from_T" in out

    def test_from_oop_with_odd_operator(self, tmp_path, capsys):
        text = (
            "[space]\neven = e\nodd = f\n[bracket]\nf f = -2 e\n"
            "[space V]\neven = v\nodd = w\n"
            "[rep rho on V]\ne v = 1 v\ne w = 1 w\nf v = 1 w\nf w = -1 v\n"
            "[map T : V -> g parity odd]\nv = 1 f\nw = 1 e\n"
        )
        path = tmp_path / "odd.sy"
        path.write_text(text)
        assert main(["prelie", str(path), "from-oop", "--map", "T", "--rep", "rho"]) == 0
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        product = doc.prelies["from_T"]
        assert product.parity_shift == 1
        # the printed odd table: v.v = -w, v.w = v, w.v = v, w.w = w
        v = product.space.vector({"v": 1})
        w = product.space.vector({"w": 1})
        assert product.multiply(v, v) == product.space.vector({"w": -1})
        assert product.multiply(w, w) == w


class TestSearch:
    def test_search_finds_printed_operators(self, sl11_file, capsys):
        code = main(
            [
                "search",
                sl11_file,
                "--rep",
                "rho",
                "--parity",
                "even",
                "--entries=-1,0,1",
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        start = out.index("[space]")
        doc = parse(out[start:])
        from superybe import load_fixture

        fx = load_fixture("ex3.7")
        rho = fx.parts["rho"]
        member = fx.parts["family_member"]
        assert doc.maps, "the zero operator at least"
        for t in doc.maps.values():
            assert member(t)

    def test_threads_flag_same_result(self, sl11_file, capsys):
        args = ["search", sl11_file, "--rep", "rho", "--parity", "odd", "--entries=-1,0,1"]
        assert main(args) == 0
        single = capsys.readouterr().out
        assert main(args + ["--threads", "3"]) == 0
        multi = capsys.readouterr().out
        assert single == multi

    def test_threads_env_var(self, sl11_file, capsys, monkeypatch):
        monkeypatch.setenv("SUPERYBE_THREADS", "2")
        args = ["search", sl11_file, "--rep", "rho", "--parity", "odd", "--entries", "0,1"]
        assert main(args) == 0

    def test_bad_entries_exit_two(self, sl11_file):
        args = ["search", sl11_file, "--rep", "rho", "--parity", "odd", "--entries", "x"]
        assert main(args) == 2


class TestDemo:
    def test_demo_ex44(self, capsys):
        assert main(["demo", "ex4.4"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_demo_all_fixtures(self, capsys):
        from superybe import fixture_names

        for name in fixture_names():
            assert main(["demo", name]) == 0, name
        capsys.readouterr()

    def test_demo_json(self, capsys):
        assert main(["demo", "ex3.17", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True

    def test_unknown_fixture_exits_two(self, capsys):
        assert main(["demo", "nope"]) == 2


def test_usage_error_exit_code():
    assert main(["not-a-command"]) == 2
    assert main([]) == 2
