from pathlib import Path

import orjson
import pytest


def write(tmp_path, name, content):
    path = tmp_path / name
    path.write_bytes(content if isinstance(content, bytes) else orjson.dumps(content))
    return str(path)


def term(payload, word):
    for item in payload["terms"]:
        if item["word"] == word:
            return item["coeff"]
    return None


@pytest.fixture
def embed(run_cli, tmp_path):
    def run(word, n=2, degree=3, ring="int", name=None):
        result = run_cli(["series", "embed", "--n", str(n), "--degree", str(degree), "--ring", ring, "--word", word])
        assert result.code == 0, result.stderr
        return write(tmp_path, name or f"{word.replace(' ', '_')}_{ring}_{degree}.json", result.stdout)

    return run


NOT_GROUPLIKE = {
    "n": 2,
    "max_degree": 3,
    "ring": "rat",
    "terms": [{"word": [], "coeff": "1"}, {"word": [1, 2], "coeff": "1"}],
}


class TestLyndon:
    def test_list_as_text(self, run_cli):
        result = run_cli(["lyndon", "list", "--n", "2", "--max-len", "3"])
        assert result.code == 0
        assert result.text == "a, b, ab, aab, abb\n"

    def test_list_as_json(self, run_cli):
        result = run_cli(["lyndon", "list", "--n", "2", "--max-len", "3", "--order", "lex", "--json"])
        assert result.json["words"] == [[1], [1, 1, 2], [1, 2], [1, 2, 2], [2]]
        assert result.json["order"] == "lex"

    def test_custom_ranking_file(self, run_cli, tmp_path):
        ranking = write(tmp_path, "ranking.json", ["ab", "b", "a"])
        result = run_cli(
            ["lyndon", "list", "--n", "2", "--max-len", "2", "--order", "custom", "--ranking", ranking, "--json"]
        )
        assert result.json["words"] == [[1, 2], [2], [1]]

    def test_random_order_is_reproducible(self, run_cli):
        args = ["lyndon", "list", "--n", "2", "--max-len", "4", "--order", "random", "--seed", "9", "--json"]
        first, second = run_cli(args), run_cli(args)
        assert first.json == second.json
        assert sorted(first.json["words"]) == sorted(run_cli(args[:6] + ["--json"]).json["words"])

    def test_count(self, run_cli):
        result = run_cli(["lyndon", "count", "--n", "2", "--max-len", "6", "--json"])
        assert result.json["counts"] == {"1": 2, "2": 1, "3": 2, "4": 3, "5": 6, "6": 9}

    def test_factor_and_paren(self, run_cli):
        assert run_cli(["lyndon", "factor", "ab"]).text == "(a, b)\n"
        result = run_cli(["lyndon", "paren", "aabab", "--json"])
        assert result.json == {"word": [1, 1, 2, 1, 2], "paren": "((a∘(a∘b))∘(a∘b))"}

    def test_factor_rejects_non_lyndon_words(self, run_cli):
        result = run_cli(["lyndon", "factor", "ba"])
        assert result.code == 3
        assert result.error["error"] == "WordError"


class TestSeries:
    def test_embed(self, run_cli):
        result = run_cli(["series", "embed", "--n", "2", "--degree", "3", "--ring", "int", "--word", "2 1"])
        assert result.code == 0
        payload = result.json
        assert (payload["n"], payload["max_degree"], payload["ring"]) == (2, 3, "int")
        assert term(payload, [2, 1]) == "1"
        assert term(payload, [1, 2]) is None

    def test_power_from_stdin(self, run_cli):
        g = run_cli(["series", "embed", "--n", "2", "--degree", "3", "--ring", "rat", "--word", "a"])
        result = run_cli(["series", "pow", "--in", "-", "--t", "1/2"], stdin=g.stdout)
        assert result.code == 0
        assert term(result.json, [1]) == "1/2"
        assert term(result.json, [1, 1]) == "-1/8"

    def test_product_with_inverse(self, run_cli, embed):
        result = run_cli(["series", "mul", "--in", embed("a b"), "--in", embed("B A")])
        assert result.json["terms"] == [{"word": [], "coeff": "1"}]

    def test_contexts_must_agree(self, run_cli, embed):
        result = run_cli(["series", "mul", "--in", embed("a", degree=3), "--in", embed("a", degree=4)])
        assert result.code == 3
        assert result.error["error"] == "ContextMismatchError"

    def test_exp_needs_rationals(self, run_cli, tmp_path):
        primitive = {"n": 2, "max_degree": 3, "ring": "int", "terms": [{"word": [1], "coeff": "1"}]}
        result = run_cli(["series", "exp", "--in", write(tmp_path, "x.json", primitive)])
        assert result.code == 3
        assert result.error["error"] == "CoefficientDomainError"

    def test_negative_power_over_integers(self, run_cli, embed):
        result = run_cli(["series", "pow", "--in", embed("a"), "--t=-1"])
        assert result.code == 3
        assert result.error["error"] == "CoefficientDomainError"

    def test_inverse_letters_embed_over_integers(self, run_cli):
        result = run_cli(["series", "embed", "--n", "1", "--degree", "3", "--ring", "int", "--word", "A"])
        assert result.code == 0
        assert [t["coeff"] for t in result.json["terms"]] == ["1", "-1", "1", "-1"]

    def test_output_file(self, run_cli, tmp_path):
        target = tmp_path / "out" / "g.json"
        result = run_cli(["series", "embed", "--n", "1", "--degree", "2", "--word", "1", "--out", str(target)])
        assert result.code == 0
        assert result.stdout == b""
        assert orjson.loads(target.read_bytes())["ring"] == "rat"

    def test_coproduct(self, run_cli, embed):
        result = run_cli(["series", "coproduct", "--in", embed("a", n=1, degree=2), "--coproduct", "twisted"])
        terms = {(tuple(t["left"]), tuple(t["right"])): t["coeff"] for t in result.json["terms"]}
        assert terms[((1,), (1,))] == "1"
        assert terms[((), ())] == "1"


class TestChecks:
    def test_grouplike(self, run_cli, embed):
        result = run_cli(["check", "grouplike", "--in", embed("a b A")])
        assert result.code == 0
        assert result.json["holds"] is True
        assert result.json["coproduct"] == "twisted"

    def test_violation_is_reported(self, run_cli, tmp_path):
        result = run_cli(["check", "grouplike", "--in", write(tmp_path, "g.json", NOT_GROUPLIKE)])
        assert result.code == 1
        assert result.json["violation"] == {"alpha": [1], "beta": [2], "lhs": "0", "rhs": "1"}

    def test_integral(self, run_cli, tmp_path):
        g = run_cli(["series", "embed", "--n", "2", "--degree", "3", "--word", "a"])
        root = run_cli(["series", "pow", "--in", "-", "--t", "1/2"], stdin=g.stdout)
        result = run_cli(["check", "integral", "--in", write(tmp_path, "root.json", root.stdout)])
        assert result.code == 1
        assert result.json["holds"] is False
        assert run_cli(["check", "closure", "--in", write(tmp_path, "g.json", g.stdout)]).code == 0

    def test_primitive(self, run_cli, tmp_path):
        z = {"n": 2, "max_degree": 3, "ring": "rat", "terms": [{"word": [1, 2], "coeff": "1"}, {"word": [2, 1], "coeff": "-1"}]}
        assert run_cli(["check", "primitive", "--in", write(tmp_path, "z.json", z)]).code == 0
        assert run_cli(["check", "primitive", "--in", write(tmp_path, "g.json", NOT_GROUPLIKE)]).code == 1


class TestMalcev:
    def test_decompose_and_compose(self, run_cli, embed, tmp_path):
        g = embed("2 1", degree=2)
        result = run_cli(["malcev", "decompose", "--in", g])
        assert result.code == 0
        assert result.json["order"] == "graded"
        assert result.json["entries"] == [
            {"word": [1], "t": "1"},
            {"word": [2], "t": "1"},
            {"word": [1, 2], "t": "-1"},
        ]
        composed = run_cli(["malcev", "compose", "--in", write(tmp_path, "t.json", result.stdout)])
        assert composed.json == orjson.loads(Path(g).read_bytes())

    def test_decompose_reports_non_grouplike_input(self, run_cli, tmp_path):
        result = run_cli(["malcev", "decompose", "--in", write(tmp_path, "g.json", NOT_GROUPLIKE)])
        assert result.code == 1
        assert result.json["holds"] is False
        assert result.json["violation"]["alpha"] == [1]

    def test_reconstruct(self, run_cli, tmp_path):
        prescribed = {
            "n": 2,
            "max_degree": 3,
            "ring": "int",
            "terms": [{"word": [1], "coeff": "2"}, {"word": [1, 2], "coeff": "5"}],
        }
        result = run_cli(["malcev", "reconstruct", "--in", write(tmp_path, "c.json", prescribed)])
        assert result.code == 0
        series = result.json["series"]
        assert term(series, [1]) == "2"
        assert term(series, [1, 2]) == "5"
        assert term(series, [2]) is None
        assert term(series, [1, 1, 2]) is None
        assert result.json["coordinates"]["ring"] == "int"

    def test_lie_coefficients(self, run_cli, tmp_path):
        z = {"n": 2, "max_degree": 2, "ring": "rat", "terms": [{"word": [1, 2], "coeff": "3"}, {"word": [2, 1], "coeff": "-3"}, {"word": [2], "coeff": "1/2"}]}
        result = run_cli(["malcev", "lie", "--in", write(tmp_path, "z.json", z)])
        assert result.json["terms"] == [{"word": [2], "coeff": "1/2"}, {"word": [1, 2], "coeff": "3"}]


class TestPadic:
    def test_member(self, run_cli, embed):
        args = ["--nu", "1", "--pm", "2"]
        outside = run_cli(["padic", "member", "--in", embed("a")] + args)
        assert outside.code == 1
        assert outside.json["member"] is False
        inside = run_cli(["padic", "member", "--in", embed("a a")] + args)
        assert inside.code == 0
        assert inside.json["spec"]["p"] == 2

    def test_order(self, run_cli, embed):
        result = run_cli(["padic", "order", "--in", embed("a"), "--nu", "1", "--p", "2", "--m", "1"])
        assert result.code == 0
        assert result.json["order_mod_subgroup"] == 2

    def test_single_coset(self, run_cli, embed):
        result = run_cli(["padic", "coset", "--in", embed("2 1", degree=2), "--nu", "2", "--pm", "3"])
        assert result.json["entries"] == [
            {"word": [1], "residue": 1},
            {"word": [2], "residue": 1},
            {"word": [1, 2], "residue": 2},
        ]

    def test_enumerate_cosets(self, run_cli):
        result = run_cli(["padic", "coset", "--enumerate", "--n", "2", "--nu", "2", "--p", "2", "--m", "1"])
        assert result.code == 0
        assert result.json["count"] == result.json["expected"] == 8

    def test_quotient(self, run_cli):
        result = run_cli(["padic", "quotient", "--n", "2", "--nu", "2", "--pm", "2"])
        payload = result.json
        assert payload["quotient_order"] == 32
        assert payload["count"] == 8
        assert payload["spec"]["binomials_periodic"] is False

    def test_quotient_table(self, run_cli):
        result = run_cli(["padic", "quotient", "--n", "2", "--nu", "1", "--pm", "2", "--table"])
        assert "U(1, 2^1)" in result.text
        assert result.text.splitlines()[1].startswith("-")

    def test_converge(self, run_cli):
        result = run_cli(
            ["padic", "converge", "--n", "2", "--degree", "4", "--word", "ab", "--p", "2", "--t=-1", "--prec", "20", "--steps", "8"]
        )
        assert result.code == 0
        rows = result.json["rows"]
        assert [row["exponent"] for row in rows[:3]] == ["1", "3", "7"]
        assert result.json["nondecreasing"] is True
        assert rows[-1]["agreement"] >= 6

    def test_missing_subgroup_flags(self, run_cli, embed):
        result = run_cli(["padic", "member", "--in", embed("a"), "--p", "2"])
        assert result.code == 2
        assert "--nu" in result.error["message"]


class TestErrors:
    def test_invalid_json(self, run_cli, tmp_path):
        result = run_cli(["series", "inv", "--in", write(tmp_path, "bad.json", b"{oops")])
        assert result.code == 2
        assert result.error["error"] == "ParseError"

    def test_float_coefficient(self, run_cli, tmp_path):
        bad = {"n": 1, "max_degree": 2, "ring": "rat", "terms": [{"word": [], "coeff": 1.5}]}
        assert run_cli(["series", "inv", "--in", write(tmp_path, "bad.json", bad)]).code == 2

    def test_missing_file(self, run_cli, tmp_path):
        result = run_cli(["series", "inv", "--in", str(tmp_path / "absent.json")])
        assert result.code == 2
        assert result.error["error"] == "RepositoryError"

    def test_bad_prime(self, run_cli):
        result = run_cli(["padic", "quotient", "--n", "2", "--nu", "1", "--pm", "12"])
        assert result.code == 2
        assert result.error["error"] == "ValidationError"

    def test_unknown_flag_is_an_argparse_error(self, run_cli):
        with pytest.raises(SystemExit) as exit_info:
            run_cli(["lyndon", "list", "--bogus"])
        assert exit_info.value.code == 2


RINGS = [["--ring", "int"], ["--ring", "rat"], ["--ring", "padic", "--p", "3", "--prec", "6"]]


class TestRoundTrip:
    @pytest.mark.parametrize("ring", RINGS)
    def test_series_document(self, run_cli, ring):
        g = run_cli(["series", "embed", "--n", "2", "--degree", "3", "--word", "a B a"] + ring)
        assert g.code == 0
        again = run_cli(["series", "pow", "--in", "-", "--t", "1"], stdin=g.stdout)
        assert again.code == 0
        assert again.stdout == g.stdout

    @pytest.mark.parametrize("ring", RINGS[:2])
    def test_coordinates_document(self, run_cli, ring):
        g = run_cli(["series", "embed", "--n", "2", "--degree", "3", "--word", "b a B"] + ring)
        first = run_cli(["malcev", "decompose", "--in", "-", "--order", "lex"], stdin=g.stdout)
        composed = run_cli(["malcev", "compose", "--in", "-"], stdin=first.stdout)
        second = run_cli(["malcev", "decompose", "--in", "-", "--order", "lex"], stdin=composed.stdout)
        assert (first.code, composed.code, second.code) == (0, 0, 0)
        assert composed.stdout == g.stdout
        assert second.stdout == first.stdout
        assert first.json["order"] == "lex"
