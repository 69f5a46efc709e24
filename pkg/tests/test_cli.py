import json
from pathlib import Path

import pytest

from hopfcyclic.cli import main, parse_input
from hopfcyclic.errors import ParseError

FIXTURES = Path(__file__).parent.parent / "src" / "hopfcyclic" / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_sweedler_all_pass(self, capsys):
        code, out, _ = run(capsys, "check", str(FIXTURES / "sweedler_h4.json"))
        assert code == 0
        assert "FAIL" not in out
        assert "antipode" in out

    def test_group_algebra_fixtures(self, capsys):
        for name in ("z2_group_algebra", "z4_group_algebra", "s3_group_algebra",
                     "dual_z2_group_algebra", "trivial"):
            code, out, _ = run(capsys, "check", str(FIXTURES / f"{name}.json"))
            assert code == 0, name

    def test_malformed_scalar_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "field": "Q", "basis": ["a"], "level": "coalgebra",
            "comult": [[0, 0, 0, "1/0"]]}))
        code, _, err = run(capsys, "check", str(bad))
        assert code == 2
        assert "1/0" in err

    def test_field_override(self, capsys):
        code, _, _ = run(capsys, "check", str(FIXTURES / "z4_group_algebra.json"),
                         "--field", "Fp:5")
        assert code == 0

    def test_mutated_fixture_exits_1_with_witness(self, capsys, tmp_path):
        doc = json.loads((FIXTURES / "z2_group_algebra.json").read_text())
        doc["comult"].append([1, 0, 1, "1"])  # break coassociativity/counit
        bad = tmp_path / "mutant.json"
        bad.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "check", str(bad))
        assert code == 1
        assert "FAIL" in out


class TestHomology:
    def test_trivial_triple_table(self, capsys):
        code, out, _ = run(capsys, "homology", str(FIXTURES / "trivial_triple.json"),
                           "--theory", "cyclic", "--max-degree", "4")
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert [(r[0], r[1]) for r in rows] == [
            ("0", "1"), ("1", "0"), ("2", "1"), ("3", "0"), ("4", "1")]

    def test_hochschild_theory(self, capsys):
        code, out, _ = run(capsys, "homology", str(FIXTURES / "trivial_triple.json"),
                           "--theory", "hochschild", "--max-degree", "3")
        assert code == 0
        dims = [line.split("\t")[1] for line in out.strip().splitlines()]
        assert dims == ["1", "0", "0", "0"]

    def test_dump_writes_complex(self, capsys, tmp_path):
        dump = tmp_path / "dump.json"
        code, _, _ = run(capsys, "homology", str(FIXTURES / "trivial_triple.json"),
                         "--max-degree", "2", "--dump", str(dump))
        assert code == 0
        doc = json.loads(dump.read_text())
        assert "cyclic_total" in doc
        assert doc["cyclic_total"]["certificate"]["d_squared_zero"] is True


class TestExcision:
    def test_direct_sum_q_exit_0(self, capsys):
        code, out, _ = run(capsys, "excision", str(FIXTURES / "direct_sum_ses.json"),
                           "--max-degree", "2")
        assert code == 0
        assert "UNVERIFIED" not in out

    def test_direct_sum_f2_exit_1(self, capsys):
        code, out, _ = run(capsys, "excision", str(FIXTURES / "direct_sum_ses.json"),
                           "--max-degree", "2", "--field", "Fp:2")
        assert code == 1
        assert "UNVERIFIED" in out

    def test_algebra_side_product_fixture(self, capsys):
        code, out, _ = run(capsys, "excision",
                           str(FIXTURES / "z2_product_algebra_ses.json"),
                           "--side", "algebra", "--max-degree", "2")
        assert code == 0
        assert "FAIL" not in out

    def test_json_flag_emits_report(self, capsys):
        code, out, _ = run(capsys, "excision", str(FIXTURES / "direct_sum_ses.json"),
                           "--max-degree", "1", "--json")
        assert code == 0
        lines = out.splitlines()
        start = next(i for i, l in enumerate(lines) if l == "{")
        doc = json.loads("\n".join(lines[start:]))
        assert doc["theorem"] == "excision/coalgebra"


class TestRelative:
    def test_quotient_mode(self, capsys):
        code, out, _ = run(capsys, "relative", str(FIXTURES / "direct_sum_ses.json"),
                           "--mode", "quotient", "--max-degree", "3")
        assert code == 0
        dims = [line.split("\t")[1] for line in out.strip().splitlines()]
        assert dims == ["1", "0", "1", "0"]

    def test_cokernel_mode(self, capsys):
        code, out, _ = run(capsys, "relative", str(FIXTURES / "direct_sum_ses.json"),
                           "--mode", "cokernel", "--max-degree", "3")
        assert code == 0

    def test_z4_coideal(self, capsys):
        code, out, _ = run(capsys, "relative", str(FIXTURES / "z4_coideal_ses.json"),
                           "--mode", "quotient", "--max-degree", "2")
        # hypotheses for the comparison fail (not a subcoalgebra), exit 1
        assert code == 1
        dims = [line.split("\t")[1] for line in out.strip().splitlines()]
        assert dims == ["1", "0", "1"]


class TestGroupExample:
    def test_z4_f2(self, capsys):
        code, out, _ = run(capsys, "group-example",
                           "--group", str(FIXTURES / "z4_group.json"),
                           "--normal", "0,2", "--field", "Fp:2", "--max-degree", "4")
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        degree_rows = [r for r in rows if r[0].isdigit()]
        hc = [json.loads(r[1])["HC"] for r in degree_rows]
        assert hc == [1, 1, 2, 2, 3]

    def test_z4_rational(self, capsys):
        code, out, _ = run(capsys, "group-example",
                           "--group", str(FIXTURES / "z4_group.json"),
                           "--normal", "0,2", "--max-degree", "4")
        assert code == 0
        degree_rows = [r.split("\t") for r in out.strip().splitlines()
                       if r.split("\t")[0].isdigit()]
        assert [json.loads(r[1])["HC"] for r in degree_rows] == [1, 0, 1, 0, 1]


class TestSpecial:
    def test_additivity(self, capsys):
        code, out, _ = run(capsys, "special", "--kind", "additivity",
                           "--params", str(FIXTURES / "additivity_params.json"),
                           "--max-degree", "2")
        assert code == 0

    def test_commutative_hopf(self, capsys):
        code, out, _ = run(capsys, "special", "--kind", "commutative-hopf",
                           "--params", str(FIXTURES / "commutative_hopf_params.json"),
                           "--max-degree", "3")
        assert code == 0

    def test_cocommutative_hopf(self, capsys):
        code, out, _ = run(capsys, "special", "--kind", "cocommutative-hopf",
                           "--params", str(FIXTURES / "cocommutative_hopf_params.json"),
                           "--max-degree", "3")
        assert code == 0


class TestDeterminism:
    def test_byte_identical_json_reports(self, capsys):
        _, out1, _ = run(capsys, "relative", str(FIXTURES / "direct_sum_ses.json"),
                         "--mode", "quotient", "--max-degree", "2", "--json")
        _, out2, _ = run(capsys, "relative", str(FIXTURES / "direct_sum_ses.json"),
                         "--mode", "quotient", "--max-degree", "2", "--json")
        assert out1 == out2

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "excision", str(FIXTURES / "direct_sum_ses.json"),
                        "--max-degree", "1", "--json")
        lines = out.splitlines()
        start = next(i for i, l in enumerate(lines) if l == "{")
        doc = json.loads("\n".join(lines[start:]))
        assert json.loads(json.dumps(doc, sort_keys=True)) == doc


class TestParseInput:
    def test_dispatch_by_shape(self):
        desc = parse_input(str(FIXTURES / "sweedler_h4.json"))
        assert desc.dim == 4
        mc = parse_input(str(FIXTURES / "z2_regular_module_coalgebra.json"))
        assert mc.dim == 2
        ses = parse_input(str(FIXTURES / "direct_sum_ses.json"))
        assert ses.quotient.dim == 2

    def test_unknown_document(self, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{}")
        with pytest.raises(ParseError):
            parse_input(str(p))

    def test_module_coalgebra_with_file_references(self, tmp_path):
        # "over" and "base" may be file paths instead of inline documents
        doc = json.loads((FIXTURES / "z2_regular_module_coalgebra.json").read_text())
        over_path = tmp_path / "over.json"
        over_path.write_text(json.dumps(doc["over"]))
        doc["over"] = str(over_path)
        base_path = tmp_path / "base.json"
        base_path.write_text(json.dumps(doc["base"]))
        doc["base"] = str(base_path)
        mc_path = tmp_path / "mc.json"
        mc_path.write_text(json.dumps(doc))
        mc = parse_input(str(mc_path))
        assert mc.dim == 2

    def test_usage_error_exit_2(self, capsys):
        assert main(["no-such-verb"]) == 2
