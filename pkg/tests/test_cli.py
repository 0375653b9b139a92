import json
from pathlib import Path

from homstruct import documents
from homstruct.cli import main
from homstruct.corpus import DATA_DIR

HOM3 = str(DATA_DIR / "hom3dim_ab.json")
EX1 = str(DATA_DIR / "ex1.json")
KX3 = str(DATA_DIR / "kx3.json")
UT2 = str(DATA_DIR / "ut2.json")
UNITAL2 = str(DATA_DIR / "unital2dim.json")


class TestCheck:
    def test_passing_document_exits_zero(self, capsys):
        assert main(["check", HOM3]) == 0
        out = capsys.readouterr().out
        assert "hom-algebra: PASS" in out
        assert "oracle agree" in out

    def test_failing_document_exits_one_and_lists_witnesses(self, capsys):
        assert main(["check", EX1]) == 1
        out = capsys.readouterr().out
        assert "comultiplicativity" in out
        assert "counit-twist-invariance" in out

    def test_truncated_file_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "broken.json"
        bad.write_text('{"format-version": 1, "kind": ')
        assert main(["check", str(bad)]) == 2

    def test_missing_file_exits_two(self):
        assert main(["check", "/nonexistent/x.json"]) == 2

    def test_kind_override_runs_requested_check(self, capsys):
        assert main(["check", EX1, "--kind", "infinitesimal",
                     "--no-oracle"]) == 1
        out = capsys.readouterr().out
        assert "infinitesimal" in out

    def test_incompatible_kind_exits_two(self):
        assert main(["check", HOM3, "--kind", "hom-bialgebra"]) == 2

    def test_machine_format_is_json(self, capsys):
        assert main(["check", HOM3, "--format", "machine",
                     "--no-oracle"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["checks"][0]["status"] == "pass"

    def test_out_writes_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        assert main(["check", HOM3, "--format", "machine", "--no-oracle",
                     "--out", str(target)]) == 0
        assert json.loads(target.read_text())["structure"] == "hom3dim_ab"

    def test_counit_mode_flag_accepted(self, capsys):
        counital = str(DATA_DIR / "counital2dim.json")
        assert main(["check", counital, "--counit-mode", "eq8",
                     "--no-oracle"]) == 0

    def test_strict_assoc_flag(self, capsys):
        trivd = str(DATA_DIR / "trivdialg3dim.json")
        assert main(["check", trivd, "--no-oracle"]) == 0
        assert main(["check", trivd, "--strict-assoc", "--no-oracle"]) == 1

    def test_dialgebra_document_checked_as_left_disymmetric(self, capsys):
        trivd = str(DATA_DIR / "trivdialg3dim.json")
        assert main(["check", trivd, "--kind", "hlsda", "--no-oracle"]) == 0
        assert "hlsda: PASS" in capsys.readouterr().out

    def test_algebra_document_checked_as_prelie(self, capsys):
        assert main(["check", HOM3, "--kind", "hom-prelie",
                     "--no-oracle"]) == 0

    def test_witness_cap_respected(self, capsys):
        assert main(["check", EX1, "--witness-cap", "1", "--no-oracle"]) == 1
        out = capsys.readouterr().out
        assert out.count("    witness ") == 1
        assert "truncated" in out


class TestConstruct:
    def test_k1_writes_document_and_reports_suites(self, tmp_path, capsys):
        target = tmp_path / "k1.json"
        assert main(["construct", "k1", KX3, "--out", str(target)]) == 0
        out = capsys.readouterr().out
        assert "hom-bialgebra: pass" in out
        assert "infinitesimal: pass" in out
        doc = json.loads(target.read_text())
        assert doc["dimension"] == 4

    def test_k2_reports_expected_failure_with_witness(self, tmp_path,
                                                      capsys):
        target = tmp_path / "k2.json"
        assert main(["construct", "k2", UNITAL2, "--allow-ineligible",
                     "--out", str(target)]) == 0
        out = capsys.readouterr().out
        assert "hom-bialgebra: pass" in out
        assert "infinitesimal: fail (witness infinitesimal @ (e3, e3))" in out

    def test_k2_without_override_exits_one(self, tmp_path, capsys):
        assert main(["construct", "k2", UNITAL2,
                     "--out", str(tmp_path / "x.json")]) == 1
        assert "not eligible" in capsys.readouterr().err

    def test_twist_identity_returns_input_table(self, tmp_path, capsys):
        alpha_doc = tmp_path / "alpha.json"
        alpha_doc.write_text(json.dumps({
            "format-version": 1, "type": "morphism", "field": "rational",
            "source": "kx3", "target": "kx3",
            "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}))
        target = tmp_path / "twisted.json"
        assert main(["construct", "twist", KX3, "--alpha", str(alpha_doc),
                     "--kind", "algebra", "--out", str(target)]) == 0
        out_doc = json.loads(target.read_text())
        in_doc = json.loads(Path(KX3).read_text())
        assert out_doc["maps"]["mu"] == in_doc["maps"]["mu"]
        assert out_doc["maps"]["alpha"] == in_doc["maps"]["alpha"]

    def test_twist_by_scaling(self, tmp_path, capsys):
        alpha_doc = tmp_path / "alpha.json"
        alpha_doc.write_text(json.dumps({
            "format-version": 1, "type": "morphism", "field": "rational",
            "source": "kx3", "target": "kx3",
            "matrix": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "4"]]}))
        assert main(["construct", "twist", KX3, "--alpha", str(alpha_doc),
                     "--kind", "algebra",
                     "--out", str(tmp_path / "t.json")]) == 0
        assert "hom-algebra: pass" in capsys.readouterr().out

    def test_derived_chain_verbs(self, tmp_path, capsys):
        dialg = tmp_path / "dialg.json"
        assert main(["construct", "dialg-from-diff", UT2,
                     "--out", str(dialg)]) == 0
        assert "hom-dialgebra: pass" in capsys.readouterr().out
        bracket = tmp_path / "bracket.json"
        assert main(["construct", "bracket", str(dialg), "--variant",
                     "loday", "--out", str(bracket)]) == 0
        assert "hom-leibniz: pass" in capsys.readouterr().out
        assert main(["construct", "leibniz-from-diff", UT2,
                     "--out", str(tmp_path / "lb.json")]) == 0
        assert main(["construct", "trivial-dialg", HOM3,
                     "--out", str(tmp_path / "td.json")]) == 0

    def test_assemble_pair_writes_two_documents(self, tmp_path, capsys):
        bool2 = str(DATA_DIR / "bool2dim.json")
        dual2 = str(DATA_DIR / "dual2dim.json")
        first = tmp_path / "b1.json"
        second = tmp_path / "b2.json"
        assert main(["construct", "assemble", bool2, dual2,
                     "--kind", "2-bialgebras-B1B2", "--out", str(first),
                     "--out2", str(second)]) == 0
        out = capsys.readouterr().out
        assert out.count("2-hom-bialgebra: pass") == 2
        assert json.loads(first.read_text())["kind"] == "2-hom-bialgebra"
        assert json.loads(second.read_text())["kind"] == "2-hom-bialgebra"

    def test_tensor_and_opposites(self, tmp_path, capsys):
        assert main(["construct", "tensor", UNITAL2, UNITAL2,
                     "--out", str(tmp_path / "sq.json")]) == 0
        assert "hom-algebra: pass" in capsys.readouterr().out
        assert main(["construct", "op", HOM3,
                     "--out", str(tmp_path / "op.json")]) == 0
        doc = json.loads((tmp_path / "op.json").read_text())
        # the one-sided (e2, e3) entry lands at (e3, e2) after flipping
        assert doc["maps"]["mu"][1][2][2] == "0"
        assert doc["maps"]["mu"][2][1][2] == "2"

    def test_construct_bad_input_exits_two(self, tmp_path):
        assert main(["construct", "k1", "/nonexistent.json",
                     "--out", str(tmp_path / "x.json")]) == 2


class TestSearch:
    def test_count_four(self, capsys):
        assert main(["search", "--kind", "hom-algebra", "--dim", "1",
                     "--prime", "2", "--cap", "0"]) == 0
        assert capsys.readouterr().out.strip() == "count: 4"

    def test_count_seven(self, capsys):
        assert main(["search", "--kind", "hom-algebra", "--dim", "1",
                     "--prime", "3", "--cap", "0"]) == 0
        assert capsys.readouterr().out.strip() == "count: 7"

    def test_machine_stream_emits_documents(self, capsys):
        assert main(["search", "--kind", "hom-algebra", "--dim", "1",
                     "--prime", "2", "--cap", "2", "--format",
                     "machine"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == "count: 4"
        first = json.loads(lines[0])
        assert first["field"] == "gf:2"
        documents.document_to_structure(first)

    def test_fixed_entries_forwarded(self, capsys):
        pinned = json.dumps({"alpha": [[1, 0], [0, 1]]})
        assert main(["search", "--kind", "hom-algebra", "--dim", "2",
                     "--prime", "2", "--cap", "1", "--fixed", pinned,
                     "--format", "machine"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        doc = json.loads(lines[0])
        assert doc["maps"]["alpha"] == [["1", "0"], ["0", "1"]]

    def test_bad_fixed_json_exits_two(self, capsys):
        assert main(["search", "--kind", "hom-algebra", "--dim", "2",
                     "--prime", "2", "--fixed", "{broken"]) == 2

    def test_budget_exceeded_exits_one(self, capsys):
        assert main(["search", "--kind", "hom-dialgebra", "--dim", "3",
                     "--prime", "5"]) == 1
        assert "budget" in capsys.readouterr().err

    def test_bad_prime_exits_two(self, capsys):
        assert main(["search", "--kind", "hom-algebra", "--dim", "1",
                     "--prime", "4"]) == 2


class TestCorpus:
    def test_full_corpus_matches(self, capsys):
        assert main(["corpus", "--oracle-samples", "5"]) == 0
        out = capsys.readouterr().out
        assert "all fixtures match committed verdicts" in out
        assert "expected-fail, paper-claims-pass" in out

    def test_perturbed_fixture_detected(self, tmp_path, capsys):
        import shutil
        work = tmp_path / "corpus"
        shutil.copytree(DATA_DIR, work)
        target = work / "hom3dim_ab.json"
        doc = json.loads(target.read_text())
        doc["maps"]["mu"][0][0][0] = "5"
        target.write_text(json.dumps(doc))
        assert main(["corpus", "--data", str(work),
                     "--oracle-samples", "5"]) == 1
        assert "DRIFT" in capsys.readouterr().out

    def test_empty_corpus_exits_two(self, tmp_path, capsys):
        assert main(["corpus", "--data", str(tmp_path)]) == 2

    def test_machine_format(self, capsys):
        assert main(["corpus", "--oracle-samples", "2", "--format",
                     "machine"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["ok"] is True
