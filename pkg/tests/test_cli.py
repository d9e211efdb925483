"""Command-line interface: subcommands, exit codes, pipelines."""

import json

import numpy as np
import pytest

from hppoly.cli import main
from hppoly.serialize import dumps, matrix_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCatalogCommand:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        data = json.loads(out)
        assert "F7" in data["names"]

    def test_dump(self, capsys):
        code, out, _ = run(capsys, "catalog", "F7")
        assert code == 0
        assert len(json.loads(out)["bases"]) == 28

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "catalog", "NoSuch")
        assert code == 1 and "NoSuch" in err


class TestHppCommand:
    def test_fano_hits(self, capsys):
        code, out, _ = run(capsys, "hpp", "F7", "--method", "rays",
                           "--trials", "20000", "--seed", "1")
        assert code == 2
        rep = json.loads(out)
        assert rep["verdict"] == "counterexample"
        assert "certificate" in rep

    def test_uniform_clean(self, capsys):
        code, out, _ = run(capsys, "hpp", "U_{3,6}", "--method", "rays",
                           "--trials", "5000", "--seed", "1")
        assert code == 0
        assert json.loads(out)["verdict"] == "no-counterexample-found"

    def test_elementary_method(self, capsys):
        code, out, _ = run(capsys, "hpp", "U_{2,4}", "--method", "elementary",
                           "--trials", "5000", "--seed", "1")
        assert code == 0

    def test_shifted_method(self, capsys):
        code, _, _ = run(capsys, "hpp", "U_{2,4}", "--method", "shifted",
                         "--trials", "100", "--seed", "1")
        assert code == 0

    def test_json_input(self, capsys, tmp_path):
        from hppoly.catalog import catalog

        path = tmp_path / "m.json"
        path.write_text(dumps(catalog("F7")))
        code, _, _ = run(capsys, "hpp", str(path), "--trials", "20000", "--seed", "1")
        assert code == 2

    def test_seed_stability(self, capsys):
        _, out1, _ = run(capsys, "hpp", "F7", "--trials", "20000", "--seed", "3")
        _, out2, _ = run(capsys, "hpp", "F7", "--trials", "20000", "--seed", "3")
        assert out1 == out2

    def test_tolerance_overrides(self, capsys):
        # with an absurdly loose imaginary tolerance every nonreal root is
        # classified as real, so the usual counterexamples disappear
        code, out, _ = run(capsys, "hpp", "F7", "--method", "rays",
                           "--trials", "2000", "--seed", "1", "--tol-im", "100")
        assert code == 0
        assert json.loads(out)["verdict"] == "no-counterexample-found"


class TestReproduceCommand:
    def test_single_fixture(self, capsys):
        code, out, _ = run(capsys, "reproduce", "fano-ray")
        assert code == 0
        assert json.loads(out)[0]["passed"] is True

    def test_pretty_lines(self, capsys):
        code, out, _ = run(capsys, "reproduce", "k4-star-ray", "--pretty")
        assert code == 0 and out.startswith("PASS")

    def test_eps_override(self, capsys):
        code, out, _ = run(capsys, "reproduce", "relaxed-fano-window", "--eps", "0.3")
        assert code == 0
        assert json.loads(out)[0]["nonreal"] is True

    def test_eps_outside_window(self, capsys):
        code, out, _ = run(capsys, "reproduce", "relaxed-fano-window", "--eps", "0.01")
        assert code == 0
        assert json.loads(out)[0]["nonreal"] is False

    def test_unknown_fixture(self, capsys):
        code, _, err = run(capsys, "reproduce", "nope")
        assert code == 1


class TestNiceCommand:
    def test_flat(self, capsys):
        code, out, _ = run(capsys, "nice", "MK4", "--flat", "0,1,2")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "nice" and data["weights"] == ["1/2", "1/2", "1/2"]

    def test_free_extension(self, capsys):
        code, out, _ = run(capsys, "nice", "Q7del7", "--flat", "all")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "infeasible-nonneg"
        assert data["weights"][0] == "-1/6"

    def test_cotrunc(self, capsys):
        code, out, _ = run(capsys, "nice", "U_{1,4}", "--cotrunc", "all")
        assert code == 0
        assert json.loads(out)["status"] == "nice"

    def test_transversal(self, capsys, tmp_path):
        from hppoly.catalog import presentation_of

        path = tmp_path / "w3.json"
        path.write_text(dumps(presentation_of("W3")))
        code, out, _ = run(capsys, "nice", "--transversal", str(path), "--weights", "ones")
        assert code == 0
        assert json.loads(out)["uniform"] is False

    def test_mode_required(self, capsys):
        code, _, err = run(capsys, "nice", "MK4")
        assert code == 1


class TestConstructCommand:
    def test_basis_dual(self, capsys):
        code, out, _ = run(capsys, "construct", "basis U_{2,3} | dual")
        assert code == 0
        data = json.loads(out)
        assert sorted(t["subset"] for t in data["terms"]) == [[0], [1], [2]]

    def test_relax_pipeline(self, capsys):
        code, out, _ = run(capsys, "construct", "basis F7 | relax 1,3,5")
        assert code == 0
        assert len(json.loads(out)["terms"]) == 29

    def test_detpoly_support(self, capsys, tmp_path):
        A = np.array([[1, 1, 0], [0, 1, 1]], dtype=float)
        path = tmp_path / "a.json"
        path.write_text(json.dumps(matrix_to_dict(A)))
        code, out, _ = run(capsys, "construct", f"detpoly {path} | support")
        assert code == 0
        assert len(json.loads(out)["bases"]) == 3

    def test_error_reports_step(self, capsys):
        # {0,1,3} is already a basis of F7, so the relaxation must refuse
        code, _, err = run(capsys, "construct", "basis F7 | relax 0,1,3")
        assert code == 1 and "step 1" in err

    def test_trunc_stage(self, capsys):
        code, out, _ = run(capsys, "construct", "basis U_{2,3} | trunc 0.5")
        assert code == 0
        assert sorted(t["subset"] for t in json.loads(out)["terms"]) == [[0], [1], [2]]
