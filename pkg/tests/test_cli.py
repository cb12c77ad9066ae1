"""Command-line interface: exit codes, output formats, determinism."""

import json

import pytest

from qqwalk.cli import main

K3 = "3 3\n0 1\n1 2\n2 0\n"
STAR = "4 3\n3 0\n3 1\n3 2\n"
WEIGHTS = "a 0 1+i\na 2 1-j\na 4 2\n"
STAR_LEAF_FIRST = "4 3\n0 3\n1 3\n2 3\n"


@pytest.fixture
def k3_path(tmp_path):
    p = tmp_path / "k3.g"
    p.write_text(K3)
    return str(p)


@pytest.fixture
def star_path(tmp_path):
    p = tmp_path / "star.g"
    p.write_text(STAR_LEAF_FIRST)
    return str(p)


@pytest.fixture
def weights_path(tmp_path):
    p = tmp_path / "w.w"
    p.write_text(WEIGHTS)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrum:
    def test_grover_direct_json(self, capsys, k3_path):
        code, out, _ = run(capsys, "spectrum", "--graph", k3_path, "--grover")
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "direct"
        assert sum(e["mult"] for e in payload["psi_spectrum"]) == 12
        reps = {(round(e["re"], 6), round(e["im"], 6))
                for e in payload["class_reps"]}
        assert (1.0, 0.0) in reps

    def test_formula_route(self, capsys, star_path, weights_path):
        code, out, _ = run(capsys, "spectrum", "--graph", star_path,
                           "--coin", weights_path, "--method", "theorem8")
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "theorem8"
        assert payload["cross_check"]["verdict"] is True

    def test_alpha_route(self, capsys, k3_path):
        code, out, _ = run(capsys, "spectrum", "--graph", k3_path,
                           "--alpha", "1+i+j+k", "--method", "theorem10")
        assert code == 0
        assert json.loads(out)["cross_check"]["verdict"] is True

    def test_alpha_route_rejects_nonconstant_coin(self, capsys, star_path,
                                                  weights_path):
        code, _, err = run(capsys, "spectrum", "--graph", star_path,
                           "--coin", weights_path, "--method", "theorem10")
        assert code == 2
        assert "vertex-independent" in err

    def test_coin_options_are_exclusive(self, capsys, k3_path):
        code, _, err = run(capsys, "spectrum", "--graph", k3_path,
                           "--grover", "--alpha", "2")
        assert code == 2
        assert "exactly one" in err

    def test_deterministic_output(self, capsys, k3_path):
        _, first, _ = run(capsys, "spectrum", "--graph", k3_path, "--grover")
        _, second, _ = run(capsys, "spectrum", "--graph", k3_path, "--grover")
        assert first == second

    def test_csv_output(self, capsys, k3_path):
        code, out, _ = run(capsys, "spectrum", "--graph", k3_path,
                           "--grover", "--output", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "re,im,mult,method"
        assert all(line.endswith(",direct") for line in lines[1:])


class TestGroverSubcommand:
    def test_triangle(self, capsys, k3_path):
        code, out, _ = run(capsys, "grover", "--graph", k3_path)
        assert code == 0
        assert json.loads(out)["method"] == "grover"

    def test_tree_note(self, capsys, star_path):
        code, out, _ = run(capsys, "grover", "--graph", star_path)
        assert code == 0
        assert "tree" in json.loads(out)["cross_check"]["note"]


class TestUnitarity:
    def test_grover_unitary(self, capsys, k3_path):
        code, out, _ = run(capsys, "unitarity", "--graph", k3_path, "--grover")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"agree": True, "condition_holds": True,
                           "matrix_unitary": True}

    def test_non_unitary_coin_exits_one(self, capsys, k3_path, tmp_path):
        coin = tmp_path / "bad.w"
        coin.write_text("v 0 0.3\nv 1 0.3\nv 2 0.3\n")
        code, out, _ = run(capsys, "unitarity", "--graph", k3_path,
                           "--coin", str(coin))
        assert code == 1
        payload = json.loads(out)
        assert payload["condition_holds"] is False
        assert payload["agree"] is True


class TestZeta:
    def test_ihara(self, capsys, k3_path):
        code, out, _ = run(capsys, "zeta-ihara", "--graph", k3_path)
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] is True
        assert len(payload["samples"]) == 8

    def test_weighted(self, capsys, k3_path, tmp_path):
        coin = tmp_path / "c.w"
        coin.write_text("v 0 1+2i\nv 1 -0.5i\nv 2 3\n")
        code, out, _ = run(capsys, "zeta-weighted", "--graph", k3_path,
                           "--coin", str(coin))
        assert code == 0
        assert json.loads(out)["verdict"] is True

    def test_weighted_rejects_quaternionic(self, capsys, star_path,
                                           weights_path):
        code, _, err = run(capsys, "zeta-weighted", "--graph", star_path,
                           "--coin", weights_path)
        assert code == 2
        assert "zeta-quat" in err

    def test_quaternionic(self, capsys, star_path, weights_path):
        code, out, _ = run(capsys, "zeta-quat", "--graph", star_path,
                           "--coin", weights_path)
        assert code == 0
        assert json.loads(out)["verdict"] is True

    def test_csv_samples(self, capsys, k3_path):
        code, out, _ = run(capsys, "zeta-ihara", "--graph", k3_path,
                           "--output", "csv", "--samples", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("t_re,t_im,lhs_re")
        assert len(lines) == 4


class TestErrorsAndEnvironment:
    def test_missing_graph_file(self, capsys):
        code, _, err = run(capsys, "zeta-ihara", "--graph", "/no/such/file")
        assert code == 2
        assert "cannot read" in err

    def test_malformed_graph(self, capsys, tmp_path):
        p = tmp_path / "bad.g"
        p.write_text("2 1\n0 0\n")
        code, _, err = run(capsys, "zeta-ihara", "--graph", str(p))
        assert code == 2
        assert "loop" in err

    def test_bad_alpha_literal(self, capsys, k3_path):
        code, _, err = run(capsys, "spectrum", "--graph", k3_path,
                           "--alpha", "1+q")
        assert code == 2

    def test_tol_env_override(self, capsys, k3_path, monkeypatch):
        monkeypatch.setenv("QQWALK_TOL", "not-a-number")
        code, _, err = run(capsys, "unitarity", "--graph", k3_path, "--grover")
        assert code == 2
        assert "QQWALK_TOL" in err
        monkeypatch.setenv("QQWALK_TOL", "1e-6")
        code, _, _ = run(capsys, "unitarity", "--graph", k3_path, "--grover")
        assert code == 0

    def test_explicit_tol_beats_env(self, capsys, k3_path, monkeypatch):
        monkeypatch.setenv("QQWALK_TOL", "garbage")
        code, _, _ = run(capsys, "unitarity", "--graph", k3_path, "--grover",
                         "--tol", "1e-9")
        assert code == 0


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "all checks passed"
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert len(lines) == 7

    def test_seed_option(self, capsys):
        code, out, _ = run(capsys, "selftest", "--seed", "12345")
        assert code == 0
        assert out.strip().endswith("all checks passed")
