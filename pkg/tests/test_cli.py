#!/usr/bin/env python3
"""
CLI Tests
=========

Tests for the ppart command-line interface: output formats, JSON mode,
configuration files and exit codes.

Run with: pytest tests/test_cli.py -v
"""

import json

import pytest

from algebra.polynomials import BiPolynomial, IntPolynomial, MultiPolynomial
from checks import CheckReport, IdentityCheck
from tools.ppart_cli import EXIT_IDENTITY_FAILED, EXIT_OK, EXIT_USAGE, build_parser, coefficient_map, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}), encoding="utf-8")
    return str(path)


@pytest.fixture
def shape_file(tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps({"outer": [2, 1]}), encoding="utf-8")
    return str(path)


# =============================================================================
# Poset commands
# =============================================================================

class TestPosetCommands:
    """Commands reading --poset."""

    def test_extensions(self, capsys, fig1_file):
        code, out, _ = run(capsys, "extensions", "--poset", str(fig1_file))
        assert code == EXIT_OK
        assert out == "213\n231\n"

    def test_extensions_json(self, capsys, fig1_file):
        _, out, _ = run(capsys, "extensions", "--poset", str(fig1_file), "--json")
        assert json.loads(out) == {"extensions": ["213", "231"], "count": 2}

    def test_stats(self, capsys, fig1_file):
        _, out, _ = run(capsys, "stats", "--poset", str(fig1_file))
        assert out == "213 des=1 maj=1 S={1}\n231 des=1 maj=2 S={2}\n"

    def test_um(self, capsys, fig1_file):
        _, out, _ = run(capsys, "um", "--poset", str(fig1_file), "--m", "1")
        assert out == "q + q^2\n"

    def test_ugf(self, capsys, fig1_file):
        code, out, _ = run(capsys, "ugf", "--poset", str(fig1_file))
        assert code == EXIT_OK
        assert out == "(q + q^2) / ((1-q)*(1-q^2)*(1-q^3))\n"

    def test_ugf_json(self, capsys, fig1_file):
        _, out, _ = run(capsys, "ugf", "--poset", str(fig1_file), "--json")
        data = json.loads(out)
        assert data['numerator'] == {"q^1": 1, "q^2": 1}
        assert data['denominator'] == [1, 2, 3]

    def test_orderpoly_with_value(self, capsys, fig1_file):
        _, out, _ = run(capsys, "orderpoly", "--poset", str(fig1_file), "--m", "3")
        assert out == "-1/3*m + 1/3*m^3\nOmega(3) = 8\n"

    def test_orderpoly_json(self, capsys, fig1_file):
        _, out, _ = run(capsys, "orderpoly", "--poset", str(fig1_file), "--m", "4", "--json")
        data = json.loads(out)
        assert data['order_polynomial'] == {"m^1": "-1/3", "m^3": "1/3"}
        assert data['value'] == 20

    def test_reciprocity(self, capsys, fig1_file):
        code, out, _ = run(capsys, "reciprocity", "--poset", str(fig1_file), "--m", "2")
        assert code == EXIT_OK
        assert out.startswith("PASS order_polynomial_reciprocity")
        assert "FAIL" not in out

    def test_alphabeta(self, capsys, fig1_file):
        code, out, _ = run(capsys, "alphabeta", "--poset", str(fig1_file))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "S={} alpha=0 beta=0"
        assert "S={1,2} alpha=2 beta=0" in out

    def test_gamma(self, capsys, fig1_file):
        _, out, _ = run(capsys, "gamma", "--poset", str(fig1_file))
        assert out == "F(1,2) + F(2,1)\n"

    def test_neggers(self, capsys, fig1_file):
        _, out, _ = run(capsys, "neggers", "--poset", str(fig1_file))
        assert out == "2*t\nreal-rooted: yes\n"

    def test_polytopes_rejects_mixed_labeling(self, capsys, fig1_file):
        code, _, err = run(capsys, "polytopes", "--poset", str(fig1_file), "--m", "1")
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_verify(self, capsys, fig1_file):
        code, out, _ = run(capsys, "verify", "--poset", str(fig1_file))
        assert code == EXIT_OK
        assert out.splitlines()[-1].startswith("PASS: ")
        assert out.rstrip().endswith("0 failed")

    def test_verify_json(self, capsys, fig1_file):
        code, out, _ = run(capsys, "verify", "--poset", str(fig1_file), "--json")
        assert code == EXIT_OK
        assert json.loads(out)['passed'] is True


# =============================================================================
# Other inputs
# =============================================================================

class TestOtherCommands:
    """Commands reading parts, graphs, shapes and sizes."""

    def test_newcomb_at_q_one(self, capsys):
        code, out, _ = run(capsys, "newcomb", "--parts", "3,2", "--q", "1")
        assert code == EXIT_OK
        assert out == "1 + 6*t + 3*t^2\n"

    def test_newcomb_with_q(self, capsys):
        code, out, _ = run(capsys, "newcomb", "--parts", "1,1", "--tmax", "4")
        assert code == EXIT_OK
        assert out == "1 + t*q\n"

    def test_newcomb_json(self, capsys):
        _, out, _ = run(capsys, "newcomb", "--parts", "2,1", "--json", "--tmax", "3")
        data = json.loads(out)
        assert data['a'] == {"t^0 q^0": 1, "t^1 q^1": 1, "t^1 q^2": 1}
        assert data['report']['passed'] is True

    def test_shuffle(self, capsys):
        code, out, _ = run(capsys, "shuffle", "--parts", "2,1", "--kinds", "natural,strict")
        assert code == EXIT_OK
        assert all(line.startswith("PASS shuffle_formula") for line in out.splitlines())

    def test_shuffle_needs_two_chains(self, capsys):
        code, _, err = run(capsys, "shuffle", "--parts", "2")
        assert code == EXIT_USAGE
        assert "two chain sizes" in err

    def test_delta(self, capsys, fig1_file):
        code, out, _ = run(capsys, "delta", "--poset", str(fig1_file), "--n", "1", "--json")
        assert code == EXIT_OK
        assert json.loads(out)['n'] == 1

    def test_chromatic(self, capsys, k3_file):
        code, out, _ = run(capsys, "chromatic", "--graph", k3_file)
        assert code == EXIT_OK
        assert out == "2*lambda - 3*lambda^2 + lambda^3\nacyclic orientations: 6\n"

    def test_kreweras(self, capsys, shape_file):
        code, out, _ = run(capsys, "kreweras", "--shape", shape_file, "--tmax", "2")
        assert code == EXIT_OK
        assert out == "theta: 1 1\nw: 1 5 14\n"

    def test_stirling(self, capsys):
        _, out, _ = run(capsys, "stirling", "--n", "2")
        assert out == "t + 2*t^2\n"

    def test_lambda(self, capsys):
        _, out, _ = run(capsys, "lambda", "--n", "2", "--m", "2")
        assert out == "1 + q1*q2\n"

    def test_lambda_over_limit(self, capsys):
        code, _, err = run(capsys, "lambda", "--n", "9", "--m", "2")
        assert code == EXIT_USAGE
        assert "exceeds" in err


# =============================================================================
# Exit codes and configuration
# =============================================================================

class TestExitCodes:
    """0 success, 1 failed identity, 2 usage or input error."""

    def test_missing_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == EXIT_USAGE

    def test_missing_poset_flag(self, capsys):
        code, _, err = run(capsys, "extensions")
        assert code == EXIT_USAGE
        assert err == "error: --poset is required\n"

    def test_missing_poset_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "extensions", "--poset", str(tmp_path / "none.json"))
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_cyclic_poset_file(self, capsys, tmp_path):
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps({"p": 2, "covers": [[1, 2], [2, 1]]}), encoding="utf-8")
        code, _, _ = run(capsys, "extensions", "--poset", str(path))
        assert code == EXIT_USAGE

    def test_long_cycle_poset_file(self, capsys, tmp_path):
        covers = [[i, i + 1] for i in range(1, 700)] + [[700, 1]]
        path = tmp_path / "long_cycle.json"
        path.write_text(json.dumps({"p": 700, "covers": covers}), encoding="utf-8")
        code, _, err = run(capsys, "extensions", "--poset", str(path))
        assert code == EXIT_USAGE
        assert "cycle" in err

    def test_bad_parts(self, capsys):
        code, _, err = run(capsys, "newcomb", "--parts", "1,x", "--q", "1")
        assert code == EXIT_USAGE
        assert "comma-separated" in err

    def test_failed_identity(self, capsys, fig1_file, monkeypatch):
        def failing(P, m_max):
            report = CheckReport("reciprocity")
            report.add(IdentityCheck.of("u_m_reciprocity", False, "m=0: mismatch", 0))
            return report

        monkeypatch.setattr("gf.reciprocity.reciprocity_check", failing)
        code, out, _ = run(capsys, "reciprocity", "--poset", str(fig1_file))
        assert code == EXIT_IDENTITY_FAILED
        assert out == "FAIL u_m_reciprocity: m=0: mismatch\n"


class TestConfigFlag:
    """--config selects a ppart_config.yaml."""

    def test_enabled_checks_from_file(self, capsys, fig1_file, tmp_path):
        path = tmp_path / "ppart_config.yaml"
        path.write_text("verify:\n  m_max: 2\n  enabled_checks: [alpha_beta]\n", encoding="utf-8")
        code, out, _ = run(capsys, "verify", "--poset", str(fig1_file), "--config", str(path))
        assert code == EXIT_OK
        assert "alpha_beta" in out
        assert "reciprocity" not in out

    def test_invalid_yaml(self, capsys, fig1_file, tmp_path):
        path = tmp_path / "ppart_config.yaml"
        path.write_text("verify: [unclosed\n", encoding="utf-8")
        code, _, err = run(capsys, "verify", "--poset", str(fig1_file), "--config", str(path))
        assert code == EXIT_USAGE
        assert err.startswith("error:")


# =============================================================================
# Helpers
# =============================================================================

class TestHelpers:
    """Parser and coefficient maps."""

    def test_every_command_is_registered(self):
        parser = build_parser()
        args = parser.parse_args(["verify", "--poset", "p.json", "--json"])
        assert args.command == "verify" and args.json and args.q == "sym"

    def test_coefficient_maps(self):
        assert coefficient_map(IntPolynomial((1, 0, 3)), "t") == {"t^0": 1, "t^2": 3}
        assert coefficient_map(BiPolynomial({(1, 2): 4})) == {"t^1 q^2": 4}
        assert coefficient_map(MultiPolynomial(2, {(1, 1): 1}), "q") == {"q1^1 q2^1": 1}

    def test_coefficient_map_rejects_other_types(self):
        with pytest.raises(TypeError):
            coefficient_map("q")
