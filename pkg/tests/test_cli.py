#!/usr/bin/env python3
"""
ArtinBD Toolkit - Command line tests
License: MIT
"""

import json
import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.cli import max_index
from main import build_parser, main


def output(capsys) -> str:
    return capsys.readouterr().out.strip()


@pytest.mark.parametrize("argv,expected", [
    (["reduce", "u", "u1 u1^-1"], "e"),
    (["reduce", "x", "x1 x1 x2"], "x2"),
    (["reduce", "u", "u1 u2"], "u1 u2"),
    (["reduce", "a", "a1 a2 a2^-1"], "a1"),
    (["act", "--rep", "rhoB", "--n", "3", "a1", "u2"], "u2^-1 u1 u2"),
    (["act", "--rep", "rhoDv", "--n", "4", "a1", "v3"], "v1^-1 v3"),
    (["act", "--rep", "rhoPlus", "--n", "4", "a1", "x1"], "x2"),
    (["iso", "--flavor", "B", "--n", "3", "--phi", "b2 b1 b2^-1"], "(u2 | e)"),
    (["iso", "--flavor", "D", "--n", "4", "--psi", "(g1 g2 | e)"], "d3 d1 d2^-1 d3^-1"),
    (["rank2", "--m", "3", "nf", "a a a a"], "c^1 * a"),
    (["rank2", "--m", "4", "apply", "--auto", "eta", "b"], "b a"),
    (["rank2", "--m", "4", "classify", "--alpha", "b^-1", "--beta", "b a b"], "iota(e) eps^0 tau^0 eta^1"),
])
def test_commands(capsys, argv, expected):
    assert main(argv) == 0
    assert output(capsys) == expected


def test_conj_witness(capsys):
    assert main(["conj", "u", "u1 u2", "u2 u1"]) == 0
    assert output(capsys) == "u1^-1"


def test_conj_not_conjugate(capsys):
    assert main(["conj", "x", "x1 x3", "x1 x2", "--n", "3"]) == 1
    assert output(capsys) == "not conjugate"


def test_conj_json(capsys):
    assert main(["conj", "x", "x1 x2", "x2 x1", "--json"]) == 0
    data = json.loads(output(capsys))
    assert data["conjugate"] is True
    assert data["witness"] == "x1"


def test_rank2_classify_json(capsys):
    argv = ["rank2", "--m", "4", "classify", "--alpha", "a^-1", "--beta", "b^-1", "--json"]
    assert main(argv) == 0
    assert json.loads(output(capsys)) == {'m': 4, 'inner_witness': 'e', 'e_eps': 1, 'e_tau': 0, 'e_eta': 0}


def test_rank2_nf_json(capsys):
    assert main(["rank2", "--m", "4", "nf", "b a a b^-1", "--json"]) == 0
    assert json.loads(output(capsys)) == {'m': 4, 'c_exp': 1, 'residue': 'e', 'quotient': 'e'}


def test_verify_pass_json(capsys):
    assert main(["verify", "deltakey", "--n", "3", "--len", "5", "--json", "--stable"]) == 0
    data = json.loads(output(capsys))
    assert data["pass"] is True
    assert data["failures"] == []
    assert data["params"] == {"n": 3, "len": 5}
    assert "wall_time" not in data


def test_verify_plain_output(capsys):
    assert main(["verify", "x0-fixed", "--n", "4", "--stable"]) == 0
    text = output(capsys)
    assert "x0-fixed" in text
    assert "PASS" in text


def test_verify_suite_error(capsys):
    assert main(["verify", "center", "--flavor", "Q", "--json"]) == 2
    assert json.loads(output(capsys))["error"]


def test_verify_unknown_suite(capsys):
    assert main(["verify", "no-such-suite"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_list_json(capsys):
    assert main(["list", "--json"]) == 0
    suites = json.loads(output(capsys))
    assert "deltakey" in suites and "rank2-out" in suites


@pytest.mark.parametrize("argv", [
    ["reduce", "u", "u1 q2"],
    ["reduce", "nope", "u1"],
    ["act", "--rep", "rhoQ", "--n", "3", "a1", "u1"],
    ["act", "--rep", "rhoB", "--n", "3", "a3", "u1"],
    ["reduce", "u", "u1; rm -rf"],
    ["act", "--rep", "rhoB", "--n", "0", "a1", "u1"],
    ["rank2", "--m", "3", "apply", "--auto", "eta", "a"],
    ["rank2", "--m", "4", "classify", "--alpha", "a", "--beta", "a"],
    ["verify", "Bad_Suite"],
])
def test_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("[!]")


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_max_index():
    assert max_index("x1 x12 x3") == 12
    assert max_index("e") == 0


@pytest.mark.parametrize("argv", [
    ["rank2", "--json", "--m", "4", "nf", "b a a b^-1"],
    ["rank2", "--m", "4", "--json", "nf", "b a a b^-1"],
    ["rank2", "--m", "4", "nf", "b a a b^-1", "--json"],
])
def test_rank2_shared_flags_before_or_after_action(capsys, argv):
    assert main(argv) == 0
    assert json.loads(output(capsys)) == {'m': 4, 'c_exp': 1, 'residue': 'e', 'quotient': 'e'}


def test_rank2_flags_default_off():
    args = build_parser().parse_args(["rank2", "--m", "3", "nf", "a"])
    assert args.json is False and args.debug is False and args.config is None
