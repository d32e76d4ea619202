from __future__ import annotations

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from gdua.cli import SessionConfig, main
from gdua.errors import InputError
from gdua.jsonio import element_from_json, presentation_from_json, presentation_to_json, scalar_from_json
from gdua.parser import parse_element

from cli_cases import CASES, X23
from conftest import L, X
from corpus import EXPRESSIONS

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("GDUA_REGEN_GOLDEN") == "1"


def run(argv, capsys, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, capsys):
    got, out, err = run(argv, capsys)
    assert got == code, err
    path = GOLDEN / f"{name}.txt"
    text = out if out else f"[stderr] {err}"
    if REGEN:
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(text)
    assert text == path.read_text()
    if "--json" in argv:
        json.loads(out)


def test_every_subcommand_has_a_golden():
    commands = {"nf", "mul", "conformal", "invariants", "center", "is-normal", "aut-classify",
                "aut-make", "aut-apply", "aut-check", "downup"}
    used = {next(a for a in argv if not a.startswith("-") and not a.startswith("{")) for _, argv, code in CASES
            if code == 0}
    assert commands <= used


def test_every_exit_code_is_exercised():
    assert {c for _, _, c in CASES} == {0, 1, 2, 3}


def test_downup_json_contract(capsys):
    code, out, _ = run(["downup", "5/2", "-1", "0", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["case"] == "a" and data["group"] == "(K*)^2 x| Z/2Z"
    assert set(data) >= {"case", "data", "witness"}


def test_aut_check_residual_witness(capsys):
    code, out, _ = run(["aut-check", "u", "d", "h", "--preset", X23, "--json"], capsys)
    data = json.loads(out)
    assert code == 1
    assert data["case"] == "not_morphism"
    assert data["witness"]["du"]["terms"]


def test_stdin_expression(capsys, monkeypatch):
    code, out, _ = run(["nf", "-", "--preset", X23], capsys, stdin="d*u\n", monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "3*u*d - h"


def test_preset_file(tmp_path, capsys):
    p = tmp_path / "preset.json"
    p.write_text(X23)
    code, out, _ = run(["nf", "d*u", "--preset", f"@{p}"], capsys)
    assert code == 0 and out.strip() == "3*u*d - h"


def test_json_on_error_is_valid(capsys):
    for argv in (["nf", "du", "--preset", X23, "--json"], ["downup", "1", "0", "0", "--json"]):
        code, out, _ = run(argv, capsys)
        data = json.loads(out)
        assert data["exit_code"] == code != 0


def test_corpus_round_trip_through_cli(capsys):
    P = presentation_from_json(X23)
    for text in EXPRESSIONS:
        code, out, _ = run(["nf", text, "--preset", X23], capsys)
        assert code == 0
        printed = out.strip()
        assert parse_element(printed, P) == parse_element(text, P), text
        code, out2, _ = run(["nf", printed, "--preset", X23], capsys)
        assert out2.strip() == printed


def test_json_round_trips(capsys):
    P = presentation_from_json(X23)
    code, out, _ = run(["nf", "(1+1*sqrt(2))*h*u - 3/4*d", "--preset", X23, "--json"], capsys)
    el = element_from_json(json.loads(out)["element"], P)
    assert el == parse_element("(1+1*sqrt(2))*h*u - 3/4*d", P)
    Q = L(X**2 + X / 3, 2, 5, 1)
    assert presentation_from_json({k: v for k, v in presentation_to_json(Q).items() if k != "text"}) == Q
    assert scalar_from_json({"a": "1/2", "b": "3", "D": -3}) * 2 == scalar_from_json("1+6*sqrt(-3)")


def test_session_config_validates():
    with pytest.raises(InputError):
        SessionConfig(None, search_bound=0)
    with pytest.raises(InputError):
        SessionConfig(None).pres


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "gdua", "downup", "5/2", "-1", "0", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["case"] == "a"
