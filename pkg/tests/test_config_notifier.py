import json
import re

import pytest

from chibound.config import DEFAULT_SETTINGS, active_settings, load_settings, use_settings
from chibound.errors import (CapacityError, ConfigError, InputError, OutOfClassError, ParseError, SchemaError,
                             SizeError, TheoryViolation)
from chibound.graph import complete_graph
from chibound.notifier import notify, set_verbose
from chibound.oracle import chromatic_number_exact, find_forbidden_by_enumeration, max_clique_bruteforce
from chibound.recognition import Witness, WitnessKind


@pytest.fixture(autouse=True)
def quiet_logger():
    set_verbose(False)
    yield
    set_verbose(False)


def test_defaults_without_file(tmp_path):
    settings = load_settings(str(tmp_path / "absent.json"), environ={})
    assert settings == DEFAULT_SETTINGS
    assert settings is not DEFAULT_SETTINGS


def test_file_overrides_known_keys_only(tmp_path, capsys):
    path = tmp_path / "chibound.json"
    path.write_text(json.dumps({"FUZZ_N": 9, "NOT_A_KEY": 1}))
    settings = load_settings(str(path), environ={})
    assert settings["FUZZ_N"] == 9
    assert "NOT_A_KEY" not in settings
    assert "[WARN] Ignoring unknown setting NOT_A_KEY" in capsys.readouterr().err


def test_bad_json_falls_back_to_defaults(tmp_path, capsys):
    path = tmp_path / "chibound.json"
    path.write_text("{oops")
    assert load_settings(str(path), environ={}) == DEFAULT_SETTINGS
    assert "[WARN]" in capsys.readouterr().err


def test_config_path_from_environment(tmp_path):
    path = tmp_path / "other.json"
    path.write_text(json.dumps({"FUZZ_COUNT": 3}))
    assert load_settings(environ={"CHIBOUND_CONFIG": str(path)})["FUZZ_COUNT"] == 3


def test_oracle_limit_from_environment():
    quiet = {"CHIBOUND_CONFIG": "/nonexistent"}
    assert load_settings(environ=quiet)["ORACLE_LIMIT"] == 32
    assert load_settings(environ={**quiet, "CHIBOUND_ORACLE_LIMIT": " 12 "})["ORACLE_LIMIT"] == 12
    for raw in ("abc", "0", "-4"):
        with pytest.raises(ConfigError):
            load_settings(environ={**quiet, "CHIBOUND_ORACLE_LIMIT": raw})


def test_library_limits_follow_local_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "chibound.json").write_text(json.dumps({"BRUTE_CLIQUE_LIMIT": 4, "ENUMERATION_LIMIT": 5,
                                                        "ORACLE_LIMIT": 6}))
    G = complete_graph(7)
    with pytest.raises(SizeError):
        max_clique_bruteforce(G)
    with pytest.raises(SizeError):
        find_forbidden_by_enumeration(G, "Diamond")
    with pytest.raises(SizeError):
        chromatic_number_exact(G)
    assert active_settings()["BRUTE_CLIQUE_LIMIT"] == 4


def test_installed_settings_win_over_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "chibound.json").write_text(json.dumps({"BRUTE_CLIQUE_LIMIT": 4}))
    use_settings(dict(DEFAULT_SETTINGS))
    assert max_clique_bruteforce(complete_graph(7)) == 7


def test_notify_line_format(capsys):
    notify('OK', "hello")
    err = capsys.readouterr().err
    assert re.match(r"^\[\d\d:\d\d:\d\d\] \S+ \[OK\] hello$", err.strip())


def test_debug_lines_follow_verbosity(capsys):
    notify('DEBUG', "hidden")
    assert "hidden" not in capsys.readouterr().err
    set_verbose(True)
    notify('DEBUG', "shown")
    assert "shown" in capsys.readouterr().err


def test_exit_codes():
    w = Witness(WitnessKind.DIAMOND, (0, 1, 2, 3))
    assert InputError("x").exit_code == 2
    assert ParseError("x", line=3).exit_code == 2
    assert SchemaError("colouring", "x").field == "colouring"
    assert SizeError("thing", 5, 9).exit_code == 2
    assert ConfigError("x").exit_code == 2
    assert CapacityError(3, 2).exit_code == 3
    assert OutOfClassError(w).exit_code == 1
    assert TheoryViolation("P6", "x").exit_code == 3


def test_theory_violation_payload():
    e = TheoryViolation("Hall", "no matching", state={"cells": [[1, 2]]},
                        witness=Witness(WitnessKind.P4, (0, 1, 2, 3)))
    payload = e.to_dict()
    assert payload["error"] == "TheoryViolation"
    assert payload["property"] == "Hall"
    assert payload["state"] == {"cells": [[1, 2]]}
    assert payload["witness"] == {"kind": "P4", "vertices": [0, 1, 2, 3]}
    assert "line 3" in ParseError("bad", line=3).message
