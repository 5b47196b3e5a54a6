import json

import pytest

import carlitz


def test_version_and_commands():
    assert carlitz.__version__ == "1.0.0"
    assert "verify" in carlitz.commands()


def test_verify_passes_and_is_deterministic():
    a = carlitz.run("verify", 2, "theta^2+theta+1", 1)
    b = carlitz.run("verify", 2, "1,1,1", 1)
    assert a.passed
    assert all(a.checks().values())
    assert a.text == b.text
    assert a.data["field"]["degree"] == 12


def test_valuation_grid():
    r = carlitz.run("valuations", 2, "theta^2+theta+1", 1)
    values = {row["value"] for row in r.data["data"]["table"]}
    assert {"1/12", "1/6", "1/3", "2/3"} <= values
    assert carlitz.valuation(3, "theta", 0, 0, 1, 1) == (1, 2)


def test_exact_values():
    assert carlitz.omega(3, "theta", 0, 0, 1) == "x"
    assert carlitz.carlitz_coeffs(3, "theta^2") == "tau^2+(theta^3+theta)*tau+theta^2"
    assert carlitz.describe(2, "theta^2+theta+1", 1) == "q=2 p=theta^2+theta+1 n=1 D=12"


def test_config_errors():
    with pytest.raises(carlitz.ConfigError):
        carlitz.run("verify", 2, "theta^2+theta", 0)
    with pytest.raises(ValueError):
        carlitz.describe(6, "theta")
    with pytest.raises(ValueError):
        carlitz.run("bogus", 2, "theta")


def test_oracle_report_is_json():
    r = carlitz.run("oracle", 3, "theta", 1)
    assert r.passed
    json.dumps(r.data)
    for check in r.data["checks"]:
        assert check["escalations"] == 0
