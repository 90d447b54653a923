"""Shared fixtures: the N=1 workhorse pencil and a CLI harness."""

import json

import pytest

from gpspectra import ExponentialKernel, ModePencil
from gpspectra.cli import main

# Roots of the cleared cubic z**3 + 2z**2 + 100z + 190 (the workhorse
# pencil below), frozen from a 40-digit Newton polish of the exact
# coefficients.  Double-check: 190/|mu_1|/|pair|**2 = 1 to 16 digits.
MU_1 = -1.9034966068012287
PAIR = -0.04825169659938571 + 9.990694565057858j


@pytest.fixture()
def cubic() -> ModePencil:
    """c=(1), g=(2), a=10, xi=0.5 -> cleared polynomial z^3+2z^2+100z+190."""
    return ModePencil(
        frequency=10.0, xi=0.5, kernel=ExponentialKernel((1.0,), (2.0,))
    )


@pytest.fixture()
def run_cli(tmp_path, capsys):
    """Run the CLI with a config dict; returns (exit_code, stdout, stderr)."""

    counter = {"n": 0}

    def run(job: str, config: dict, *extra: str):
        counter["n"] += 1
        path = tmp_path / f"config_{counter['n']}.json"
        path.write_text(json.dumps(config), encoding="utf-8")
        code = main([job, "--config", str(path), *extra])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


CUBIC_CONFIG = {
    "kernel": {"coeffs": [1.0], "rates": [2.0]},
    "xi": 0.5,
    "modes": [10.0],
}


@pytest.fixture()
def cubic_config() -> dict:
    return dict(CUBIC_CONFIG, kernel=dict(CUBIC_CONFIG["kernel"]))
