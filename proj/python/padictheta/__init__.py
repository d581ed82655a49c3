"""Python access to the padictheta core.

``run`` and ``report`` drive the same subcommands as the command-line tool.
The remaining functions call the library directly and take signatures and
weights in the command-line text syntax, e.g. ``sig="2,2"``, ``kappa="2,1,2,1"``.
"""

import json

from ._core import PadicThetaError, is_symmetric, lcan_json, phi, phi_minor, run, weight_congruent

__all__ = [
    "PadicThetaError",
    "is_symmetric",
    "lcan",
    "phi",
    "phi_minor",
    "report",
    "run",
    "weight_congruent",
]


def lcan(sig: str, kappa: str) -> dict:
    return json.loads(lcan_json(sig, kappa))


def report(command: str, *args: str) -> tuple[int, dict]:
    """Runs a subcommand with JSON output and returns (exit_code, parsed report)."""
    code, out, err = run([command, *args])
    if code == 1:
        raise PadicThetaError(err.strip())
    return code, json.loads(out)
