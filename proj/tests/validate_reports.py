"""Runs every CLI subcommand and validates its JSON report against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = {
    "lcan": ["--sig", "2,2", "--kappa", "2,1,2,1"],
    "phi": ["--sig", "2,2", "--kappa", "2,1,2,1", "--grid-bound", "4"],
    "theta-apply": ["--sig", "2,2", "--kappa", "1,1,1,1", "--alpha", "1,0,1,2"],
    "congruence": ["--sig", "1,1", "--kappa", "2,2", "--kappa-prime", "22,22"],
    "restrict": ["--sig", "2,2", "--part", "1,1/1,1", "--lambda", "2,0,2,0"],
    "weyl-extend": ["--sig", "3,3", "--part", "1,1/2,2", "--lambda", "0,2,1,0,2,1", "--p", "7"],
    "family": ["--n", "1", "--k", "4", "--bound", "4", "--kappa", "1,1"],
    "certify": ["--n", "1", "--bound", "4", "--term", "k=4;b=1", "--term", "k=24;b=-1"],
}


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for command, args in RUNS.items():
        proc = subprocess.run([cli, command, *args], capture_output=True, text=True, check=False)
        schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
        try:
            if proc.returncode not in (0, 2):
                raise ValueError(f"exit code {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"{command}: valid")
        except (ValueError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"{command}: INVALID {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
