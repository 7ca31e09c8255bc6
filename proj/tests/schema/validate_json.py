"""Runs the CLI over a fixed set of invocations and validates every JSON document."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

INVOCATIONS = [
    ["normalize", "u[2,2]*u[1,1]", "--n", "2", "--json"],
    ["normalize", "u[1,1]*u[2,2]*u[3,3]", "--n", "3", "--algebra", "sln", "--json"],
    ["normalize", "u[1,1]*u[2,2]", "--n", "2", "--ring", "cyclotomic:5", "--algebra", "sln", "--json"],
    ["normalize", "x[1,1]*x[2,2] - 2*x[1,2]", "--n", "2", "--json"],
    ["check", "hopf", "--n", "2", "--json"],
    ["constants", "--n", "5", "--json"],
    ["permsum", "--n", "2", "--max-k", "4", "--json"],
    ["frobenius", "--n", "2", "--m", "3", "--json"],
    ["classical", "--n", "3", "--trials", "10", "--json"],
    ["detexp", "--n", "2", "--trials", "10", "--json"],
    ["cap", "--n", "3", "--trials", "10", "--json"],
    ["basis", "--n", "2", "--degree", "3", "--json"],
    ["count", "--n", "3", "--m", "4", "--json"],
    ["report", "--n", "2", "--m", "5", "--trials", "10", "--json"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in INVOCATIONS:
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {label}: {'/'.join(map(str, err.absolute_path))}: {err.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
