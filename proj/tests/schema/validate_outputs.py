"""Runs each JSON-emitting subcommand and validates its output against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("verdict", ["decide", "--from", "B[p=1,q=1,s=1/2]", "--to", "M[p=2,q=2]", "--json"]),
    ("verdict", ["decide", "--from", "M[p=2,q=2]", "--to", "FL[r=2]", "--json"]),
    ("experiment", ["sharpness", "--from", "B[p=1,q=1,s=0]", "--to", "M[p=1,q=1]", "--family", "annulus"]),
    ("experiment", ["boundedness", "--from", "B[p=2,q=2,s=0]", "--to", "M[p=2,q=2]", "--family", "single-box"]),
    ("tail", ["tail", "--q", "1"]),
    ("necessity", ["necessity", "--r", "2", "--q", "4", "--s", "1/4"]),
    ("necessity", ["necessity", "--r", "2", "--q", "4", "--s", "3/8", "--cubes", "16,65536"]),
    ("selftest", ["selftest"]),
    ("norm", ["norm", "--family", "annulus", "--l", "5", "--space", "M[p=2,q=1,s=0]", "--json"]),
]


def main() -> int:
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for kind, args in CASES:
        schema = json.loads((schema_dir / f"{kind}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([tool, *args], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 1, 2) or not proc.stdout:
            print(f"FAIL {kind} {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
            print(f"ok   {kind} {args[0]}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {kind} {' '.join(args)}: {err}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
