"""Validate CLI JSON output against schema/output.schema.json."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["density", "--n", "2", "--params", "theta=0.3,alpha=1,beta=0.2"],
    ["density", "--n", "2", "--params", "theta=0,alpha=0,beta=0", "--mode", "normalized"],
    ["density", "--n", "3", "--params",
     "theta1=0.3,theta2=0.5,alpha=1,beta=0.4,gamma=2,theta_big=0.7,a=0.1,b=1.2"],
    ["sample", "--n", "2", "--count", "5", "--seed", "11"],
    ["sample", "--n", "3", "--count", "3", "--seed", "11"],
    ["sample", "--n", "2", "--count", "0", "--seed", "11"],
    ["integrate", "--n", "2", "--functional", "entropy", "--points", "16"],
    ["integrate", "--n", "2", "--functional", "purity", "--method", "mc", "--samples", "200"],
    ["integrate", "--n", "3", "--functional", "moment:3", "--points", "4"],
    ["volume", "--n", "2", "--points", "16"],
    ["check", "--suite", "fast"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as handle:
        schema = json.load(handle)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args in COMMANDS:
        run = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if run.returncode != 0:
            print(f"FAIL {label}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        record = json.loads(run.stdout)
        errors = sorted(validator.iter_errors(record), key=str)
        if record.get("command") in ("density", "sample"):
            n = record["n"]
            matrices = ([record["payload"]["matrix"]] if record["command"] == "density"
                        else [s["matrix"] for s in record["payload"]["samples"]])
            if any(len(m) != n * n for m in matrices):
                errors.append("matrix length does not match n")
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0]}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
