#!/usr/bin/env python3
"""Black-box checks of the transcert binary: schema, determinism, exit codes."""

import json
import subprocess
import sys


def run(cli, *args, env=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def check_schema(cli, schema_path):
    import jsonschema

    with open(schema_path) as f:
        schema = json.load(f)
    proc = run(cli, "--json", "verify", "all")
    if proc.returncode != 0:
        return f"verify all exited {proc.returncode}: {proc.stderr}"
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema)
    if len(doc["reports"]) != 18:
        return f"expected 18 reports, got {len(doc['reports'])}"
    for rep in doc["reports"]:
        for side in ("lhs", "rhs"):
            value = rep.get(side)
            if value is None:
                continue
            for part in ("re", "im"):
                if not all(isinstance(x, str) for x in value[part]):
                    return f"{rep['id']}.{side}.{part} has a non-string endpoint"
    # A second document type with --grid and --markdown must not break.
    md = run(cli, "--markdown", "verify", "C09", "C16", "--grid", "0.5")
    if md.returncode != 0 or "| C09" not in md.stdout:
        return "markdown output missing C09 row"
    return None


def check_determinism(cli, _schema):
    a = run(cli, "--json", "--seed", "3", "verify", "all")
    b = run(cli, "--json", "--seed", "3", "verify", "all")
    if a.stdout != b.stdout:
        return "verify all differs between runs"
    c = run(cli, "curves", "falsify", "--family", "ngon", "--def", "chord", "--trials", "100", "--seed", "7")
    d = run(cli, "curves", "falsify", "--family", "ngon", "--def", "chord", "--trials", "100", "--seed", "7")
    if c.stdout != d.stdout:
        return "curves falsify differs between runs"
    found = json.loads(c.stdout)
    if not any(len(x["curve"].get("vertices", [])) == 3 for x in found["counterexamples"]):
        return "no triangle counterexample listed"
    return None


def check_exit_codes(cli, _schema):
    import os

    cases = [
        (["eval", "pi^2 < 4*e"], 0, "CertifiedTrue"),
        (["eval", "abs(exp(i)-pi)"], 0, "2.734005"),
        (["eval", "abs(exp(i)-pi) < e"], 1, "CertifiedFalse"),
        (["eval", "pi < pi", "--tolerance", "1e-5"], 2, "Undecided"),
        (["eval", "ln(-1)"], 3, None),
        (["eval", "1 + foo"], 3, None),
        (["verify", "C04"], 0, "1.8957863627"),
        (["verify", "C99"], 3, None),
        (["verify", "all"], 0, None),
        (["liouville", "witness", "--n", "3"], 0, "true"),
        (["curves", "report", "--ellipse", "2", "1", "--def", "width"], 0, "9.688448"),
        (["ybe", "--alpha", "2"], 0, None),
        (["--precision", "16", "eval", "pi"], 3, None),
        (["frobnicate"], 3, None),
    ]
    for args, code, needle in cases:
        proc = run(cli, *args)
        if proc.returncode != code:
            return f"{args}: exit {proc.returncode}, wanted {code}\n{proc.stdout}{proc.stderr}"
        if needle and needle not in proc.stdout:
            return f"{args}: output lacks {needle!r}\n{proc.stdout}"
    env = dict(os.environ, TRANSCERT_PRECISION="64")
    proc = run(cli, "--json", "eval", "pi", env=env)
    if proc.returncode != 0 or json.loads(proc.stdout).get("precision") != 64:
        return f"TRANSCERT_PRECISION ignored: {proc.stdout}"
    return None


def main():
    check, cli, schema = sys.argv[1], sys.argv[2], sys.argv[3]
    fn = {"schema": check_schema, "determinism": check_determinism, "exit_codes": check_exit_codes}[check]
    err = fn(cli, schema)
    if err:
        print("FAIL:", err)
        return 1
    print("ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
