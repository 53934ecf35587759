"""CLI output checks: JSON schema, round-trip digits, CSV layout, determinism."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)


def run(*args):
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode != 0:
        sys.exit(f"{' '.join(args)} exited {out.returncode}: {out.stderr}")
    return out.stdout


cases = [
    ["info", "--prime", "13"],
    ["fiber", "--prime", "23"],
    ["fiber", "--prime", "13", "--minimal"],
    ["verify", "--prime", "13", "--suite", "fiber"],
    ["verify", "--prime", "3", "--suite", "all"],
    ["omega", "--prime", "101", "--mode", "constants"],
    ["scan", "--pmin", "11", "--pmax", "199"],
]
for args in cases:
    text = run(*args, "--format", "json")
    doc = json.loads(text)
    jsonschema.validate(doc, schema)
    assert doc["command"] == args[0], args
    assert text == run(*args, "--format", "json"), f"{args} is not deterministic"

# floats survive a text round trip
scan = json.loads(run("scan", "--pmin", "11", "--pmax", "199", "--format", "json"))
for row in scan["results"]["rows"]:
    for key in ("algebraic", "analytic", "total", "target", "ratio"):
        assert float(repr(row[key])) == row[key]

csv_text = run("scan", "--pmin", "11", "--pmax", "199", "--format", "csv")
lines = csv_text.splitlines()
assert lines[0] == "p,g,algebraic,analytic,total,target,ratio", lines[0]
rows = list(csv.DictReader(io.StringIO(csv_text)))
assert len(rows) == len(scan["results"]["rows"])
for r, j in zip(rows, scan["results"]["rows"]):
    assert int(r["p"]) == j["p"]
    assert float(r["ratio"]) == j["ratio"], (r["ratio"], j["ratio"])

fiber = json.loads(run("fiber", "--prime", "13", "--minimal", "--format", "json"))
minimal = fiber["results"]["minimal"]
assert minimal["intersections"] == [["-7/1", "7/1"], ["7/1", "-7/1"]]
assert minimal["contracted"] == ["C11", "E'", "F''"]
assert fiber["results"]["fiber"]["adjunction_sum"] == "14/1"

with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "scan.csv")
    run("scan", "--pmin", "11", "--pmax", "199", "--format", "csv", "--out", path)
    with open(path) as f:
        assert f.read() == csv_text

print("cli output checks passed")
