"""Every command's JSON report validates against the published schema."""
import json
import sys
from pathlib import Path

import jsonschema

from common import expect, finish, load, run, scratch

vvilab, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)
tmp = scratch()
witness_file = tmp / "witness.json"
holds_file = tmp / "holds.json"

runs = [
    ["catalog"],
    ["check", "--property", "geodesic-convex", "--instance", "example-3.3"],
    ["check", "--property", "geodesic-quasiconvex", "--instance", "bimodal-qc",
     "--out", str(witness_file)],
    ["check", "--property", "upper-dini-bound", "--instance",
     "broken-upper-dini"],
    ["check", "--property", "w-set-convex", "--instance", "linear-ez",
     "--point", "0.5"],
    ["solve", "--instance", "biobjective-quadratic", "--problem", "nvop-weak"],
    ["solve", "--instance", "paper-monotone", "--problem", "mnvvip"],
    ["verify", "--theorem", "minty-equivalence", "--instance", "linear-ez"],
    ["verify", "--theorem", "h-quasiconvexity", "--instance",
     "broken-upper-dini"],
    ["verify", "--theorem", "weak-nvvip", "--instance", "log-square"],
    ["replay", str(witness_file)],
    ["check", "--property", "monotone", "--instance", "paper-monotone",
     "--out", str(holds_file)],
    ["replay", str(holds_file)],
]
for args in runs:
    code, out, err = run(vvilab, *args, "--format", "json")
    if "--out" in args:
        out = Path(args[args.index("--out") + 1]).read_text()
    try:
        report = load(out)
        errors = sorted(validator.iter_errors(report), key=str)
    except json.JSONDecodeError as exc:
        errors = [exc]
    label = " ".join(args[:3])
    expect(code in (0, 2) and not errors,
           f"{label} validates" + (f": {errors[0]}" if errors else err))

finish()
