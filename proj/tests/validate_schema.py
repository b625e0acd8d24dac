import json
import subprocess
import sys

import jsonschema

qalg, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["analyze-structure", "--k", "1", "--json"],
    ["analyze-structure", "--k", "2", "--mode", "structured", "--json"],
    ["analyze-structure", "--k", "1", "--group", "q16", "--json"],
]
for args in runs:
    out = subprocess.run([qalg, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
    print("ok", " ".join(args))
