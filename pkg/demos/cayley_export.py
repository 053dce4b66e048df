"""
Exporting Cayley graphs
=======================

Writes the action graph of two small quandles in DOT and JSON form.
Render the DOT files with graphviz, e.g. `dot -Tsvg t26.dot -o t26.svg`.
"""

import json
from pathlib import Path

from nquandles import (
    augment_n,
    builtin_family,
    enumerate_quandle,
    export_dot,
    export_json,
)

out_dir = Path("exports")
out_dir.mkdir(exist_ok=True)

# one node per element, one edge style per generator; edges where the
# action pairs two elements (or fixes one) are drawn without arrowheads
q = enumerate_quandle(augment_n(builtin_family("T26"), (2, 3))).quandle
(out_dir / "t26.dot").write_text(export_dot(q))
print(f"t26.dot: {q.size} nodes")

q = enumerate_quandle(augment_n(builtin_family("Lk", k=4), (2, 2, 3))).quandle
(out_dir / "lk4.dot").write_text(export_dot(q))
print(f"lk4.dot: {q.size} nodes")

# the JSON export carries the full tables for other tools
text = export_json(q)
(out_dir / "lk4.json").write_text(text)
payload = json.loads(text)
print(f"lk4.json: keys {sorted(payload)}")
print(f"action of generator a on element 0: {payload['action'][0][0]}")
