"""
JSON files and the command line
===============================

Algebras round-trip through a canonical JSON format, and the ``hopfkit``
command runs the same pipelines from the shell.
"""

import tempfile
from pathlib import Path

from hopfkit.cli import main
from hopfkit.io import dumps, hopf_from_json, hopf_to_json, loads
from hopfkit.zoo import build

text = dumps(hopf_to_json(build("sweedler")))
print(text[:400], "...")
assert dumps(hopf_to_json(hopf_from_json(loads(text)))) == text

with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "sweedler.json"
    path.write_text(text)
    print("exit", main(["verify", str(path)]))
    print("exit", main(["report", str(path), "--json"]))
    print("exit", main(["pointed", "--group", "4", "--chi", "1", "--root", "4", "--bridge"]))
    print("exit", main(["crosscheck", "zoo://all", "--skip-large"]))
