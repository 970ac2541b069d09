"""
Driving the command line from Python
====================================

The same subcommands are available as ``tighteuler ...`` once installed;
``run`` returns the exit code and the text that would be printed.
"""

import json
import tempfile
from pathlib import Path

from tighteuler.cli import run

cycle = run(["gen", "cycle", "-n", "7", "-k", "3"]).payload
print(cycle)

res = run(["count-tours", "--json"], stdin=cycle)
print("count-tours:", json.loads(res.payload))

res = run(["exists-tour"], stdin="3 3 1\n0 1 2\n")
print("single edge has a tour?", res.payload.strip(), "exit", res.exit_code)

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    (tmp / "f.cnf").write_text("p cnf 3 1\n1 -2 3 0\n")
    run(["reduce", "--cnf", str(tmp / "f.cnf"), "--out", str(tmp / "h.hg"),
         "--map", str(tmp / "map.json")])
    run(["certify", "--cnf", str(tmp / "f.cnf"), "--map", str(tmp / "map.json"),
         "--assignment", "1 1 0", "--out", str(tmp / "tour.txt")])
    print("verify:", run(["verify", str(tmp / "h.hg"), str(tmp / "tour.txt")]).payload.strip())
    print("decode:", run(["decode", "--cnf", str(tmp / "f.cnf"), "--map", str(tmp / "map.json"),
                          "--tour", str(tmp / "tour.txt")]).payload.strip())
