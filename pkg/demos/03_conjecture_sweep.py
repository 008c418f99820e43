"""Exact sweep of the K-ratio inequalities, with a checkpointed CLI run."""

import json
import subprocess
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

from easytraces.arrays import conjecture_check, k_array

K = k_array(8)

# %% a few K entries; the boundary 2k+l = n is (2k+l)!/(2^k k! l!)
for n in range(6):
    print(n, list(K.entries(n)))

# %% the smallest instance: n = 4, (k, l) = (0, 0)
print(Fraction(K(2, 0, 0), K(4, 0, 0)), ">=", Fraction(K(2, 1, 0), K(4, 1, 0)), "and", Fraction(K(2, 0, 2), K(4, 0, 2)))

# %% full sweeps
for N in (20, 60):
    t = time.perf_counter()
    rep = conjecture_check(N)
    print(N, rep.holds, f"{time.perf_counter() - t:.2f}s")

# %% the same from the command line, resuming from a checkpoint
with tempfile.TemporaryDirectory() as tmp:
    ck = Path(tmp) / "ck.json"
    for N in (40, 80):
        out = subprocess.run([sys.executable, "-m", "easytraces", "verify", "conjecture", str(N), "--resume", str(ck)],
                             capture_output=True, text=True)
        doc = json.loads(out.stdout)
        print("exit", out.returncode, doc["report"]["range"], "checkpoint", json.loads(ck.read_text()))
