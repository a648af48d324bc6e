"""Reproduce the committed layer sweep under reports/sweep.

Everything goes through the command line tool, so this script doubles as a
worked example of the full workflow:

    gen-data -> pretrain-lm -> sweep --analyze

The grid is the full one (4 variants, layers 0..3, seeds 0..4, 50 training
runs). To keep it to about an hour on a single core the images are 32x32 and
each run trains for 30 epochs; pass --size 64 --epochs 60 for the default
scale if you have the time.
"""

import argparse
import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def l4s(*args):
    cmd = [sys.executable, "-m", "l4s", *map(str, args)]
    print("$", " ".join(cmd[2:]), flush=True)
    subprocess.run(cmd, check=True, env=dict(os.environ, L4S_THREADS=os.environ.get("L4S_THREADS", "1")))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=ROOT / "reports")
    ap.add_argument("--size", type=int, default=32)
    ap.add_argument("--epochs", type=int, default=30)
    args = ap.parse_args()

    data, lm_dir, sweep = args.out / "data", args.out / "lm", args.out / "sweep"
    l4s("gen-data", "--out", data, "--size", args.size, "--force")
    # default language model: 4 layers, d_model 64, 3000 steps on the arithmetic corpus
    if not (lm_dir / "lm.l4sw").is_file():
        l4s("pretrain-lm", "--out", lm_dir)
    l4s("sweep", "--data", data, "--weights", lm_dir / "lm.l4sw", "--epochs", args.epochs,
        "--analyze", "--out", sweep, "--force")
    print((sweep / "report.md").read_text())


if __name__ == "__main__":
    main()
