#!/usr/bin/env python3
"""
einflag - certified invariant Einstein metrics on Sp(n)/(U(p) x U(n-p))

Run this script from a checkout:
    python run.py solve --n 3 --p 1
    python run.py sweep --n-max 10 --format csv --out results.csv
    python run.py lemmas --n 10 --p 7

Or run as module:
    python -m src solve --n 4 --p 2 --format json
"""

import subprocess
import sys

if __name__ == "__main__":
    sys.exit(subprocess.call([sys.executable, "-m", "src"] + sys.argv[1:]))
