"""
Command-line entry for finsler_scurv.

    python main.py validate so3
    python main.py scurv solvable2 --y 0.6,0.8
    python main.py scan configs/spaces/solvable2_randers.json --samples 1000 --out scan.csv
    python main.py sigma randers-b05-n3 --mc 1000000
    python main.py geodesic heisenberg3-riemannian --y0 1,0,0.2 --t 10 --dt 0.001
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
