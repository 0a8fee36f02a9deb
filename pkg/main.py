"""
thetamoments - moments of Dirichlet L-functions and theta functions
Command-line entry point.

    python main.py theta-moment --q 101 --k 2 --parity even
"""

import sys
from pathlib import Path

# Ensure project root is on sys.path so 'src' is importable
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import main


if __name__ == "__main__":
    main()
