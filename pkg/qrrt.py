#!/usr/bin/env python3
"""
Launch script for the qrrt command line.

Usage:
    python qrrt.py verify rr1 --order 100
    python qrrt.py catalog --all --jobs 4
"""

import sys
from pathlib import Path

# Add the repository root to the path so that `src` imports resolve
root = Path(__file__).resolve().parent
if str(root) not in sys.path:
    sys.path.insert(0, str(root))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
