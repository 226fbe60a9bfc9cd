"""
Wronskian Jacobi Verifier - Main Entry Point

Exact generalized Wronskians, the insertion action of one Wronskian on
another, and certification that the resulting Jacobiators vanish.

Usage:
    python main.py enumerate --d 2 --k 2
    python main.py verify --d 2 --outer "1,x,y" --inner "1,x,y"
    python main.py paper-suite
"""

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app.main import main


if __name__ == "__main__":
    sys.exit(main())
