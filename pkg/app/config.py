"""
Configuration
Defaults for every tunable. Values are overridden only by CLI flags;
no environment variables are read.
"""

import argparse
from dataclasses import dataclass


DEFAULT_SEED = 42
DEFAULT_GUARD = 10 ** 7
DEFAULT_THREADS = 1
DEFAULT_MAX_WITNESSES = 3

# Tuples per task when the certification scan runs on a process pool
SCAN_CHUNK_SIZE = 64

# Random polynomial generation (random_check and fixtures)
RANDOM_COEFF_RANGE = (-9, 9)
DEFAULT_TRIALS = 50

# Cost guards for the oracles
LAPLACE_SIZE_GUARD = 8
BRUTE_FORCE_ARITY_GUARD = 8

# Parser nesting limit
MAX_PAREN_DEPTH = 200
MAX_EXPONENT = 10_000


@dataclass(frozen=True)
class VerifierSettings:
    """Run-wide settings assembled once from the command line."""

    seed: int = DEFAULT_SEED
    guard: int = DEFAULT_GUARD
    threads: int = DEFAULT_THREADS
    json_output: bool = False
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "VerifierSettings":
        return cls(
            seed=getattr(args, "seed", DEFAULT_SEED),
            guard=getattr(args, "guard", DEFAULT_GUARD),
            threads=max(1, getattr(args, "threads", DEFAULT_THREADS)),
            json_output=getattr(args, "json", False),
            verbose=getattr(args, "verbose", False),
        )
