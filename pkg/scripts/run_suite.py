#!/usr/bin/env python3
"""Run every acceptance check and print one verdict line per criterion."""

import sys

from spectral_pairs.suite import run_suite

if __name__ == "__main__":
    sys.exit(0 if run_suite(out=sys.stdout) else 1)
