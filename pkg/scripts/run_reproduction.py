#!/usr/bin/env python3
"""Run the full golden matrix and exit nonzero on any failure."""

import sys

from a2poly.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-paper", *sys.argv[1:]]))
