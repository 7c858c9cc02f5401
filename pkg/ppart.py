#!/usr/bin/env python3
"""
ppart launcher
==============

Loads environment variables from .env (PPART_CONFIG among them) and runs the
ppart command-line interface.
"""

import sys

from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

from tools.ppart_cli import main

if __name__ == "__main__":
    sys.exit(main())
