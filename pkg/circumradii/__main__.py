"""Module entry point."""

import sys

from circumradii.cli import main

if __name__ == "__main__":
    sys.exit(main())
