"""Main entry point for the lightcone command."""

import sys

from lightcone.cli import run


def main() -> None:
    """Main function."""
    sys.exit(run())


if __name__ == "__main__":
    main()
