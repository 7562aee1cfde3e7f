#!/usr/bin/env python3
"""Format, lint and optionally test the codebase."""

import argparse
import subprocess
import sys

PYTHON_PATHS = ["lightcone", "tests", "main.py", "format.py"]


def run_command(cmd: list[str], description: str) -> bool:
    """Run a command and return True if successful."""
    print(f"\n{'=' * 60}")
    print(f"Running: {description}")
    print(f"Command: {' '.join(cmd)}")
    print("=" * 60)

    try:
        result = subprocess.run(cmd, capture_output=True, text=True)
    except FileNotFoundError:
        print(f"[ERROR] Command not found: {cmd[0]}")
        print("   Make sure you've run: poetry install")
        return False

    if result.stdout:
        print(result.stdout)
    if result.stderr:
        print(result.stderr, file=sys.stderr)
    if result.returncode != 0:
        print(f"[FAILED] {description} failed with exit code {result.returncode}")
        return False
    print(f"[OK] {description} completed successfully")
    return True


def tool_steps(check: bool, tests: bool) -> list[tuple[list[str], str]]:
    """Commands to run in order; ``check`` leaves files untouched."""
    isort = ["poetry", "run", "isort"] + (["--check-only", "--diff"] if check else [])
    black = ["poetry", "run", "black"] + (["--check"] if check else [])
    steps = [
        (isort + PYTHON_PATHS, "isort (import sorting)"),
        (black + PYTHON_PATHS, "black (code formatting)"),
        (["poetry", "run", "flake8"] + PYTHON_PATHS, "flake8 (linting)"),
        (["poetry", "run", "mypy", "lightcone", "main.py"], "mypy (type checking)"),
    ]
    if tests:
        steps.append(
            (["poetry", "run", "pytest", "-m", "not slow"], "pytest (fast suite)")
        )
    return steps


def main() -> int:
    """Run all formatting and linting tools."""
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--check", action="store_true", help="report formatting issues only"
    )
    parser.add_argument(
        "--tests", action="store_true", help="run the fast test suite afterwards"
    )
    options = parser.parse_args()

    # Every step runs even after a failure so the report is complete
    failed = [
        description
        for cmd, description in tool_steps(options.check, options.tests)
        if not run_command(cmd, description)
    ]

    print(f"\n{'=' * 60}")
    if not failed:
        print("[SUCCESS] All formatting and linting checks passed!")
    else:
        print(f"[FAILED] {', '.join(failed)}. Please review the output above.")
    print("=" * 60)

    return 0 if not failed else 1


if __name__ == "__main__":
    sys.exit(main())
