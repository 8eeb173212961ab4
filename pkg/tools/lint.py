"""Lints the package, tests, demos, and tools for style errors."""

from subprocess import run
from pathlib import Path

root = Path(__file__).resolve().parent.parent
run(['flake8', 'stann', 'tests', 'demos', 'tools'], cwd=root, check=True)
