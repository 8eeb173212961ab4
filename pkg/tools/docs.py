"""
Builds the documentation locally.

Pass "clean" as a command-line argument to rebuild from scratch, which
Sphinx needs after changes to style sheets or the API pages it caches.
"""

from subprocess import run
from pathlib import Path
from sys import argv as arguments
from shutil import rmtree


root = Path(__file__).resolve().parent.parent
target = root/'build'/'docs'

if arguments[1:2] == ['clean'] and target.exists():
    rmtree(target)

run(['sphinx-build', 'docs', str(target)], cwd=root, check=True)
