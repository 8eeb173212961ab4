"""Deletes build and test artifacts."""

from pathlib import Path
from shutil import rmtree

root = Path(__file__).resolve().parent.parent

# Build output and caches.
folders = [root/'build', root/'dist']
for name in ('__pycache__', '.pytest_cache'):
    folders += root.rglob(name)
for folder in folders:
    if folder.is_dir():
        rmtree(folder, ignore_errors=True)

# Coverage reports, and files the test suite writes if interrupted.
files = [root/'.coverage', root/'coverage.xml', root/'tests'/'StAnn.ini']
files += (root/'tests').glob('*.json')
files += (root/'tests').glob('*.dot')
for file in files:
    if file.is_file():
        file.unlink()
