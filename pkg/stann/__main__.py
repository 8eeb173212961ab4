"""Runs the command-line interface when invoked as `python -m stann`."""

from .cli import main

main()
