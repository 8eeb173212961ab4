"""Fixtures used by the test suite."""

import stann
import logging
import io
import re
import sys
from functools import lru_cache


class logging_disabled:
    """Suppresses log messages issued in this context."""

    def __enter__(self):
        self.level = logging.getLogger().level
        logging.getLogger().setLevel(100)
        return self

    def __exit__(self, type, value, traceback):
        logging.getLogger().setLevel(self.level)


class capture_stdout:
    """Captures text written to `sys.stdout` in this context."""

    def __enter__(self):
        self.stdout = sys.stdout
        self.buffer = io.StringIO()
        sys.stdout  = self.buffer
        return self

    def __exit__(self, type, value, traceback):
        sys.stdout = self.stdout

    def text(self):
        return self.buffer.getvalue()


class capture_stderr:
    """Captures text written to `sys.stderr` in this context."""

    def __enter__(self):
        self.stderr = sys.stderr
        self.buffer = io.StringIO()
        sys.stderr  = self.buffer
        return self

    def __exit__(self, type, value, traceback):
        sys.stderr = self.stderr

    def text(self):
        return self.buffer.getvalue()


@lru_cache(maxsize=None)
def catalog(name):
    """Returns the points of a built-in catalog, computed once per session."""
    return tuple(stann.load_catalog(name))


@lru_cache(maxsize=None)
def space(name):
    """Returns the finite space of a built-in catalog."""
    return stann.build_space(catalog(name))


def annihilators(name):
    """Maps point labels of a catalog to their annihilators as strings."""
    return {point.label: str(point.annihilator) for point in catalog(name)}


def labeled(space, families):
    """Turns a closed-set family into a set of frozen sets of labels."""
    return {frozenset(space.names(s)) for s in families}


identifier = r'(?:"(?:[^"\\]|\\.)*"|[A-Za-z0-9_.]+)'
dot_header = re.compile(rf'(?:strict )?digraph {identifier} \{{')
dot_lines  = [
    re.compile(rf'{identifier}={identifier}'),
    re.compile(rf'{identifier} \[label={identifier}\]'),
    re.compile(rf'{identifier} -> {identifier}'),
]


def valid_dot(source):
    """Checks DOT source against the subset of the grammar we write."""
    lines = source.strip().splitlines()
    if len(lines) < 2 or not dot_header.fullmatch(lines[0]) or lines[-1] != '}':
        return False
    return all(any(pattern.fullmatch(line.strip()) for pattern in dot_lines)
               for line in lines[1:-1])


original_records = logging.getLogRecordFactory()


def timed_records(*args, **kwargs):
    """Adds a (relative) `timestamp` to the log record attributes."""
    record = original_records(*args, **kwargs)
    (minutes, seconds) = divmod(record.relativeCreated/1000, 60)
    record.timestamp = f'{minutes:02.0f}:{seconds:06.3f}'
    return record


def setup_logging():
    """Sets up logging to console if `--log` command-line argument present."""
    if '--log' not in sys.argv[1:]:
        return
    logging.setLogRecordFactory(timed_records)
    logging.basicConfig(
        level  = logging.DEBUG,
        format = '[%(timestamp)s] %(message)s',
    )
