"""
Manages configuration options.

Options live in a module-level dictionary for the current session. They
can be stored in, and restored from, an `.ini` file named `StAnn.ini`
with a single section `[config]`. At import time, the first such file
found in the working directory, the per-user configuration folder, or the
package folder is applied.
"""

########################################
# Dependencies                         #
########################################
import configparser                    # INI files
import os                              # environment variables
import platform                        # operating system
from pathlib import Path               # file-system path
from logging import getLogger          # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)           # event log

options = {
    'bound':       20,
    'order':       'degrevlex',
    'workers':     1,
    'witnesses':   False,
    'power_limit': 8,
}
"""Default values for configuration options."""

orders = ('degrevlex', 'lex')
"""Monomial orders that may be configured as default."""

positive = ('bound', 'workers', 'power_limit')
"""Options that only take positive integers."""

filename = 'StAnn.ini'
section  = 'config'


########################################
# Access                               #
########################################

def validate(name, value):
    """Raises an error unless `value` is admissible for option `name`."""
    default = options[name]
    if type(value) is not type(default):
        error = (f'Option "{name}" expects a value of type '
                 f'{type(default).__name__}, not {type(value).__name__}.')
        log.error(error)
        raise TypeError(error)
    if name == 'order' and value not in orders:
        error = f'Monomial order "{value}" is not one of {", ".join(orders)}.'
        log.error(error)
        raise ValueError(error)
    if name in positive and value < 1:
        error = f'Option "{name}" must be a positive integer, not {value}.'
        log.error(error)
        raise ValueError(error)


def option(name=None, value=None):
    """
    Sets or returns the value of a configuration option.

    If called without arguments, returns all configuration options as
    a dictionary. Returns an option's value if only called with the
    option's `name`. Otherwise sets the option to the given `value`,
    which must have the same type as the default.

    | option        | meaning                                               |
    |---------------|-------------------------------------------------------|
    | `bound`       | largest space for which closed sets are enumerated    |
    | `order`       | default monomial order, `degrevlex` or `lex`           |
    | `workers`     | processes used to compute annihilators of a catalog    |
    | `witnesses`   | whether reports include homotopy witnesses             |
    | `power_limit` | largest exponent tried in cl_n compactness searches    |
    """
    if name is None:
        return options
    if name not in options:
        error = f'Configuration option "{name}" does not exist.'
        log.error(error)
        raise LookupError(error)
    if value is None:
        return options[name]
    validate(name, value)
    options[name] = value


########################################
# Storage                              #
########################################

def location():
    """
    Returns the per-user folder for the configuration file.

    That is `%APPDATA%/StAnn` on Windows, `~/Library/Application Support/StAnn`
    on macOS, and `$XDG_CONFIG_HOME/StAnn` elsewhere, which defaults to
    `~/.config/StAnn`.
    """
    system = platform.system()
    if system == 'Windows':
        base = Path(os.environ['APPDATA'])
    elif system == 'Darwin':
        base = Path.home()/'Library'/'Application Support'
    else:
        base = Path(os.environ.get('XDG_CONFIG_HOME') or Path.home()/'.config')
    return base/'StAnn'


def search():
    """Returns the first configuration file found, or `None`."""
    for folder in (Path.cwd(), location(), Path(__file__).parent):
        if (folder/filename).is_file():
            return folder/filename
    return None


def load(file=None):
    """
    Loads the configuration from the given `.ini` file.

    Without a `file`, the first `StAnn.ini` found in the working
    directory, the folder returned by [`location()`](#location), or the
    package folder is used, if any. Entries are converted to the type of
    the option's default. Invalid entries are skipped with a warning.
    """
    file = Path(file) if file else search()
    if file is None:
        log.debug('No configuration file found, using defaults.')
        return
    log.debug(f'Loading configuration from "{file}".')
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    parser.read(file, encoding='utf-8')
    if not parser.has_section(section):
        log.warning(f'No section [{section}] in "{file}".')
        return
    readers = {bool: parser.getboolean, int: parser.getint, str: parser.get}
    for name in parser[section]:
        if name not in options:
            log.warning(f'Ignoring unknown option "{name}" in "{file}".')
            continue
        try:
            value = readers[type(options[name])](section, name)
            validate(name, value)
        except (ValueError, TypeError):
            log.warning(f'Ignoring invalid value of "{name}" in "{file}".')
            continue
        options[name] = value


def save(file=None):
    """
    Saves the configuration in the given `.ini` file.

    Without a `file`, writes `StAnn.ini` in the folder returned by
    [`location()`](#location), creating the folder if needed.
    """
    file = Path(file) if file else location()/filename
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    parser[section] = {name: str(value) for (name, value) in options.items()}
    file.parent.mkdir(exist_ok=True, parents=True)
    with file.open('w', encoding='utf-8') as stream:
        parser.write(stream)
    log.debug(f'Saved configuration to "{file}".')


# Apply a stored configuration at start-up.
load()
