"""
Exact polynomial arithmetic over the rationals.

Polynomials are SymPy's sparse `PolyElement` objects over the domain `QQ`,
rings are SymPy `PolyRing` instances. This module adds what the rest of
the package needs on top of that: rings with the monomial orders used
here, a strict parser for the polynomial grammar of input documents, the
matching canonical printer, and arithmetic that refuses to mix rings.

The grammar accepted by [`parse_polynomial()`](#parse_polynomial) is
```
expr   := ['-'] term (('+' | '-') term)*
term   := factor ('*' factor)*
factor := integer ['/' integer] | variable ['^' integer]
```
where variables match `[a-zA-Z][a-zA-Z0-9_]*` and white space is
insignificant. The rational form `integer '/' integer` exists so that
every printed polynomial parses back to itself.
"""

########################################
# Components                           #
########################################
from .config import option                       # configuration

########################################
# Dependencies                         #
########################################
from sympy.polys.rings import PolyRing           # polynomial ring
from sympy.polys.rings import PolyElement        # polynomial
from sympy.polys.domains import QQ               # rational numbers
from sympy.polys.orderings import grevlex, lex   # monomial orders
from sympy.polys.orderings import build_product_order
from re import compile as regex                  # regular expression
from logging import getLogger                    # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                     # event log

########################################
# Constants                            #
########################################

orders = {
    'degrevlex': grevlex,
    'lex':       lex,
}
"""Monomial orders by name."""

name_pattern    = regex(r'[a-zA-Z][a-zA-Z0-9_]*')
integer_pattern = regex(r'[0-9]+')
space_pattern   = regex(r'\s*')


########################################
# Errors                               #
########################################

class ParseError(ValueError):
    """
    Raised when a polynomial expression does not parse.

    `offset` is the byte offset into the (UTF-8 encoded) source text at
    which parsing failed. `name` is the offending identifier if the
    error is about an unknown variable, otherwise `None`.
    """

    def __init__(self, message, offset, name=None):
        super().__init__(message)
        self.offset = offset
        self.name = name


########################################
# Rings                                #
########################################

def polynomial_ring(variables, order=None):
    """
    Returns the polynomial ring over ℚ in the given `variables`.

    `variables` is a sequence of names, or a single string of names
    separated by commas. The monomial `order` is either `'degrevlex'` or
    `'lex'`. If not given, the configured default order is used (see
    [`option()`](#option)). Variables take precedence in the order in
    which they are declared.

    Example usage:
    ```python
    from stann import polynomial_ring, parse_polynomial
    R = polynomial_ring('x, y')
    f = parse_polynomial('x^2*y + y^4', R)
    ```
    """
    if isinstance(variables, str):
        variables = [name.strip() for name in variables.split(',')]
    variables = tuple(variables)
    if not variables:
        error = 'A polynomial ring needs at least one variable.'
        log.error(error)
        raise ValueError(error)
    for name in variables:
        if not isinstance(name, str) or not name_pattern.fullmatch(name):
            error = f'Invalid variable name "{name}".'
            log.error(error)
            raise ValueError(error)
    if len(set(variables)) != len(variables):
        error = f'Variable names are not unique: {", ".join(variables)}.'
        log.error(error)
        raise ValueError(error)
    if order is None:
        order = option('order')
    if order not in orders:
        error = f'Unknown monomial order "{order}".'
        log.error(error)
        raise ValueError(error)
    return PolyRing(variables, QQ, orders[order])


def variables(ring):
    """Returns the names of the ring's variables."""
    return tuple(str(symbol) for symbol in ring.symbols)


def order_name(ring):
    """Returns the name of the ring's monomial order."""
    for (name, order) in orders.items():
        if ring.order == order:
            return name
    return 'block'


def extend_ring(ring, name):
    """
    Returns the ring with one more variable `name` appended.

    The new variable is the least significant one. Raises `ValueError`
    if the name is already taken.
    """
    if name in variables(ring):
        error = f'Variable "{name}" already exists in the ring.'
        log.error(error)
        raise ValueError(error)
    return polynomial_ring(variables(ring) + (name,), order_name(ring))


def elimination_ring(ring, drop):
    """
    Returns a ring with the `drop` variables first, in a block order.

    Each block is ordered by degrevlex. Any monomial containing a dropped
    variable is larger than every monomial free of them, which is what
    elimination needs.
    """
    names   = variables(ring)
    dropped = set(drop)
    drop = [name for name in names if name in dropped]
    keep = [name for name in names if name not in dropped]
    symbols = drop + keep
    reordered = PolyRing(symbols, QQ, grevlex)
    if not drop or not keep:
        return reordered
    gens = reordered.symbols
    order = build_product_order(
        (('grevlex', *gens[:len(drop)]), ('grevlex', *gens[len(drop):])),
        gens)
    return PolyRing(symbols, QQ, order)


def convert(p, ring):
    """
    Maps polynomial `p` into another `ring` by matching variable names.

    Variables of `p` must exist in the target ring, unless their
    exponents are zero throughout.
    """
    if p.ring == ring:
        return p
    try:
        return p.set_ring(ring)
    except Exception as exception:
        error = (f'Polynomial {format_polynomial(p)} cannot be mapped '
                 f'to ring in {", ".join(variables(ring))}.')
        log.error(error)
        raise ValueError(error) from exception


def constant(value, ring):
    """Returns the constant polynomial `value` (integer or rational)."""
    return ring.ground_new(QQ.convert(value))


########################################
# Parsing                              #
########################################

class Parser:
    """Recursive-descent parser for one polynomial expression."""

    def __init__(self, source, ring):
        self.source = source
        self.ring   = ring
        self.names  = dict(zip(variables(ring), ring.gens))
        self.pos    = 0

    def fail(self, message, position=None, name=None):
        if position is None:
            position = self.pos
        offset = len(self.source[:position].encode('utf-8'))
        error = f'{message} at byte offset {offset} in "{self.source}".'
        log.error(error)
        raise ParseError(error, offset, name)

    def skip(self):
        self.pos = space_pattern.match(self.source, self.pos).end()

    def peek(self):
        self.skip()
        if self.pos < len(self.source):
            return self.source[self.pos]
        return ''

    def integer(self):
        self.skip()
        match = integer_pattern.match(self.source, self.pos)
        if not match:
            self.fail('Expected a non-negative integer')
        self.pos = match.end()
        return int(match.group())

    def parse(self):
        result = self.expr()
        if self.peek():
            self.fail(f'Unexpected character "{self.peek()}"')
        return result

    def expr(self):
        sign = 1
        if self.peek() == '-':
            self.pos += 1
            sign = -1
        result = self.term() * sign
        while self.peek() in ('+', '-'):
            operator = self.peek()
            self.pos += 1
            if operator == '+':
                result += self.term()
            else:
                result -= self.term()
        return result

    def term(self):
        result = self.factor()
        while self.peek() == '*':
            self.pos += 1
            result *= self.factor()
        return result

    def factor(self):
        char = self.peek()
        if char.isdigit():
            numerator = self.integer()
            if self.peek() == '/':
                self.pos += 1
                start = self.pos
                denominator = self.integer()
                if denominator == 0:
                    self.fail('Division by zero', start)
                return constant(QQ(numerator, denominator), self.ring)
            return constant(numerator, self.ring)
        match = name_pattern.match(self.source, self.pos)
        if not match:
            if char:
                self.fail(f'Unexpected character "{char}"')
            self.fail('Unexpected end of expression')
        name = match.group()
        if name not in self.names:
            self.fail(f'Unknown variable "{name}"', name=name)
        self.pos = match.end()
        if self.peek() == '^':
            self.pos += 1
            return self.names[name]**self.integer()
        return self.names[name]


def parse_polynomial(source, ring):
    """
    Parses the polynomial expression `source` into an element of `ring`.

    Raises [`ParseError`](#ParseError) on syntax errors and on variables
    that do not belong to the ring.
    """
    if not isinstance(source, str):
        error = f'Expected polynomial expression as string, got {source!r}.'
        log.error(error)
        raise TypeError(error)
    return Parser(source, ring).parse()


########################################
# Printing                             #
########################################

def format_rational(value):
    """Formats a rational number as `n` or `n/d`."""
    (numerator, denominator) = (int(value.numerator), int(value.denominator))
    if denominator == 1:
        return str(numerator)
    return f'{numerator}/{denominator}'


def format_polynomial(p):
    """
    Returns the canonical string form of polynomial `p`.

    Terms appear in descending order with respect to the ring's monomial
    order, e.g. `x^2*y + y^4` or `-x*y + 1/2*y`. The output conforms to
    the grammar of [`parse_polynomial()`](#parse_polynomial).
    """
    if not p:
        return '0'
    names = variables(p.ring)
    text = ''
    for (index, (monomial, coefficient)) in enumerate(p.terms()):
        factors = [name if exponent == 1 else f'{name}^{exponent}'
                   for (name, exponent) in zip(names, monomial) if exponent]
        magnitude = abs(coefficient)
        if magnitude != 1 or not factors:
            factors.insert(0, format_rational(magnitude))
        term = '*'.join(factors)
        negative = coefficient < 0
        if index == 0:
            text = f'-{term}' if negative else term
        else:
            text += f' - {term}' if negative else f' + {term}'
    return text


########################################
# Arithmetic                           #
########################################

def check_ring(*polynomials):
    """Raises `ValueError` unless all polynomials share one ring."""
    for p in polynomials:
        if not isinstance(p, PolyElement):
            error = f'Expected a polynomial, got {p!r}.'
            log.error(error)
            raise TypeError(error)
    rings = {p.ring for p in polynomials}
    if len(rings) > 1:
        error = 'Polynomials belong to different rings.'
        log.error(error)
        raise ValueError(error)


def poly_add(a, b):
    """Returns the sum of two polynomials of the same ring."""
    check_ring(a, b)
    return a + b


def poly_mul(a, b):
    """Returns the product of two polynomials of the same ring."""
    check_ring(a, b)
    return a * b


def poly_reduce(p, divisors):
    """
    Divides `p` by the `divisors` with the multivariate division algorithm.

    Returns the tuple `(quotients, remainder)` such that
    `p = sum(q*d for (q, d) in zip(quotients, divisors)) + remainder`
    and no term of the remainder is divisible by the leading monomial of
    any divisor. Divisors are tried in the given order.
    """
    divisors = list(divisors)
    check_ring(p, *divisors)
    if not all(divisors):
        error = 'Cannot divide by the zero polynomial.'
        log.error(error)
        raise ValueError(error)
    if not divisors:
        return ([], p)
    if not p:
        return ([p.ring.zero for _ in divisors], p.ring.zero)
    (quotients, remainder) = p.div(divisors)
    return (list(quotients), remainder)
