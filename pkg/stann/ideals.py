"""
Ideals of polynomial rings and of hypersurface rings.

An ideal of the hypersurface ring R = S/(f) is always represented by its
preimage in S, i.e. by an ideal of S that contains the potential f. All
containments and equalities of R-ideals are then decided on the
preimages, by way of reduced Gröbner bases.
"""

########################################
# Components                           #
########################################
from .arith import parse_polynomial             # polynomial parser
from .arith import extend_ring                  # ring with tag variable
from .arith import variables                    # variable names
from .arith import convert                      # change of ring
from .arith import format_polynomial            # canonical form
from .groebner import groebner_basis            # reduced Gröbner basis
from .groebner import normal_form               # remainder of division
from .groebner import eliminate                 # elimination ideal

########################################
# Dependencies                         #
########################################
from sympy.polys.rings import PolyElement       # polynomial
from logging import getLogger                   # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                    # event log


########################################
# Ideal                                #
########################################

class Ideal:
    """
    Ideal of a polynomial ring, given by generators.

    The reduced Gröbner basis is computed right away, so ideals are
    immutable values that can be compared, hashed, and sent to other
    processes. Generators may be given as polynomials or as strings,
    which are then parsed in the `ring`. Zero generators are dropped.

    Two ideals are equal if and only if their reduced Gröbner bases are.
    The string form lists the basis elements, e.g. `(x^2, x*y, y^2)`,
    the zero ideal prints as `(0)`, the unit ideal as `(1)`.

    Example usage:
    ```python
    from stann import polynomial_ring, Ideal
    R = polynomial_ring('x, y')
    I = Ideal(R, ['x^2', 'y'])
    J = Ideal(R, ['x', 'y^2'])
    print(I & J)        # (x^2, x*y, y^2)
    print(I <= I + J)   # True
    ```
    """

    def __init__(self, ring, generators=()):
        polynomials = []
        for generator in generators:
            if isinstance(generator, str):
                generator = parse_polynomial(generator, ring)
            if not isinstance(generator, PolyElement):
                error = f'Expected a polynomial or string, got {generator!r}.'
                log.error(error)
                raise TypeError(error)
            if generator.ring != ring:
                error = 'Generator does not belong to the ideal\'s ring.'
                log.error(error)
                raise ValueError(error)
            if generator:
                polynomials.append(generator)
        self.ring = ring
        """Polynomial ring the ideal lives in."""
        self.generators = tuple(polynomials)
        """Nonzero generators as given."""
        self.basis = groebner_basis(polynomials, ring)
        """Reduced Gröbner basis."""

    def __str__(self):
        if not self.basis.elements:
            return '(0)'
        return '(' + ', '.join(self.strings()) + ')'

    def __repr__(self):
        return f'{self.__class__.__name__}{self}'

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.basis)

    def __le__(self, other):
        return ideal_contains(other, self)

    def __ge__(self, other):
        return ideal_contains(self, other)

    def __lt__(self, other):
        return self <= other and self != other

    def __gt__(self, other):
        return self >= other and self != other

    def __add__(self, other):
        return ideal_combine('sum', self, other)

    def __mul__(self, other):
        return ideal_combine('product', self, other)

    def __pow__(self, n):
        return ideal_combine('power', self, n=n)

    def __and__(self, other):
        return ideal_intersection(self, other)

    def __contains__(self, p):
        return self.contains(p)

    def strings(self):
        """Returns the canonical generators, i.e. the reduced basis, as strings."""
        return self.basis.strings()

    def contains(self, p):
        """Returns whether polynomial `p` (or expression string) is a member."""
        if isinstance(p, str):
            p = parse_polynomial(p, self.ring)
        return self.basis.contains(p)

    def is_unit(self):
        """Returns whether this is the whole ring."""
        return self.basis.is_unit()

    def is_zero(self):
        """Returns whether this is the zero ideal."""
        return not self.basis.elements


class QuotientContext:
    """
    Hypersurface ring R = S/(f), given by the polynomial ring S and the
    potential f.

    The potential must be neither zero nor a unit. It can be given as a
    string, which is then parsed in the `ring`.
    """

    def __init__(self, ring, potential):
        if isinstance(potential, str):
            potential = parse_polynomial(potential, ring)
        if potential.ring != ring:
            error = 'Potential does not belong to the ring.'
            log.error(error)
            raise ValueError(error)
        if not potential or potential.is_ground:
            error = 'Potential must be a non-constant polynomial.'
            log.error(error)
            raise ValueError(error)
        self.ring = ring
        """Polynomial ring S."""
        self.potential = potential
        """Potential f defining the hypersurface."""

    def __repr__(self):
        names = ', '.join(variables(self.ring))
        return (f'{self.__class__.__name__}'
                f'(ℚ[{names}]/({format_polynomial(self.potential)}))')

    def __eq__(self, other):
        if not isinstance(other, QuotientContext):
            return NotImplemented
        return (self.ring == other.ring and self.potential == other.potential)

    def __hash__(self):
        return hash((self.ring, self.potential))

    @property
    def variables(self):
        """Names of the ring variables."""
        return variables(self.ring)

    def ideal(self, generators):
        """Returns the R-ideal generated by `generators`, normalized."""
        return normalize_mod_potential(Ideal(self.ring, generators), self)

    def unit(self):
        """Returns the unit ideal."""
        return Ideal(self.ring, [self.ring.one])


########################################
# Operations                           #
########################################

def check_rings(*ideals):
    """Raises `ValueError` unless all ideals share one ring."""
    rings = {ideal.ring for ideal in ideals}
    if len(rings) > 1:
        error = 'Ideals belong to different rings.'
        log.error(error)
        raise ValueError(error)


def ideal_combine(kind, a, b=None, n=1):
    """
    Returns the sum, product, or `n`-th power of ideals.

    `kind` is one of `'sum'`, `'product'`, `'power'`. The power takes a
    single ideal `a` and an exponent `n ≥ 1`, the others need `b`. The
    product is generated by all pairwise products of generators.
    """
    if kind in ('sum', 'product'):
        if b is None:
            error = f'Ideal {kind} needs two ideals.'
            log.error(error)
            raise ValueError(error)
        check_rings(a, b)
        if kind == 'sum':
            return Ideal(a.ring, a.generators + b.generators)
        return Ideal(a.ring, [g*h for g in a.basis for h in b.basis])
    if kind == 'power':
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            error = f'Exponent of ideal power must be a positive integer, not {n!r}.'
            log.error(error)
            raise ValueError(error)
        result = a
        for _ in range(n - 1):
            result = ideal_combine('product', result, a)
        return result
    error = f'Unknown kind of ideal combination "{kind}".'
    log.error(error)
    raise ValueError(error)


def ideal_intersection(a, b):
    """
    Returns the intersection of two ideals.

    A tag variable t is adjoined, and t is eliminated from the ideal
    generated by t·a and (1-t)·b.
    """
    check_rings(a, b)
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring)
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    ring = a.ring
    tag = 't'
    while tag in variables(ring):
        tag += '_'
    extended = extend_ring(ring, tag)
    t = extended.gens[-1]
    gens  = [t*convert(g, extended) for g in a.basis]
    gens += [(1 - t)*convert(g, extended) for g in b.basis]
    kept = eliminate(gens, [tag])
    return Ideal(ring, [convert(g, ring) for g in kept])


def ideal_contains(outer, inner):
    """Returns whether ideal `outer` contains ideal `inner`."""
    check_rings(outer, inner)
    return all(not normal_form(g, outer.basis) for g in inner.basis)


def ideal_equal(a, b):
    """Returns whether two ideals are equal."""
    check_rings(a, b)
    return a.basis == b.basis


def normalize_mod_potential(a, ctx):
    """Returns the ideal a + (f) that represents `a` as an ideal of S/(f)."""
    if a.ring != ctx.ring:
        error = 'Ideal and hypersurface ring have different polynomial rings.'
        log.error(error)
        raise ValueError(error)
    return Ideal(a.ring, a.generators + (ctx.potential,))


def jacobian_ideal(ctx):
    """
    Returns the ideal generated by f and its partial derivatives.

    It is contained in the stable annihilator of every matrix
    factorization of f.
    """
    f = ctx.potential
    return Ideal(ctx.ring, [f] + [f.diff(x) for x in ctx.ring.gens])
