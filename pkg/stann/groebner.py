"""
Gröbner bases of polynomial ideals and of submodules of free modules.

Ideal bases are computed by SymPy's Buchberger implementation on its
sparse polynomial rings. Submodules of free modules are handed to the
module code in `sympy.polys.agca`, which works over its own generalized
polynomial rings, so vectors are converted on the way in and out.
Membership, lifting to coefficient vectors, and colon ideals all come
from there.
"""

########################################
# Components                           #
########################################
from .arith import variables                   # variable names
from .arith import elimination_ring            # block-ordered ring
from .arith import convert                     # change of ring
from .arith import check_ring                  # ring consistency
from .arith import format_polynomial           # canonical form

########################################
# Dependencies                         #
########################################
from sympy.polys.groebnertools import groebner as buchberger
from sympy.polys.domains import QQ              # rational numbers
from functools import lru_cache                 # memoization
from time import perf_counter as now            # wall-clock time
from logging import getLogger                   # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                    # event log


########################################
# Ideal bases                          #
########################################

class GroebnerBasis:
    """
    Reduced Gröbner basis of a polynomial ideal.

    Elements are monic and sorted by their leading monomials, in
    descending lexicographic order of the exponents, so that (x, y^2)
    lists x first under any monomial order. Two bases of the same ring
    are equal if and only if they generate the same ideal.
    """

    def __init__(self, ring, elements):
        self.ring = ring
        """Polynomial ring the ideal lives in."""
        self.elements = tuple(elements)
        """Basis elements, monic, in canonical order."""

    def __repr__(self):
        return f'{self.__class__.__name__}({", ".join(self.strings())})'

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ring == other.ring and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ring, self.elements))

    @property
    def order(self):
        """Monomial order the basis is reduced with respect to."""
        return self.ring.order

    def strings(self):
        """Returns the basis elements as canonical strings."""
        return [format_polynomial(element) for element in self.elements]

    def is_unit(self):
        """Returns whether the basis generates the whole ring."""
        return self.elements == (self.ring.one,)

    def reduce(self, p):
        """Returns the normal form of `p` with respect to this basis."""
        return normal_form(p, self)

    def contains(self, p):
        """Returns whether `p` lies in the ideal."""
        return not normal_form(p, self)


def groebner_basis(gens, ring=None):
    """
    Computes the reduced Gröbner basis of the ideal generated by `gens`.

    The `ring` must be given when the generator list is empty. Otherwise
    it defaults to the generators' ring.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            error = 'Ring must be given for an empty list of generators.'
            log.error(error)
            raise ValueError(error)
        ring = gens[0].ring
    check_ring(ring.zero, *gens)
    gens = [g for g in gens if g]
    if not gens:
        return GroebnerBasis(ring, [])
    if any(g.is_ground for g in gens):
        return GroebnerBasis(ring, [ring.one])
    elements = buchberger(gens, ring, method='buchberger')
    elements = [element.monic() for element in elements]
    elements.sort(key=lambda element: element.LM, reverse=True)
    return GroebnerBasis(ring, elements)


def normal_form(p, gb):
    """
    Reduces `p` completely by the Gröbner basis `gb`.

    The result is zero if and only if `p` is in the ideal.
    """
    if p.ring != gb.ring:
        error = 'Polynomial and Gröbner basis belong to different rings.'
        log.error(error)
        raise ValueError(error)
    if not gb.elements or not p:
        return p
    return p.rem(list(gb.elements))


def eliminate(gens, drop):
    """
    Returns generators of the elimination ideal.

    That is the intersection of the ideal generated by `gens` with the
    subring of polynomials free of the variables named in `drop`. The
    result is given in the generators' ring.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    check_ring(*gens)
    names = variables(ring)
    unknown = [name for name in drop if name not in names]
    if unknown:
        error = f'Cannot eliminate unknown variable "{unknown[0]}".'
        log.error(error)
        raise ValueError(error)
    block = elimination_ring(ring, drop)
    basis = groebner_basis([convert(g, block) for g in gens], block)
    count = len(set(drop))
    kept = [element for element in basis
            if all(not any(monomial[:count]) for monomial in element.keys())]
    return [convert(element, ring) for element in kept]


########################################
# Free modules                         #
########################################

class FreeModuleElement:
    """Vector in a free module of finite rank over a polynomial ring."""

    def __init__(self, components):
        components = tuple(components)
        if not components:
            error = 'Module elements need at least one component.'
            log.error(error)
            raise ValueError(error)
        check_ring(*components)
        self.components = components
        """Polynomial components."""
        self.ring = components[0].ring
        """Polynomial ring of the components."""

    def __repr__(self):
        return f'{self.__class__.__name__}({", ".join(self.strings())})'

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, index):
        return self.components[index]

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other):
        self.check(other)
        return FreeModuleElement(a + b for (a, b) in zip(self, other))

    def __sub__(self, other):
        self.check(other)
        return FreeModuleElement(a - b for (a, b) in zip(self, other))

    def __neg__(self):
        return FreeModuleElement(-a for a in self)

    def __rmul__(self, scalar):
        return FreeModuleElement(scalar*a for a in self)

    @property
    def rank(self):
        """Rank of the free module the element belongs to."""
        return len(self.components)

    def check(self, other):
        if other.rank != self.rank:
            error = f'Ranks differ: {self.rank} vs. {other.rank}.'
            log.error(error)
            raise ValueError(error)

    def is_zero(self):
        """Returns whether all components vanish."""
        return not any(self.components)

    def strings(self):
        """Returns the components as canonical strings."""
        return [format_polynomial(c) for c in self.components]


########################################
# SymPy modules                        #
########################################

@lru_cache(maxsize=None)
def module_ring(ring):
    """
    Returns SymPy's module-capable ring matching `ring`.

    That is the generalized polynomial ring over ℚ from `sympy.polys.agca`
    with the same variables and monomial order. Only it offers free
    modules, submodules, and their Gröbner bases.
    """
    return QQ.old_poly_ring(*ring.symbols, order=ring.order)


def to_module_vector(element):
    """Returns the components of `element` as SymPy expressions."""
    return [component.as_expr() for component in element]


def from_module_ring(value, ring):
    """Maps an element of the module-capable ring back into `ring`."""
    return ring.from_expr(module_ring(ring).to_sympy(value))


########################################
# Submodules                           #
########################################

class Submodule:
    """
    Submodule of a free module, given by generators.

    Wraps a SymPy submodule over the matching module-capable ring,
    ordered position over term: the component with the lowest index is
    the most significant, and within a component the ring's monomial
    order decides. The SymPy module, and with it the standard basis, is
    built on first use and then cached. Zero generators are kept in
    `generators` but not passed on.
    """

    def __init__(self, rank, generators):
        generators = [g if isinstance(g, FreeModuleElement)
                      else FreeModuleElement(g) for g in generators]
        for generator in generators:
            if generator.rank != rank:
                error = (f'Generator of rank {generator.rank} does not '
                         f'belong to submodule of rank {rank}.')
                log.error(error)
                raise ValueError(error)
        if not generators:
            error = 'A submodule needs at least one generator.'
            log.error(error)
            raise ValueError(error)
        check_ring(*(g[0] for g in generators))
        self.rank = rank
        """Rank of the ambient free module."""
        self.generators = tuple(generators)
        """Generators as given."""
        self.ring = generators[0].ring
        """Polynomial ring of the components."""
        self.support = tuple(index for (index, g) in enumerate(generators)
                             if not g.is_zero())
        """Indices of the nonzero generators."""
        self.module = None
        """SymPy submodule, or `None` before the first computation."""

    def __repr__(self):
        return (f'{self.__class__.__name__}(rank={self.rank}, '
                f'generators={len(self.generators)})')

    def compute(self):
        """Builds the SymPy submodule and its standard basis, once."""
        if self.module is not None or not self.support:
            return
        t0 = now()
        free = module_ring(self.ring).free_module(self.rank)
        vectors = [to_module_vector(self.generators[index])
                   for index in self.support]
        module = free.submodule(*vectors, order='ilex', TOP=False)
        count = len(module._groebner())
        self.module = module
        log.debug(f'Module basis of rank {self.rank} has {count} elements, '
                  f'computed in {now()-t0:.3f} s.')

    @property
    def basis(self):
        """
        Minimal module Gröbner basis.

        Elements are scaled so that the leading term, which sits in the
        first nonzero component, has coefficient one. They are sorted by
        that component, then by descending leading monomial.
        """
        self.compute()
        if self.module is None:
            return []
        ring = self.ring
        elements = []
        for vector in self.module._groebner_vec():
            components = [from_module_ring(c, ring) for c in vector]
            position = next(i for (i, c) in enumerate(components) if c)
            scale = components[position].LC
            components = [c.quo_ground(scale) for c in components]
            elements.append((position, components[position].LM, components))
        elements.sort(key=lambda item: ring.order(item[1]), reverse=True)
        elements.sort(key=lambda item: item[0])
        return [FreeModuleElement(item[2]) for item in elements]

    def check(self, element):
        """Returns `element` as a module element of matching rank and ring."""
        if not isinstance(element, FreeModuleElement):
            element = FreeModuleElement(element)
        if element.rank != self.rank:
            error = f'Element of rank {element.rank} is not in rank {self.rank}.'
            log.error(error)
            raise ValueError(error)
        if element.ring != self.ring:
            error = 'Element and submodule belong to different rings.'
            log.error(error)
            raise ValueError(error)
        return element

    def contains(self, element):
        """Returns whether `element` belongs to the submodule."""
        element = self.check(element)
        if element.is_zero():
            return True
        self.compute()
        if self.module is None:
            return False
        return self.module.contains(to_module_vector(element))

    def lift(self, element):
        """
        Expresses `element` in terms of the generators.

        Returns the list of polynomial coefficients, one per generator,
        or `None` if the element is not in the submodule. Zero generators
        get zero coefficients.
        """
        element = self.check(element)
        ring = self.ring
        coefficients = [ring.zero] * len(self.generators)
        if element.is_zero():
            return coefficients
        if not self.contains(element):
            return None
        t0 = now()
        lifted = self.module.in_terms_of_generators(to_module_vector(element))
        for (index, value) in zip(self.support, lifted):
            coefficients[index] = from_module_ring(value, ring)
        log.debug(f'Lifted element of rank {self.rank} in {now()-t0:.3f} s.')
        return coefficients


def module_groebner_basis(sub):
    """
    Computes the module Gröbner basis of submodule `sub`.

    Returns the same submodule, now with its basis cached.
    """
    sub.compute()
    return sub


def colon_into_ideal(sub, w):
    """
    Computes the colon ideal (sub : w) of all `r` with `r*w` in `sub`.

    SymPy obtains it as the module quotient of `sub` by the line through
    `w`: the generators get a tag component zero, `w` gets a one, and an
    elimination order leaves the tag components of those basis elements
    that vanish elsewhere.
    """
    w = sub.check(w)
    ring = sub.ring
    if w.is_zero():
        return groebner_basis([ring.one], ring)
    sub.compute()
    if sub.module is None:
        return groebner_basis([], ring)
    t0 = now()
    line = sub.module.container.submodule(to_module_vector(w))
    quotient = sub.module.module_quotient(line)
    gens = [from_module_ring(g, ring) for g in quotient.gens]
    gb = groebner_basis(gens, ring)
    log.debug(f'Colon ideal in rank {sub.rank} computed in {now()-t0:.3f} s.')
    return gb
