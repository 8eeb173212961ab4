"""
Catalogs of matrix factorizations over the simple curve singularities.

The A and D families are generated from formulas, the E types are read
from the JSON documents in the package's `data` folder. Every
factorization is validated when it is created, and annihilators are
always computed, never tabulated.

The D_n catalog uses the matrices φ_j, ψ_j = y·φ_j and ξ_j, η_j below,
which satisfy φψ = ψφ = f·I for f = x²y + y^(n-1). The list as it is
often printed, with a stray index in ψ_j and with ξ_j and η_j equal,
is not a factorization. The matrices here are the corrected ones:
```
φ_j = [[x,  y^j], [y^(n-j-2), -x]]     ψ_j = [[xy, y^(j+1)], [y^(n-j-1), -xy]]
ξ_j = [[x,  y^j], [y^(n-j-1), -xy]]    η_j = [[xy, y^j],     [y^(n-j-1), -x]]
```
"""

########################################
# Components                           #
########################################
from .arith import polynomial_ring              # polynomial ring
from .ideals import QuotientContext             # hypersurface ring
from .matfac import MatrixFactorization         # matrix factorization
from .matfac import FactorizationError          # invalid factorization
from .matfac import annihilate                  # stable annihilators

########################################
# Dependencies                         #
########################################
import json                                     # JSON documents
from pathlib import Path                        # file-system path
from re import compile as regex                 # regular expression
from logging import getLogger                   # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                    # event log

folder = Path(__file__).parent/'data'
"""Folder holding the E-type catalog documents."""

families = ('A_zero', 'A_curve', 'D_odd', 'E6', 'E7', 'E8')
"""Names of the catalog families."""

pattern = regex(r'(A0|A1|D):([0-9]+)|(D)([0-9]+)|(E6|E7|E8)')
"""Syntax of catalog names on the command line."""


########################################
# Catalog names                        #
########################################

class CatalogSpec:
    """
    Names a built-in catalog: a family and, except for E types, a parameter.

    `family` is one of `'A_zero'`, `'A_curve'`, `'D_odd'`, `'E6'`, `'E7'`,
    `'E8'`. Catalogs of type A need `n ≥ 1`, the D family odd `n ≥ 5`.
    """

    def __init__(self, family, n=None):
        if family not in families:
            error = f'Unknown catalog family "{family}".'
            log.error(error)
            raise ValueError(error)
        if family.startswith('E'):
            if n is not None:
                error = f'Catalog {family} takes no parameter.'
                log.error(error)
                raise ValueError(error)
        elif isinstance(n, bool) or not isinstance(n, int) or n < 1:
            error = f'Catalog {family} needs a positive integer, not {n!r}.'
            log.error(error)
            raise ValueError(error)
        elif family == 'D_odd' and (n < 5 or n % 2 == 0):
            error = f'D-type catalogs need an odd n ≥ 5, not {n}.'
            log.error(error)
            raise ValueError(error)
        self.family = family
        self.n = n

    def __repr__(self):
        if self.n is None:
            return f"{self.__class__.__name__}('{self.family}')"
        return f"{self.__class__.__name__}('{self.family}', {self.n})"

    def __eq__(self, other):
        if not isinstance(other, CatalogSpec):
            return NotImplemented
        return (self.family, self.n) == (other.family, other.n)

    def __hash__(self):
        return hash((self.family, self.n))

    @classmethod
    def parse(cls, name):
        """
        Parses a catalog name as used on the command line.

        Accepts `A0:n` (zero-dimensional A_n), `A1:n` (A_n curve),
        `D:n` or `Dn` (D_n curve), and `E6`, `E7`, `E8`.
        """
        match = pattern.fullmatch(name.strip())
        if not match:
            error = (f'Invalid catalog name "{name}". Expected one of '
                     'A0:n, A1:n, D:n, D5, D7, E6, E7, E8.')
            log.error(error)
            raise ValueError(error)
        (prefix, n, d, m, e) = match.groups()
        if e:
            return cls(e)
        if d:
            return cls('D_odd', int(m))
        family = {'A0': 'A_zero', 'A1': 'A_curve', 'D': 'D_odd'}[prefix]
        return cls(family, int(n))

    def factorizations(self):
        """Returns the matrix factorizations of this catalog."""
        if self.family == 'A_zero':
            return factorizations_a_zero(self.n)
        if self.family == 'A_curve':
            return factorizations_a_curve(self.n)
        if self.family == 'D_odd':
            return factorizations_d_odd(self.n)
        return factorizations_e(self.family)


########################################
# Families                             #
########################################

def check_n(n, least=1):
    if isinstance(n, bool) or not isinstance(n, int) or n < least:
        error = f'Catalog parameter must be an integer ≥ {least}, not {n!r}.'
        log.error(error)
        raise ValueError(error)


def factorizations_a_zero(n):
    """
    Returns the factorizations (y^(i+1), y^(n-i)) of y^(n+1), for i = 0…n.

    They present the modules M_i = k[y]/(y^(i+1)) over k[y]/(y^(n+1)).
    """
    check_n(n)
    ring = polynomial_ring('y')
    (y,) = ring.gens
    ctx = QuotientContext(ring, y**(n+1))
    return [MatrixFactorization(ctx, [[y**(i+1)]], [[y**(n-i)]], f'M_{i}')
            for i in range(n+1)]


def factorizations_a_curve(n):
    """
    Returns the factorizations of x² + y^(n+1), for j = 0…n+1.

    Each is the matrix [[x, y^j], [y^(n+1-j), -x]] paired with itself.
    The curve is the double branched cover of k[y]/(y^(n+1)).
    """
    check_n(n)
    ring = polynomial_ring('x, y')
    (x, y) = ring.gens
    ctx = QuotientContext(ring, x**2 + y**(n+1))
    mfs = []
    for j in range(n+2):
        phi = [[x, y**j], [y**(n+1-j), -x]]
        mfs.append(MatrixFactorization(ctx, phi, phi, f'M_{j}'))
    return mfs


def factorizations_d_odd(n):
    """
    Returns the factorizations of the D_n potential x²y + y^(n-1).

    These are A = (y, x² + y^(n-2)), then M_j = (φ_j, ψ_j) for j = 0…n-3,
    then X_j = (ξ_j, η_j) for j = 0…n-3, in this order.
    """
    check_n(n, 5)
    if n % 2 == 0:
        error = f'D-type catalogs need an odd n, not {n}.'
        log.error(error)
        raise ValueError(error)
    ring = polynomial_ring('x, y')
    (x, y) = ring.gens
    ctx = QuotientContext(ring, x**2*y + y**(n-1))
    mfs = [MatrixFactorization(ctx, [[y]], [[x**2 + y**(n-2)]], 'A')]
    for j in range(n-2):
        phi = [[x, y**j], [y**(n-j-2), -x]]
        psi = [[x*y, y**(j+1)], [y**(n-j-1), -x*y]]
        mfs.append(MatrixFactorization(ctx, phi, psi, f'M_{j}'))
    for j in range(n-2):
        xi  = [[x,   y**j], [y**(n-j-1), -x*y]]
        eta = [[x*y, y**j], [y**(n-j-1), -x]]
        mfs.append(MatrixFactorization(ctx, xi, eta, f'X_{j}'))
    return mfs


def factorizations_e(which):
    """Returns the factorizations of type `E6`, `E7`, or `E8`."""
    if which not in ('E6', 'E7', 'E8'):
        error = f'Unknown E type "{which}".'
        log.error(error)
        raise ValueError(error)
    file = folder/f'{which}.json'
    document = json.loads(file.read_text(encoding='utf-8'))
    return parse_document(document, source=file.name)


########################################
# Documents                            #
########################################

def parse_document(document, source='document'):
    """
    Returns the matrix factorizations described by an input document.

    The document is a dictionary as decoded from JSON, with the ring
    declaration, the potential, and the list of modules:
    ```json
    {
      "ring":      {"variables": ["x", "y"], "field": "QQ"},
      "potential": "x^2*y + y^4",
      "modules":   [{"name": "A", "phi": [["y"]], "psi": [["x^2 + y^3"]]}]
    }
    ```
    Raises `ValueError` if the document is malformed, if module names are
    not unique, or if an entry does not parse, and
    [`FactorizationError`](#FactorizationError) if a module fails the
    factorization check. Messages name the `source` and the module.
    """

    def fail(message):
        error = f'{source}: {message}'
        log.error(error)
        raise ValueError(error)

    if not isinstance(document, dict):
        fail('Document must be a JSON object.')
    ring = document.get('ring')
    if not isinstance(ring, dict):
        fail('Missing ring declaration.')
    variables = ring.get('variables')
    if (not isinstance(variables, list)
            or not all(isinstance(name, str) for name in variables)):
        fail('Ring variables must be a list of names.')
    field = ring.get('field', 'QQ')
    if field != 'QQ':
        fail(f'Unsupported coefficient field "{field}", only QQ is.')
    potential = document.get('potential')
    if not isinstance(potential, str):
        fail('Potential must be a polynomial expression.')
    modules = document.get('modules')
    if not isinstance(modules, list):
        fail('Modules must be a list.')
    ctx = QuotientContext(polynomial_ring(variables), potential)
    names = set()
    mfs = []
    for (index, module) in enumerate(modules):
        if not isinstance(module, dict):
            fail(f'Module {index} must be a JSON object.')
        name = module.get('name')
        if not isinstance(name, str) or not name:
            fail(f'Module {index} has no name.')
        if name in names:
            fail(f'Duplicate module name "{name}".')
        names.add(name)
        (phi, psi) = (module.get('phi'), module.get('psi'))
        for matrix in (phi, psi):
            if (not isinstance(matrix, list)
                    or not all(isinstance(row, list) for row in matrix)):
                fail(f'Matrices of module "{name}" must be lists of rows.')
        try:
            mfs.append(MatrixFactorization(ctx, phi, psi, name))
        except FactorizationError as failure:
            error = f'{source}: {failure}'
            log.error(error)
            raise FactorizationError(error, failure.row, failure.col,
                                     failure.got, failure.expected,
                                     failure.product, name) from None
        except (ValueError, TypeError) as failure:
            fail(f'Module "{name}": {failure}')
    return mfs


########################################
# Catalogs                             #
########################################

def catalog_a_zero(n, workers=None):
    """Returns the points M_0…M_n over k[y]/(y^(n+1))."""
    return annihilate(factorizations_a_zero(n), workers)


def catalog_a_curve(n, workers=None):
    """Returns the points over the A_n curve x² + y^(n+1)."""
    return annihilate(factorizations_a_curve(n), workers)


def catalog_d_odd(n, workers=None):
    """Returns the points A, M_j, X_j over the D_n curve, n odd."""
    return annihilate(factorizations_d_odd(n), workers)


def catalog_e(which, workers=None):
    """Returns the points over the E6, E7, or E8 curve."""
    return annihilate(factorizations_e(which), workers)


def load_catalog(name, workers=None):
    """
    Returns the points of the built-in catalog of the given `name`.

    The name is either a [`CatalogSpec`](#CatalogSpec) or a string such
    as `'D5'`, `'D:7'`, `'A0:4'`, `'A1:2'`, or `'E8'`.

    Example usage:
    ```python
    import stann
    points = stann.load_catalog('D5')
    space = stann.build_space(points)
    print(len(stann.enumerate_closed_sets(space)))   # 7
    ```
    """
    spec = name if isinstance(name, CatalogSpec) else CatalogSpec.parse(name)
    log.info(f'Loading catalog {spec}.')
    return annihilate(spec.factorizations(), workers)
