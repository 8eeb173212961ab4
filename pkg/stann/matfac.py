"""
Matrix factorizations and their stable annihilators.

A matrix factorization of the potential f is a pair (φ, ψ) of square
matrices over S with φψ = ψφ = f·I. It presents a maximal Cohen-Macaulay
module over R = S/(f), namely the cokernel of φ.

Multiplication by r ∈ S is nullhomotopic on (φ, ψ) if there are matrices
p and t with
```
r·I = φ·p + t·ψ    and    r·I = p·φ + ψ·t.
```
These r form the stable annihilator of the module. It is computed as a
single colon ideal: the homotopy map H′(p, t) = (φp + tψ, pφ + ψt) has an
image in the free module of rank 2n², after matrices are flattened row by
row, first equation first. The stable annihilator is the set of r with
r·(I, I) in that image.

Matrices are NumPy arrays of object type, holding SymPy polynomials.
"""

########################################
# Components                           #
########################################
from .config import option                      # configuration
from .arith import parse_polynomial             # polynomial parser
from .arith import format_polynomial            # canonical form
from .arith import extend_ring                  # ring with extra variable
from .arith import convert                      # change of ring
from .groebner import Submodule                 # submodule of free module
from .groebner import colon_into_ideal          # colon ideal
from .ideals import Ideal                       # polynomial ideal
from .ideals import QuotientContext             # hypersurface ring
from .ideals import normalize_mod_potential     # ideal containing f

########################################
# Dependencies                         #
########################################
from sympy.polys.rings import PolyElement       # polynomial
from numpy import empty, ndindex, concatenate   # object arrays
from numpy import array_equal                   # matrix equality
from multiprocessing import Pool                # worker processes
from functools import lru_cache                 # memoization
from time import perf_counter as now            # wall-clock time
from logging import getLogger                   # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                    # event log


########################################
# Errors                               #
########################################

class FactorizationError(ValueError):
    """
    Raised when a pair of matrices is not a matrix factorization.

    Names the first failing entry: `row` and `col` (counting from 0) of
    the `product` (`'phi*psi'` or `'psi*phi'`), the entry it has (`got`),
    and the one it should have (`expected`), both as canonical strings.
    `label` is the name of the module concerned.
    """

    def __init__(self, message, row, col, got, expected, product, label=''):
        super().__init__(message)
        self.row      = row
        self.col      = col
        self.got      = got
        self.expected = expected
        self.product  = product
        self.label    = label


########################################
# Matrices                             #
########################################

def matrix(rows, ring):
    """
    Returns a read-only square matrix of polynomials.

    `rows` is a nested sequence of polynomials, integers, or polynomial
    expressions (strings) to be parsed in the `ring`.
    """
    rows = [list(row) for row in rows]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        error = f'Matrix is not square: row lengths {[len(r) for r in rows]}.'
        log.error(error)
        raise ValueError(error)
    array = empty((n, n), dtype=object)
    for (i, row) in enumerate(rows):
        for (j, entry) in enumerate(row):
            if isinstance(entry, str):
                entry = parse_polynomial(entry, ring)
            elif isinstance(entry, int) and not isinstance(entry, bool):
                entry = ring(entry)
            elif not isinstance(entry, PolyElement):
                error = f'Invalid matrix entry {entry!r}.'
                log.error(error)
                raise TypeError(error)
            elif entry.ring != ring:
                error = f'Matrix entry {entry} belongs to another ring.'
                log.error(error)
                raise ValueError(error)
            array[i, j] = entry
    array.flags.writeable = False
    return array


def identity(n, ring, scalar=None):
    """Returns the `n`×`n` identity matrix, times `scalar` if given."""
    scalar = ring.one if scalar is None else scalar
    return matrix([[scalar if i == j else ring.zero for j in range(n)]
                   for i in range(n)], ring)


def elementary(n, k, l, ring):
    """Returns the `n`×`n` matrix unit with a one at row `k`, column `l`."""
    return matrix([[ring.one if (i, j) == (k, l) else ring.zero
                    for j in range(n)] for i in range(n)], ring)


def block(a, b, c, d, ring):
    """Assembles the matrix [[a, b], [c, d]] from square blocks."""
    top    = [list(ra) + list(rb) for (ra, rb) in zip(a, b)]
    bottom = [list(rc) + list(rd) for (rc, rd) in zip(c, d)]
    return matrix(top + bottom, ring)


def block_diagonal(a, b, ring):
    """Assembles the matrix [[a, 0], [0, b]]."""
    (k, n) = (a.shape[0], a.shape[0] + b.shape[0])
    rows = [[ring.zero]*n for _ in range(n)]
    for (i, j) in ndindex(a.shape):
        rows[i][j] = a[i, j]
    for (i, j) in ndindex(b.shape):
        rows[k+i][k+j] = b[i, j]
    return matrix(rows, ring)


def strings(m):
    """Returns the matrix as nested lists of canonical strings."""
    return [[format_polynomial(entry) for entry in row] for row in m]


def flatten(*matrices):
    """Concatenates the matrices' entries, row by row."""
    return list(concatenate([m.ravel() for m in matrices]))


def unflatten(entries, n, ring):
    """Reassembles an `n`×`n` matrix from `n²` entries in row order."""
    return matrix([entries[i*n:(i+1)*n] for i in range(n)], ring)


########################################
# Factorizations                       #
########################################

class MatrixFactorization:
    """
    Matrix factorization (φ, ψ) of the potential of a hypersurface ring.

    The matrices are checked on construction: both products must equal
    f·I exactly, otherwise [`FactorizationError`](#FactorizationError)
    is raised. Entries may be given as polynomial expressions. The
    `label` names the module; it is ignored when comparing factorizations.

    Example usage:
    ```python
    from stann import polynomial_ring, QuotientContext, MatrixFactorization
    R = polynomial_ring('x, y')
    ctx = QuotientContext(R, 'x^2*y + y^4')
    m = MatrixFactorization(ctx, [['x', 'y'], ['y^2', '-x']],
                                 [['x*y', 'y^2'], ['y^3', '-x*y']], 'M_1')
    ```
    """

    def __init__(self, ctx, phi, psi, label=''):
        ring = ctx.ring
        phi = matrix(phi, ring)
        psi = matrix(psi, ring)
        if phi.shape != psi.shape:
            error = (f'Matrices of "{label}" differ in size: '
                     f'{phi.shape[0]} vs. {psi.shape[0]}.')
            log.error(error)
            raise ValueError(error)
        self.ctx   = ctx
        """Hypersurface ring, i.e. polynomial ring and potential."""
        self.phi   = phi
        """Matrix φ, whose cokernel is the module."""
        self.psi   = psi
        """Matrix ψ, the complementary factor."""
        self.label = label
        """Name of the module."""
        self.check()

    def __repr__(self):
        return (f"{self.__class__.__name__}('{self.label}', "
                f"phi={strings(self.phi)}, psi={strings(self.psi)})")

    def __eq__(self, other):
        if not isinstance(other, MatrixFactorization):
            return NotImplemented
        return (self.ctx == other.ctx
                and array_equal(self.phi, other.phi)
                and array_equal(self.psi, other.psi))

    def __hash__(self):
        return hash((self.ctx, tuple(self.phi.ravel()), tuple(self.psi.ravel())))

    @property
    def size(self):
        """Number of rows (and columns) of the matrices."""
        return self.phi.shape[0]

    @property
    def ring(self):
        """Polynomial ring S."""
        return self.ctx.ring

    @property
    def potential(self):
        """Potential f."""
        return self.ctx.potential

    def check(self):
        """Raises `FactorizationError` unless φψ = ψφ = f·I."""
        f = self.potential
        expected = identity(self.size, self.ring, f)
        for (name, product) in (('phi*psi', self.phi @ self.psi),
                                ('psi*phi', self.psi @ self.phi)):
            for (row, col) in ndindex(product.shape):
                if product[row, col] == expected[row, col]:
                    continue
                got  = format_polynomial(product[row, col])
                want = format_polynomial(expected[row, col])
                error = (f'Not a matrix factorization: entry ({row}, {col}) '
                         f'of {name} of "{self.label}" is {got}, '
                         f'expected {want}.')
                log.error(error)
                raise FactorizationError(error, row, col, got, want,
                                         name, self.label)

    def document(self):
        """Returns the factorization as an entry of an input document."""
        return {
            'name': self.label,
            'phi':  strings(self.phi),
            'psi':  strings(self.psi),
        }


class HomotopyWitness:
    """
    Matrices p and t that exhibit multiplication by r as nullhomotopic,
    i.e. r·I = φp + tψ = pφ + ψt.
    """

    def __init__(self, p, t):
        self.p = p
        """Homotopy p."""
        self.t = t
        """Homotopy t."""

    def __repr__(self):
        return (f'{self.__class__.__name__}'
                f'(p={strings(self.p)}, t={strings(self.t)})')

    def document(self):
        """Returns both matrices as nested lists of strings."""
        return {'p': strings(self.p), 't': strings(self.t)}


class ModulePoint:
    """
    Module of a catalog together with its stable annihilator.

    This is a point of the finite topological space formed by a catalog.
    The annihilator is an ideal of S that contains the potential.
    """

    def __init__(self, label, mf, annihilator):
        self.label = label
        """Name of the module."""
        self.mf = mf
        """Matrix factorization presenting the module."""
        self.annihilator = annihilator
        """Stable annihilator, as an ideal containing f."""

    def __repr__(self):
        return (f"{self.__class__.__name__}"
                f"('{self.label}', annihilator={self.annihilator})")

    @property
    def ctx(self):
        """Hypersurface ring the module lives over."""
        return self.mf.ctx


def validate_mf(ctx, phi, psi, label=''):
    """
    Returns the matrix factorization (φ, ψ) of the potential of `ctx`.

    The matrices' entries may be polynomial expressions. Raises
    `ValueError` if the matrices are not square or of different sizes,
    and [`FactorizationError`](#FactorizationError) naming the first
    failing entry if φψ or ψφ differ from f·I.
    """
    return MatrixFactorization(ctx, phi, psi, label)


def free_mf(ctx, label='R'):
    """Returns the factorization (1, f), which presents the free module."""
    ring = ctx.ring
    return MatrixFactorization(ctx, [[ring.one]], [[ctx.potential]], label)


def direct_sum_mf(a, b, label=None):
    """Returns the block-diagonal factorization of the direct sum."""
    if a.ctx != b.ctx:
        error = 'Factorizations of different potentials cannot be summed.'
        log.error(error)
        raise ValueError(error)
    ring = a.ring
    phi = block_diagonal(a.phi, b.phi, ring)
    psi = block_diagonal(a.psi, b.psi, ring)
    if label is None:
        label = f'{a.label}+{b.label}'
    return MatrixFactorization(a.ctx, phi, psi, label)


def syzygy_mf(m):
    """Returns the factorization (ψ, φ), presenting the first syzygy."""
    return MatrixFactorization(m.ctx, m.psi, m.phi, f'syz({m.label})')


def knorrer_cover(m, name='z'):
    """
    Returns the factorization induced on the double branched cover.

    Over S[z] with potential f + z², the matrix [[z·I, φ], [ψ, -z·I]] is
    paired with itself. Raises `ValueError` if `name` is already a
    variable of the ring.
    """
    ring = extend_ring(m.ring, name)
    z = ring.gens[-1]
    n = m.size
    phi = matrix([[convert(e, ring) for e in row] for row in m.phi], ring)
    psi = matrix([[convert(e, ring) for e in row] for row in m.psi], ring)
    ctx = QuotientContext(ring, convert(m.potential, ring) + z**2)
    cover = block(identity(n, ring, z), phi, psi, identity(n, ring, -z), ring)
    return MatrixFactorization(ctx, cover, cover, f'{m.label}#')


########################################
# Homotopies                           #
########################################

@lru_cache(maxsize=64)
def homotopy_module(m):
    """
    Returns the image of the homotopy map H′ as a submodule of rank 2n².

    The first n² generators are the images of (p, t) = (E_kl, 0), the
    next n² those of (0, E_kl), with matrix units E_kl in row order.
    Results are cached per factorization, along with their module basis
    once computed.
    """
    n = m.size
    ring = m.ring
    units = [elementary(n, k, l, ring) for k in range(n) for l in range(n)]
    gens  = [flatten(m.phi @ E, E @ m.phi) for E in units]
    gens += [flatten(E @ m.psi, m.psi @ E) for E in units]
    return Submodule(2*n*n, gens)


def target(m, r):
    """Returns the flattened pair (r·I, r·I)."""
    scaled = identity(m.size, m.ring, r)
    return flatten(scaled, scaled)


def stable_annihilator(m):
    """
    Computes the stable annihilator of the module presented by `m`.

    Returns the ideal of all r ∈ S for which multiplication by r is
    nullhomotopic on the factorization, which always contains f.
    """
    t0 = now()
    ring = m.ring
    w = target(m, ring.one)
    gb = colon_into_ideal(homotopy_module(m), w)
    annihilator = normalize_mod_potential(Ideal(ring, gb.elements), m.ctx)
    log.debug(f'Stable annihilator of "{m.label}" is {annihilator}, '
              f'computed in {now()-t0:.3f} s.')
    return annihilator


def is_nullhomotopic(m, r, witness=False):
    """
    Tells whether multiplication by `r` is nullhomotopic on `m`.

    `r` is a polynomial of the factorization's ring, or an expression.
    If `witness` is set, returns the tuple `(nullhomotopic, witness)`
    where the witness is a [`HomotopyWitness`](#HomotopyWitness), or
    `None` if there is none.
    """
    ring = m.ring
    if isinstance(r, str):
        r = parse_polynomial(r, ring)
    if not isinstance(r, PolyElement) or r.ring != ring:
        error = f'{r!r} is not a polynomial of the factorization\'s ring.'
        log.error(error)
        raise ValueError(error)
    if not witness:
        return stable_annihilator(m).contains(r)
    coefficients = homotopy_module(m).lift(target(m, r))
    if coefficients is None:
        return (False, None)
    n = m.size
    p = unflatten(coefficients[:n*n], n, ring)
    t = unflatten(coefficients[n*n:], n, ring)
    return (True, HomotopyWitness(p, t))


def verify_homotopy(m, r, witness, both=True, modulo=False):
    """
    Checks a homotopy witness by matrix multiplication.

    Verifies r·I = φp + tψ and, if `both` is set, also r·I = pφ + ψt.
    The equations hold exactly over S unless `modulo` is set, in which
    case they need only hold modulo f, i.e. over R.
    """
    ring = m.ring
    if isinstance(r, str):
        r = parse_polynomial(r, ring)
    p = matrix(witness.p, ring)
    t = matrix(witness.t, ring)
    if p.shape != m.phi.shape or t.shape != m.phi.shape:
        error = f'Witness matrices must be {m.size}×{m.size}.'
        log.error(error)
        raise ValueError(error)
    expected = identity(m.size, ring, r)
    sides = [m.phi @ p + t @ m.psi]
    if both:
        sides.append(p @ m.phi + m.psi @ t)
    f = m.potential
    for side in sides:
        for entry in (side - expected).ravel():
            if modulo and not entry % f:
                continue
            if entry:
                return False
    return True


def annihilate(mfs, workers=None):
    """
    Computes the stable annihilators of several factorizations.

    Returns a [`ModulePoint`](#ModulePoint) for each factorization, in the
    given order. The computations run in separate processes if more than
    one worker is requested. The number of workers defaults to the
    configured value (see [`option()`](#option)).
    """
    mfs = list(mfs)
    if workers is None:
        workers = option('workers')
    if workers < 1:
        error = f'Number of workers must be positive, not {workers}.'
        log.error(error)
        raise ValueError(error)
    t0 = now()
    workers = min(workers, len(mfs))
    if workers > 1:
        log.info(f'Computing {len(mfs)} annihilators with {workers} workers.')
        with Pool(workers) as pool:
            ideals = pool.map(stable_annihilator, mfs)
    else:
        ideals = [stable_annihilator(mf) for mf in mfs]
    log.info(f'Computed {len(mfs)} annihilators in {now()-t0:.1f} s.')
    return [ModulePoint(mf.label, mf, ideal) for (mf, ideal) in zip(mfs, ideals)]
