"""
Finite Alexandrov spaces of modules.

The points are the modules of a catalog, preordered by their stable
annihilators: N ≤ M if and only if ann N ⊆ ann M. The closure of a point
M is the down-set {N : N ≤ M}, and the closed sets of the Alexandrov
topology are exactly the down-sets. Points with equal annihilators are
topologically indistinguishable, and identifying them yields the
Kolmogorov quotient, a finite partially ordered set.

The weaker operators cl_n(M) = {L : (ann L)^n ⊆ ann M} generate further
topologies. For n ≥ 2 the relation "L ∈ cl_n(M)" is not transitive in
general, which [`find_cln_transitivity_failures()`](#find_cln_transitivity_failures)
makes explicit.

Point subsets are frozen sets of point indices. Closed-set families are
sorted by size, then by the sorted labels of their members, so that node
numbers in Hasse diagrams are deterministic.
"""

########################################
# Components                           #
########################################
from .config import option                      # configuration
from .ideals import ideal_contains              # ideal containment
from .ideals import ideal_intersection          # ideal intersection
from .ideals import ideal_combine               # ideal power
from .matfac import direct_sum_mf               # direct sum of modules

########################################
# Dependencies                         #
########################################
from numpy import zeros, array_equal            # boolean matrices
from networkx import DiGraph                    # directed graph
from networkx import strongly_connected_components
from networkx import transitive_reduction       # covering relations
from networkx.algorithms.isomorphism import DiGraphMatcher
from graphviz import Digraph                    # DOT source
from functools import reduce                    # fold
from functools import lru_cache                 # memoization
from numbers import Integral                    # integer types
from time import perf_counter as now            # wall-clock time
from logging import getLogger                   # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                    # event log


########################################
# Space                                #
########################################

class FiniteAlexandrovSpace:
    """
    Finite set of module points, preordered by their stable annihilators.

    `leq[i, j]` is true if and only if the annihilator of point `i` is
    contained in that of point `j`, i.e. point `i` lies in the closure
    of point `j`. Use [`build_space()`](#build_space) to create spaces.
    """

    def __init__(self, points, leq):
        self.points = tuple(points)
        """Module points, in catalog order."""
        self.leq = leq
        """Boolean matrix of the preorder."""

    def __repr__(self):
        return f'{self.__class__.__name__}({", ".join(self.labels)})'

    def __len__(self):
        return len(self.points)

    @property
    def labels(self):
        """Labels of the points."""
        return [point.label for point in self.points]

    def index(self, label):
        """Returns the index of the point with the given `label`."""
        for (i, point) in enumerate(self.points):
            if point.label == label:
                return i
        error = f'No point labeled "{label}".'
        log.error(error)
        raise LookupError(error)

    def check(self, index):
        """Raises `IndexError` unless `index` refers to a point."""
        if isinstance(index, bool) or not isinstance(index, Integral):
            error = f'Point index must be an integer, not {index!r}.'
            log.error(error)
            raise TypeError(error)
        if not 0 <= index < len(self.points):
            error = f'Point index {index} out of range.'
            log.error(error)
            raise IndexError(error)

    def names(self, subset):
        """Returns the labels of a subset of points, in catalog order."""
        return [self.points[i].label for i in sorted(subset)]

    def annihilator(self, index):
        """Returns the stable annihilator of the indexed point."""
        return self.points[index].annihilator

    def power(self, index, n):
        """Returns the `n`-th power of the annihilator of a point."""
        return ideal_power(self.annihilator(index), n)


@lru_cache(maxsize=1024)
def ideal_power(ideal, n):
    """
    Returns the `n`-th power of an ideal.

    Results are memoized per ideal and exponent, outside of any space, so
    that spaces stay unchanged after construction.
    """
    return ideal_combine('power', ideal, n=n)


def build_space(points):
    """
    Builds the finite space of the given module points.

    Labels must be unique and all points must live over the same
    hypersurface ring. The preorder is computed by pairwise containment
    of annihilators.
    """
    points = list(points)
    labels = [point.label for point in points]
    for label in labels:
        if labels.count(label) > 1:
            error = f'Duplicate point label "{label}".'
            log.error(error)
            raise ValueError(error)
    if len({point.ctx for point in points}) > 1:
        error = 'Points belong to different hypersurface rings.'
        log.error(error)
        raise ValueError(error)
    t0 = now()
    k = len(points)
    leq = zeros((k, k), dtype=bool)
    for (i, a) in enumerate(points):
        for (j, b) in enumerate(points):
            leq[i, j] = (i == j) or ideal_contains(b.annihilator, a.annihilator)
    if not leq.diagonal().all():
        error = 'Preorder is not reflexive.'
        log.error(error)
        raise RuntimeError(error)
    composed = (leq.astype(int) @ leq.astype(int)) > 0
    if not array_equal(composed | leq, leq):
        error = 'Preorder is not transitive.'
        log.error(error)
        raise RuntimeError(error)
    leq.flags.writeable = False
    log.debug(f'Built space of {k} points in {now()-t0:.3f} s.')
    return FiniteAlexandrovSpace(points, leq)


def closure_of(space, subset):
    """Returns the closure of a set of point indices, the union of down-sets."""
    subset = list(subset)
    for index in subset:
        space.check(index)
    if not subset:
        return frozenset()
    below = space.leq[:, subset].any(axis=1)
    return frozenset(int(i) for i in below.nonzero()[0])


########################################
# Closed sets                          #
########################################

class ClosedSetLattice:
    """
    Family of closed subsets of a finite space, ordered by inclusion.

    `sets` are frozen sets of point indices, sorted by size and then by
    the members' sorted labels. `edges` are the covering relations of the
    inclusion order, as pairs of positions in `sets`.
    """

    def __init__(self, space, sets):
        self.space = space
        """Underlying space."""

        def key(subset):
            return (len(subset), sorted(space.names(subset)))
        self.sets = sorted(set(sets), key=key)
        """Closed sets, in canonical order."""
        self.edges = hasse_edges(self)
        """Covering relations."""

    def __repr__(self):
        return f'{self.__class__.__name__}({len(self.sets)} sets)'

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, subset):
        return frozenset(subset) in self.sets

    def graph(self):
        """Returns the strict inclusion order as a directed graph."""
        graph = DiGraph()
        graph.add_nodes_from(range(len(self.sets)))
        for (i, a) in enumerate(self.sets):
            for (j, b) in enumerate(self.sets):
                if a < b:
                    graph.add_edge(i, j)
        return graph

    def node_labels(self):
        """Returns the member labels of each set, as display strings."""
        return ['{' + ', '.join(self.space.names(s)) + '}' if s else '∅'
                for s in self.sets]

    def named(self):
        """Returns the closed sets as lists of labels."""
        return [self.space.names(s) for s in self.sets]


def check_bound(space):
    """Raises `RuntimeError` if the space exceeds the configured size bound."""
    bound = option('bound')
    if len(space) > bound:
        error = (f'Space of {len(space)} points exceeds the bound of '
                 f'{bound} points for closed-set enumeration.')
        log.error(error)
        raise RuntimeError(error)


def enumerate_closed_sets(space):
    """
    Returns all closed sets of the Alexandrov topology.

    They are the unions of point closures, found by breadth-first search
    starting from the empty set.
    """
    check_bound(space)
    t0 = now()
    closures = {closure_of(space, [i]) for i in range(len(space))}
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        successors = []
        for subset in frontier:
            for closure in closures:
                union = subset | closure
                if union not in found:
                    found.add(union)
                    successors.append(union)
        frontier = successors
    log.debug(f'Enumerated {len(found)} closed sets in {now()-t0:.3f} s.')
    return ClosedSetLattice(space, found)


########################################
# Kolmogorov quotient                  #
########################################

class KolmogorovPoset:
    """
    Kolmogorov quotient of a finite space, a partially ordered set.

    `classes` are tuples of indices of indistinguishable points, i.e.
    points with equal annihilators, sorted by their first member. Class
    `a` lies below class `b` if the annihilators of `a` are contained in
    those of `b`.
    """

    def __init__(self, space, classes):
        self.space = space
        """Underlying space."""
        self.classes = classes
        """Classes of point indices."""
        self.edges = hasse_edges(self)
        """Covering relations, as pairs of class positions."""

    def __repr__(self):
        return f'{self.__class__.__name__}({len(self.classes)} classes)'

    def __len__(self):
        return len(self.classes)

    def less(self, a, b):
        """Tells whether class `a` lies strictly below class `b`."""
        if a == b:
            return False
        return bool(self.space.leq[self.classes[a][0], self.classes[b][0]])

    def ideal(self, a):
        """Returns the common annihilator of the points in class `a`."""
        return self.space.annihilator(self.classes[a][0])

    def class_of(self, index):
        """Returns the position of the class containing the indexed point."""
        self.space.check(index)
        for (a, members) in enumerate(self.classes):
            if index in members:
                return a

    def graph(self):
        """Returns the strict order as a directed graph."""
        graph = DiGraph()
        graph.add_nodes_from(range(len(self.classes)))
        for a in range(len(self.classes)):
            for b in range(len(self.classes)):
                if self.less(a, b):
                    graph.add_edge(a, b)
        return graph

    def node_labels(self):
        """Returns the canonical annihilator string of each class."""
        return [str(self.ideal(a)) for a in range(len(self.classes))]

    def is_chain(self):
        """Tells whether the classes are totally ordered."""
        k = len(self.classes)
        return all(self.less(a, b) or self.less(b, a)
                   for a in range(k) for b in range(a+1, k))


def kolmogorov_poset(space):
    """Returns the Kolmogorov quotient of a finite space."""
    graph = DiGraph()
    graph.add_nodes_from(range(len(space)))
    for (i, j) in zip(*space.leq.nonzero()):
        if i != j:
            graph.add_edge(int(i), int(j))
    classes = sorted((tuple(sorted(c)) for c in
                      strongly_connected_components(graph)),
                     key=lambda c: c[0])
    poset = KolmogorovPoset(space, classes)
    for a in range(len(classes)):
        for b in range(len(classes)):
            if poset.less(a, b) and poset.less(b, a):
                error = 'Kolmogorov quotient is not antisymmetric.'
                log.error(error)
                raise RuntimeError(error)
    return poset


def hasse_edges(order):
    """
    Returns the covering relations of a closed-set lattice or poset.

    Edges are pairs `(a, b)` of node positions with `a` strictly below `b`
    and nothing in between, sorted.
    """
    reduced = transitive_reduction(order.graph())
    return sorted(reduced.edges())


def isomorphism(a, b):
    """
    Finds an order isomorphism between two posets or lattices.

    Returns a dictionary mapping node positions of `a` to those of `b`,
    or `None` if the orders are not isomorphic.
    """
    matcher = DiGraphMatcher(a.graph(), b.graph())
    if not matcher.is_isomorphic():
        return None
    return dict(sorted(matcher.mapping.items()))


def to_dot(order, name='hasse'):
    """
    Returns the Hasse diagram of a lattice or poset as DOT source.

    Nodes are numbered by position and labeled with the member labels of
    a closed set, or with the annihilator of a Kolmogorov class. Smaller
    elements are drawn at the bottom.
    """
    graph = Digraph(name=name)
    graph.attr(rankdir='BT')
    for (i, label) in enumerate(order.node_labels()):
        graph.node(str(i + 1), label=label)
    for (a, b) in order.edges:
        graph.edge(str(a + 1), str(b + 1))
    return graph.source


########################################
# Compactness                          #
########################################

def minimum_ideal(space):
    """Returns the intersection of all annihilators."""
    if not len(space):
        error = 'The empty space has no minimum ideal.'
        log.error(error)
        raise ValueError(error)
    return reduce(ideal_intersection,
                  (point.annihilator for point in space.points))


def is_compact(space):
    """
    Checks the compactness criterion on the given points.

    The space is compact if some single module has the intersection of
    all annihilators as its annihilator. Returns the tuple
    `(compact, witness, minimum)`, where `witness` is the index of the
    last such point, or `None`, and `minimum` is the intersection. A
    finite catalog always meets the criterion through a direct sum, see
    [`direct_sum_realization()`](#direct_sum_realization), even if no
    given point does.
    """
    minimum = minimum_ideal(space)
    witness = None
    for (i, point) in enumerate(space.points):
        if point.annihilator == minimum:
            witness = i
    return (witness is not None, witness, minimum)


def direct_sum_realization(space):
    """
    Returns a direct sum whose annihilator is the minimum ideal.

    One representative is taken from each minimal Kolmogorov class, and
    the tuple `(indices, factorization)` is returned.
    """
    poset = kolmogorov_poset(space)
    minimal = [a for a in range(len(poset))
               if not any(poset.less(b, a) for b in range(len(poset)))]
    indices = [poset.classes[a][0] for a in minimal]
    mfs = [space.points[i].mf for i in indices]
    mf = reduce(direct_sum_mf, mfs)
    return (indices, mf)


########################################
# cl_n operators                       #
########################################

def check_exponent(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        error = f'Exponent must be a positive integer, not {n!r}.'
        log.error(error)
        raise ValueError(error)


def cl_n_of(space, point, n):
    """Returns cl_n of a point, all L with (ann L)^n ⊆ ann of the point."""
    check_exponent(n)
    space.check(point)
    target = space.annihilator(point)
    return frozenset(i for i in range(len(space))
                     if ideal_contains(target, space.power(i, n)))


def cln_closed_sets(space, n):
    """
    Returns the closed sets of the topology generated by the sets cl_n.

    The family is the smallest one containing every cl_n(M), the empty
    set, and all points, closed under union and intersection.
    """
    check_exponent(n)
    check_bound(space)
    t0 = now()
    family = {frozenset(), frozenset(range(len(space)))}
    family |= {cl_n_of(space, i, n) for i in range(len(space))}
    while True:
        members = list(family)
        grown = {a | b for a in members for b in members}
        grown |= {a & b for a in members for b in members}
        if grown <= family:
            break
        family |= grown
    log.debug(f'Generated {len(family)} cl_{n} closed sets '
              f'in {now()-t0:.3f} s.')
    return ClosedSetLattice(space, family)


def cl_n_report(space, point, n, lattice=None):
    """
    Returns cl_n of a point alongside the smallest closed set holding it.

    The latter is the smallest member of the family returned by
    [`cln_closed_sets()`](#cln_closed_sets) that contains the point. The
    two need not coincide. The family is computed unless passed in as
    `lattice`.
    """
    cl = cl_n_of(space, point, n)
    if lattice is None:
        lattice = cln_closed_sets(space, n)
    holding = [s for s in lattice if point in s]
    return (cl, reduce(frozenset.intersection, holding))


def find_cln_transitivity_failures(space, n):
    """
    Finds all triples (N, M, L) with M ∈ cl_n(N), L ∈ cl_n(M), L ∉ cl_n(N).

    Returns a sorted list of triples of point indices. The list is empty
    if and only if the relation "L ∈ cl_n(M)" is transitive.
    """
    check_exponent(n)
    cl = [cl_n_of(space, i, n) for i in range(len(space))]
    failures = []
    for N in range(len(space)):
        for M in cl[N]:
            for L in cl[M]:
                if L not in cl[N]:
                    failures.append((N, M, L))
    return sorted(failures)


def is_cln_compact(space, n):
    """
    Checks the cl_n compactness criterion on the given points.

    Looks for a point X with (ann X)^n contained in the intersection of
    all annihilators. Returns `(found, witness, minimum)` like
    [`is_compact()`](#is_compact).
    """
    check_exponent(n)
    minimum = minimum_ideal(space)
    witness = None
    for i in range(len(space)):
        if ideal_contains(minimum, space.power(i, n)):
            witness = i
    return (witness is not None, witness, minimum)


def cln_compactness_exponent(space, limit=None):
    """
    Returns the smallest exponent for which the cl_n criterion is met.

    Exponents up to `limit` are tried, by default the configured power
    limit (see [`option()`](#option)). Returns the tuple `(n, witness)`,
    or `(None, None)` if no exponent in range works.
    """
    if limit is None:
        limit = option('power_limit')
    for n in range(1, limit + 1):
        (found, witness, _) = is_cln_compact(space, n)
        if found:
            return (n, witness)
    return (None, None)
