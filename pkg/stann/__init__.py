# The imports here define the public interface of the package.
from .meta     import version as __version__
from .meta     import synopsis as __doc__
from .         import config
from .config   import option
from .arith    import polynomial_ring
from .arith    import parse_polynomial
from .arith    import format_polynomial
from .arith    import poly_add
from .arith    import poly_mul
from .arith    import poly_reduce
from .arith    import ParseError
from .groebner import GroebnerBasis
from .groebner import groebner_basis
from .groebner import normal_form
from .groebner import FreeModuleElement
from .groebner import Submodule
from .groebner import module_groebner_basis
from .groebner import colon_into_ideal
from .groebner import eliminate
from .ideals   import Ideal
from .ideals   import QuotientContext
from .ideals   import ideal_combine
from .ideals   import ideal_intersection
from .ideals   import ideal_contains
from .ideals   import ideal_equal
from .ideals   import normalize_mod_potential
from .ideals   import jacobian_ideal
from .matfac   import MatrixFactorization
from .matfac   import FactorizationError
from .matfac   import HomotopyWitness
from .matfac   import ModulePoint
from .matfac   import validate_mf
from .matfac   import free_mf
from .matfac   import direct_sum_mf
from .matfac   import syzygy_mf
from .matfac   import knorrer_cover
from .matfac   import is_nullhomotopic
from .matfac   import verify_homotopy
from .matfac   import stable_annihilator
from .matfac   import annihilate
from .spaces   import FiniteAlexandrovSpace
from .spaces   import ClosedSetLattice
from .spaces   import KolmogorovPoset
from .spaces   import build_space
from .spaces   import closure_of
from .spaces   import enumerate_closed_sets
from .spaces   import kolmogorov_poset
from .spaces   import hasse_edges
from .spaces   import is_compact
from .spaces   import direct_sum_realization
from .spaces   import cl_n_of
from .spaces   import cln_closed_sets
from .spaces   import cl_n_report
from .spaces   import find_cln_transitivity_failures
from .spaces   import is_cln_compact
from .spaces   import cln_compactness_exponent
from .spaces   import isomorphism
from .spaces   import to_dot
from .catalog  import CatalogSpec
from .catalog  import catalog_a_zero
from .catalog  import catalog_a_curve
from .catalog  import catalog_d_odd
from .catalog  import catalog_e
from .catalog  import load_catalog
from .catalog  import parse_document
from .cli      import run_command
from .cli      import load_document
from .cli      import dump_document
