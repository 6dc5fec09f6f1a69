"""Finite decomposition semigroups: quasi-shuffle products, coproducts,
disjoint direct limits and group-layer peeling, with oracle checks."""
from .algebra import (Polynomial, TensorPolynomial, convolve, convolve_at, coproduct,
                      duality_check, poly_mul, scalar_product)
from .analytic import Estimate, chen_check, li, stuffle_check, zeta
from .checks import check_all
from .ddl import (DDLElement, DDLSystem, IndexSemilattice, ddl_decompose, ddl_mul,
                  fd_criterion_check, fig1_system, load_ddl, validate_system)
from .elements import Bicomposition, Composition, Monomial, MonomialWord, Word
from .errors import (DDLError, DivergentError, LemmaViolation, LetterDomainError,
                     NonEmptyTerminal, NonFiniteDecomposition, NotInCarrier,
                     SemigroupError)
from .quasi_shuffle import (DIAMOND, LDIAG, SHUFFLE, STUFFLE, diamond, ldiag_up,
                            quasi_shuffle, shuffle, stuffle)
from .report import Report
from .semigroup import (FiniteSemigroup, Semigroup, builtin, decompose, is_invertible,
                        load_table, mul, units, verify_decomposer)
from .structure import peel, rebuild_as_ddl, verify_structure_theorem

__version__ = "0.1.0"
