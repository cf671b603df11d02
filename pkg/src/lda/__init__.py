"""Linear difference algebra: involutive (Janet) bases for systems of linear
partial difference equations with rational-function coefficients, with
applications to difference-scheme generation and reduction of recurrence
families to master terms."""

from .difference import (DiffPoly, DiffTerm, Ranking, compare_terms,
                         linear_combine, proportional)
from .errors import (ArityError, CompletionLimitExceeded, DivisionByZero,
                     InconsistentSystem, InfiniteResidueBasis, LdaError,
                     LinearityError, NegativeShiftError, NoLeadingTerm,
                     ParityError, ParseError, UnknownSymbolError,
                     ValidationError)
from .factor import Factored, factor_output
from .janet import (MarkedBasis, MarkedElement, check_janet_basis,
                    find_j_divisor, groebner_normal_form, j_normal_form,
                    janet_basis, janet_partition, mark_basis,
                    reduced_groebner_basis)
from .oracle import ProlongationMatrix, default_bound, oracle_normal_form
from .parsing import (parse_boundary, parse_coefficient, parse_expression,
                      parse_linear_form, parse_target)
from .rational import (MultiPoly, RatFun, SymbolTable, poly_gcd,
                       poly_normalize, ratfun_binop)
from .reduction import (ReductionReport, VanishingPattern, apply_patterns,
                        reduce_to_masters, residue_class_basis)
from .schemes import (ConservationPDE, ContourSpec, DiscreteSystem, GridSpec,
                      IntegralRelation, QuadraturePlan,
                      build_integral_relations, derivative_closure, discretize,
                      elimination_ranking, generate_scheme)
from .systems import SchemeSpec, SystemSpec, load_scheme, load_system

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
