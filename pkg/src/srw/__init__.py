"""Stanley-Reisner ideals, symbolic powers and exact Waldschmidt constants."""
from .complex_core import (SimplicialComplex, bipyramid_complex, bipyramidal_graph,
                           is_face, load_complex, minimal_nonfaces)
from .errors import ComplexFormatError, DomainError, ResourceError
from .monomial_algebra import (Monomial, MonomialIdeal, VariablePrime, contains_monomial,
                               divides, intersect, minimalize, monomial_in_power,
                               parse_ideal, parse_monomial, power, primary_decomposition,
                               stanley_reisner_ideal)
from .symbolic_powers import (AlphaCertificate, alpha, alpha_symbolic, big_height,
                              containment_check, symbolic_power, verify_els_hh)
from .waldschmidt import (CoverLP, LPSolution, closed_form_bipyramid,
                          closed_form_bipyramidal_graph, solve_lp, waldschmidt,
                          waldschmidt_sequence)

__version__ = "0.1.0"
