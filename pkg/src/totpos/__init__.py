"""Exact-arithmetic total positivity: tests, parametrizations, and moves.

The package computes with arbitrary-precision rationals throughout.  Its
pieces, bottom up:

* :mod:`totpos.exact` -- rational scalars and sparse Laurent polynomials;
* :mod:`totpos.matrices` -- exact matrices, minors, determinant identities,
  LDU decomposition;
* :mod:`totpos.words` -- elementary Jacobi matrices, words, factorization
  schemes, subtraction-free parameter transport under local moves;
* :mod:`totpos.networks` -- weighted planar networks, the path-sum weight
  matrix, and the vertex-disjoint path oracle behind its minors;
* :mod:`totpos.diagrams` -- double wiring diagrams, chamber minors, local
  moves, and the move graph of total positivity criteria;
* :mod:`totpos.positivity` -- positivity/nonnegativity tests (brute force
  and efficient), oscillation, double Bruhat cell type;
* :mod:`totpos.factorization` -- inverse problems and the twist map;
* :mod:`totpos.somos` -- Somos-5 sequences and the Laurent phenomenon;
* :mod:`totpos.cli` -- the ``totpos`` command.
"""

from .exact import (LaurentDivisionError, LaurentPoly, Scalar, as_scalar,
                    format_scalar, laurent_divide_exact,
                    laurent_has_nonnegative_coeffs, sign)
from .matrices import (Matrix, MinorSpec, SingularLeadingMinorError,
                       all_minor_specs, desnanot_residual, det,
                       initial_minor_spec, initial_minor_specs,
                       is_block_triangular, ldu_decompose, minor,
                       solid_minor_specs)
from .words import (Letter, Move, Permutation, Word, WordError, diag,
                    elementary_matrix, format_word, is_reduced_word,
                    is_reduced_word_for, local_move_transport, lower,
                    move_path, parse_word, permutation_of_word, product_map,
                    reduced_words, staircase_scheme, transport_params, upper,
                    validate_scheme)
from .networks import (NetworkError, PlanarNetwork, chip, chips_of_word,
                       concatenate, disjoint_path_minor, is_totally_connected,
                       standard_network, weight_matrix, weight_matrix_raw)
from .diagrams import (DiagramError, DiagramMove, DoubleWiringDiagram,
                       MoveGraph, bounded_chambers, chamber_minors,
                       enumerate_move_graph, local_moves, minimal_diagram,
                       unbounded_chambers)
from .positivity import (GuardExceeded, NotApplicableError, bruhat_type,
                         is_oscillatory, is_tnn_bruteforce, is_tp_bruteforce,
                         test_chamber_minors, test_fekete_solid,
                         test_initial_minors, test_tnn_efficient,
                         test_tp_given_tnn, tnn_efficient_specs)
from .factorization import (NotTotallyPositiveError, ReconstructionError,
                            factor_scheme, factor_staircase, initial_minors,
                            parameter_sum_formula,
                            reconstruct_from_initial_minors,
                            staircase_edge_for_minor, twist,
                            verify_twist_monomial)
from .somos import (SomosLaurentFalsification, SomosPivotError,
                    somos5_numeric, somos5_symbolic)

__version__ = "0.1.0"
