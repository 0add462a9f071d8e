"""Eliminate variables and solve sparse polynomial systems by exploiting
chordal graph structure."""

from .arith import PrimeField, QQ, Rationals, parse_field
from .chordal import (ChordalContext, Graph, complete_with_order,
                      elimination_tree, graph_of_system, heuristic_order,
                      is_lower_set, is_perfect_elimination_ordering, mcs)
from .cliques import (CliqueIdeals, cliques_elim, concat_clique_gbs,
                      degree_set, enumerate_clique_varieties,
                      lower_set_ideal, merge_solutions, shape_position_check)
from .elim import (EliminationStep, EliminationTrace, certify_success,
                   chordal_eliminate, check_q_dominated, eliminate_step,
                   outer_bound_W, split_generators)
from .groebner import (buchberger, elimination_ideal, ideal_intersection,
                       is_groebner_basis, is_trivial_ideal,
                       is_zero_dimensional, standard_monomial_count)
from .poly import (DEGREVLEX, LEX, Polynomial, Ring, compare_monomials,
                   format_polynomial, is_dominated, is_simplicial,
                   normal_form, parse_polynomial, s_polynomial, support_vars)
from .systems import (field_equations, format_system, gen_colorings,
                      gen_diffeq, gen_subset_sum, parse_system)

__version__ = "0.1.0"
