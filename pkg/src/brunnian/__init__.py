"""Exact computations in the graded Lie algebra of the pure braid group."""

from .free_lie import (
    Alphabet,
    LieElement,
    bracket,
    from_associative,
    is_lyndon,
    lyndon_words,
    monomial_text,
    parse_monomial,
    standard_bracketing,
    to_associative,
)
from .generators import kset, kset_counts, lemma4_generators, prop5_generators, prop6_generators
from .ideals import fat_bracket_sum, ideal_of_letter, symmetric_bracket_sum
from .kohno import BraidGenerator, LayeredElement, coface, face, inject, lp_bracket
from .linalg import IntegerLattice, IntMatrix, hnf, kernel_lattice, rank_rational
from .ranks import rank_brunnian, rank_pure, rank_table, witt_inversion, witt_rank
from .verify import (
    check_bidelta,
    check_decomposition,
    check_prop3_prop5_prop6,
    check_symmetric_sum,
    check_theorem8,
    degree_basis,
    face_matrix,
    kernel_intersection,
    subalgebra_span,
)

__version__ = "0.1.0"
