"""Domination of hypercubes Q_n: excess and surfeit analysis, congruence and
lemma checkers, lower bounds, constructions and an exact small-n solver."""

from .bounds import bound_table, sphere_covering_bound, theorem2_bound, vanwee_bound
from .congruence import NotApplicableError, check_congruences, check_mod3, check_parity
from .constructions import double, greedy_dominating_set, hamming_perfect_code
from .cube import (
    Vertex,
    VertexSet,
    closed_neighborhood,
    closed_neighborhood_of_set,
    coord_union,
    distance_to_set,
    filter_by_coord,
    hamming_distance,
    sphere,
)
from .domination import (
    DominatingSet,
    ExcessProfile,
    NotDominatingError,
    c_set,
    excess_of_set,
    excess_of_vertex,
    excess_profile,
    is_dominating,
)
from .solver import SearchConfig, SearchResult, naive_min_dominating, solve_min_dominating
from .surfeit import (
    SurfeitProfile,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_lemmas,
    surfeit_of_set,
    surfeit_profile,
    surfeit_report,
    t_partition,
    zeta_m1,
    zeta_m2,
    zeta_max,
)

__version__ = "0.1.0"
