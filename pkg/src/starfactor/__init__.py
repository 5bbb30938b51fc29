"""Star-factors of tournaments: constructions, exact oracles, k-domination and
transitive partitions for small and desk-scale tournaments."""

from .canon import brute_force_code, canonical_code, canonical_form, is_isomorphic
from .domination import (
    DominationReport,
    avoidability_check,
    expected_undominated,
    find_k_dominated,
    is_k_dominated,
    search_k_dominated,
    threshold_n,
)
from .enumeration import ClassCatalog, enumerate_classes, raw_census, sweep
from .factor import (
    ProofInequalityError,
    StageFailure,
    Star,
    StarFactor,
    find_star_factor_constructive,
    find_star_partition,
    greedy_pack,
    has_star_factor_bruteforce,
    has_star_factor_exact,
    trace_constructive,
    verify_star_factor,
)
from .tournament import (
    ParseError,
    Tournament,
    TournamentError,
    add_sink,
    construct,
    cyclic_triple,
    parse,
    qr7,
    random_tournament,
    serialize,
    t6,
    t7,
    t8,
    transitive,
)
from .transitive import (
    TransitivePartition,
    find_transitive_exact,
    greedy_transitive,
    lonc_partition,
    verify_transitive_partition,
)

__version__ = "0.1.0"
