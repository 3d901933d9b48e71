"""Suffix trees, the growth statistic, and exact string-counting experiments."""

from .counting import (
    DEFAULT_BUDGET,
    CountTable,
    EnumerationBudgetError,
    aperiodic_prime_power,
    count_aperiodic,
    count_aperiodic_bruteforce,
    count_with_growth,
    growth_bound,
    growth_bound_prefix_sum,
    growth_histogram,
)
from .experiments import (
    ExperimentConfig,
    expected_growth,
    expected_size,
    growth_count_table,
    new_rng,
    random_string,
    run_verification,
)
from .strings import (
    TERMINATOR,
    Alphabet,
    Str,
    from_text,
    is_aperiodic,
    make_string,
    minimal_period,
    substring,
    to_text,
)
from .trees import (
    CompactSuffixTree,
    SuffixTree,
    build_compact_tree,
    build_suffix_tree,
    find_occurrences,
    growth_sum_identity,
    growth_via_lcp,
    growth_via_tree,
    scan_occurrences,
    stats_line,
    to_dot,
)

__all__ = [
    "DEFAULT_BUDGET",
    "TERMINATOR",
    "Alphabet",
    "CompactSuffixTree",
    "CountTable",
    "EnumerationBudgetError",
    "ExperimentConfig",
    "Str",
    "SuffixTree",
    "aperiodic_prime_power",
    "build_compact_tree",
    "build_suffix_tree",
    "count_aperiodic",
    "count_aperiodic_bruteforce",
    "count_with_growth",
    "expected_growth",
    "expected_size",
    "find_occurrences",
    "from_text",
    "growth_bound",
    "growth_bound_prefix_sum",
    "growth_count_table",
    "growth_histogram",
    "growth_sum_identity",
    "growth_via_lcp",
    "growth_via_tree",
    "is_aperiodic",
    "make_string",
    "minimal_period",
    "new_rng",
    "random_string",
    "run_verification",
    "scan_occurrences",
    "stats_line",
    "substring",
    "to_dot",
    "to_text",
]
