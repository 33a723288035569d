"""Permutation groups, sigma-partitions of primes and factorization checks."""
from .errors import (
    DegreeMismatch, GroupError, NotNormalError, NotSubgroupError, ParseError, PartitionError,
    ThresholdExceeded,
)
from .perm import Perm, compose, parse_perm, parse_perm_list
from .group import (
    Group, build_group, centralizer, conjugate, contains, core, direct_product, intersect,
    is_normal, is_subgroup, join, normal_closure,
)
from .lattice import (
    ChiefFactor, SubgroupLattice, centralizer_of_chief_factor, chief_series, enumerate_subgroups,
    minimal_normal_subgroups, normal_subgroups, quotient,
)
from .sigma import (
    O_pi, SigmaPartition, is_sigma_central, is_sigma_nilpotent, is_sigma_nilpotent_hall,
    is_sigma_primary, is_sigma_soluble, sigma_fitting, sigma_of, sigma_radical,
)
from .hall import complete_hall_sigma_set, hall_analysis, satisfies_D_class, sylow
from .factor import (
    Factorization, find_factorizations, find_triple_factorizations, is_factorization,
    product_hall_check,
)
from .theorems import (
    Verdict, check_example_a5, check_example_psl27, run_lemma_battery, verify_theorem1,
    verify_theorem2, verify_theorem3,
)
from .corpus import builtin_corpus, builtin_group, load_corpus
from .config import limits

__version__ = "0.1.0"
