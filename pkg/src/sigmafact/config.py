from dataclasses import dataclass


@dataclass
class Limits:
    # all_elements / centralizer / intersect enumerate at most this many elements
    elements: int = 100_000
    # enumerate_subgroups refuses parents larger than this
    lattice: int = 400


limits = Limits()
