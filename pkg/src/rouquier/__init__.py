"""Rouquier blocks of cyclotomic Hecke algebras from essential Schur elements."""
from .blockengine import (
    Partition,
    all_blocks,
    blocks_no_hyperplane,
    blocks_on_hyperplane,
    essential_hyperplanes,
    find_spec_vectors,
    join,
    meet,
    rouquier_blocks,
)
from .grouprepo import GroupData, load_group

__all__ = [
    "Partition",
    "GroupData",
    "load_group",
    "all_blocks",
    "blocks_no_hyperplane",
    "blocks_on_hyperplane",
    "essential_hyperplanes",
    "find_spec_vectors",
    "join",
    "meet",
    "rouquier_blocks",
]
__version__ = "0.1.0"
