"""Exact Green's functions, height jumps and alignment on labelled dual graphs."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .graph import (  # noqa: F401
    BlockDecomposition,
    ContractionResult,
    EnumerationBounds,
    MultiGraph,
    biconnected_blocks,
    connected_components,
    contract,
    cycles,
    resistance_oracle,
)
from .green import (  # noqa: F401
    CombinatorialDivisor,
    effective_resistance,
    green,
    green_block_additive,
    green_detailed,
)
from .jump import (  # noqa: F401
    JumpResult,
    SectionDivisor,
    check_psd,
    height_jump,
    jump_gram,
    sweep,
    to_combinatorial,
)
from .labels import (  # noqa: F401
    BoundaryBasis,
    Label,
    LabelledGraph,
    OrderVector,
    is_aligned,
    is_aligned_bruteforce,
    pullback_orders,
    restrict,
    specialize,
)
from .ratlin import RatMatrix, laplacian, laplacian_pseudoinverse, solve_linear  # noqa: F401
