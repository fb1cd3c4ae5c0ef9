"""tilekit: finite quotient tile graphs and exact combinatorial searches.

The library builds labeled rectangular grid graphs and their label/offset
quotients (the twelve-tile graphs, their one-dimensional analogues, and
tori), decides colorings, homomorphisms, matchings, subshift-respect maps
and rectangle tilings on them with independently verifiable certificates,
and implements the one-dimensional subshift decision procedure together
with the homotopy-based positive/negative conditions for undirected graph
homomorphism targets.
"""

from tilekit.grids import (
    BlockLabel,
    LabeledGridGraph,
    QuotientGraph,
    TileFamilyParams,
    make_gamma,
    make_gamma1,
    make_grid,
    make_tile_grid,
    make_torus,
    quotient,
)
from tilekit.sft import Pattern, SftSpec, SymbolMap, pattern_occurs, respects, respects_1d

__all__ = [
    "BlockLabel",
    "LabeledGridGraph",
    "QuotientGraph",
    "TileFamilyParams",
    "make_gamma",
    "make_gamma1",
    "make_grid",
    "make_tile_grid",
    "make_torus",
    "quotient",
    "Pattern",
    "SftSpec",
    "SymbolMap",
    "pattern_occurs",
    "respects",
    "respects_1d",
]

__version__ = "0.1.0"
