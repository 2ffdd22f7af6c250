"""Path homology of digraphs and regular path complexes.

Thin Python surface over the C++ core. Every entry point takes input as text
in one of the formats documented in docs/formats.md:

- digraph text (``v <label>`` / ``e <from> <to>`` lines),
- path-complex JSON (``{"vertices": [...], "paths": {...}}``),
- simplicial JSON (``{"facets": [[...], ...]}``).

Rings are named by strings: ``"Z"``, ``"Q"``, or ``"Zp:<prime>"``.
"""

from _pathhom import (
    BudgetError,
    InternalError,
    InvalidInputError,
    ParseError,
    UnsupportedRingError,
    check_hochschild,
    check_kunneth,
    check_realization,
    cohomology,
    cubical,
    hochschild,
    homology,
    join,
    product,
    realize,
)

__all__ = [
    "BudgetError",
    "InternalError",
    "InvalidInputError",
    "ParseError",
    "UnsupportedRingError",
    "check_hochschild",
    "check_kunneth",
    "check_realization",
    "cohomology",
    "cubical",
    "hochschild",
    "homology",
    "join",
    "product",
    "realize",
]

__version__ = "1.0.0"
