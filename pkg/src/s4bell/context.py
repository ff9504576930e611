"""One-stop construction of the standard S4 machinery."""

from dataclasses import dataclass
from functools import lru_cache

from .orbit import Orbit, canonical_orbit
from .permgroup import GroupTable, symmetric_group
from .representation import (
    IsotypicDecomposition,
    Representation,
    build_standard_rep,
    isotypic_projectors,
    tensor_product,
)

__all__ = ["Context", "standard_context"]


@dataclass(frozen=True)
class Context:
    """Group, standard representation, tensor square, projectors, orbit."""

    group: GroupTable
    rep: Representation
    product: Representation
    decomposition: IsotypicDecomposition
    orbit: Orbit


@lru_cache(maxsize=1)
def standard_context() -> Context:
    """Build (once) everything derived from the bundled S4 data."""
    group = symmetric_group(4)
    rep = build_standard_rep(group)
    product = tensor_product(rep, rep)
    decomposition = isotypic_projectors(product, rep)
    orbit = canonical_orbit(rep)
    return Context(group, rep, product, decomposition, orbit)
