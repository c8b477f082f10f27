"""Bundles on P^1 over a finite field: points, fiber subspaces, and the h0 oracle."""

from .lattice import (
    CompositionWitness,
    LatticeData,
    QuasiParabolicData,
    elementary_transform_compose,
    hecke_transform,
)
from .oracle import (
    DEFAULT_CAP,
    Ladder,
    MultiplicityTable,
    modify,
    modify_ladder,
    modify_multi,
    multiplicity_table,
)
from .points import (
    ClosedPointP1,
    ResidueField,
    closed_points,
    first_point,
    necklace_count,
    point_by_index,
    point_from_string,
)
from .splitting import SplittingType
from .subspaces import FiberSubspace, iter_subspaces, subspace_by_index, subspace_count

__all__ = [
    "DEFAULT_CAP",
    "ClosedPointP1",
    "CompositionWitness",
    "FiberSubspace",
    "Ladder",
    "LatticeData",
    "MultiplicityTable",
    "QuasiParabolicData",
    "ResidueField",
    "SplittingType",
    "closed_points",
    "elementary_transform_compose",
    "first_point",
    "hecke_transform",
    "iter_subspaces",
    "modify",
    "modify_ladder",
    "modify_multi",
    "multiplicity_table",
    "necklace_count",
    "point_by_index",
    "point_from_string",
    "subspace_by_index",
    "subspace_count",
]
