"""The full rational pipeline for one catalog entry.

cohomology presentation -> minimal model -> quadratic part -> homotopy Lie
algebra -> enveloping presentation.  The regular-sequence precondition is
checked by default except for the two families whose commutative quotient
is expensive (their verification is flag-gated at the command line).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import SLOW_COHOMOLOGY_FAMILIES, CatalogEntry, catalog_entry
from .enveloping import RingPresentation, uea_presentation
from .families import LieFamily
from .homotopy_lie import HomotopyLieAlgebra, brackets_from_d1
from .minimal_model import MinimalModel, build_minimal_model


@dataclass(frozen=True)
class PipelineResult:
    entry: CatalogEntry
    model: MinimalModel
    lie_algebra: HomotopyLieAlgebra
    presentation: RingPresentation


def rational_pipeline(
    entry: CatalogEntry, check_regular: bool | None = None
) -> PipelineResult:
    if check_regular is None:
        check_regular = entry.family not in SLOW_COHOMOLOGY_FAMILIES
    model = build_minimal_model(
        entry.cohomology, odd_names=list(entry.odd_names), check_regular=check_regular
    )
    lie = brackets_from_d1(model, entry.dual_names)
    return PipelineResult(
        entry=entry,
        model=model,
        lie_algebra=lie,
        presentation=uea_presentation(lie),
    )


@lru_cache(maxsize=None)
def pipeline_for(family: LieFamily, rank: int, check_regular: bool | None = None) -> PipelineResult:
    return rational_pipeline(catalog_entry(family, rank), check_regular)
