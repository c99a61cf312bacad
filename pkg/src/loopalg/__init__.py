"""Exact Pontrjagin-ring computations for loop spaces on complete flag manifolds.

The pipeline: a cohomology presentation by Weyl-invariant forms, its minimal
model, the homotopy Lie algebra read off the quadratic part of the
differential, and the enveloping-algebra presentation of the loop homology,
verified degreewise against independent dimension and Smith-normal-form
oracles over exact rationals and integers.
"""

from .catalog import (
    CatalogEntry,
    catalog_entry,
    expected_integral_presentation,
    expected_rational_presentation,
    splitting_series,
)
from .enveloping import (
    BudgetExceededError,
    FreeGradedAlgebra,
    GradedSmithReport,
    NcElement,
    PoincareSeries,
    RingPresentation,
    SmithEntry,
    graded_dimension,
    graded_dimensions,
    graded_smith,
    graded_smith_report,
    pbw_series,
    relation_string,
    series_equal,
    torsion_free_check,
    uea_presentation,
)
from .families import LieFamily
from .gca import Derivation, GcaElement, GradedAlgebra, gca_multiply, koszul_sign
from .homotopy_lie import (
    HomotopyLieAlgebra,
    LieBasisElement,
    brackets_from_d1,
    dual_basis,
    graded_lie_axioms_check,
    pairing,
)
from .minimal_model import (
    CohomologyPresentation,
    MinimalModel,
    build_minimal_model,
    derivation_square_check,
    quadratic_part,
    quotient_dimensions,
    regular_sequence_check,
)
from .pipeline import PipelineResult, pipeline_for, rational_pipeline
from .symmetric import (
    elementary_symmetric,
    invariant_polynomials,
    newton_sigma,
    recursion_p,
)

__version__ = "0.1.0"
