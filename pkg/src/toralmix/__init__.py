"""toralmix: resonance structure and mixing bounds of hyperbolic toral
automorphisms, computed through the induced action on cohomology, with exact
and Monte-Carlo correlation experiments and truncated transfer-operator
spectra to check the predictions."""

__version__ = "0.1.0"

from .bounds import (
    DegreeBoundRow,
    GapCertificate,
    ResonanceReport,
    degree_bounds,
    resonance_report,
    toral_gap_check,
)
from .cohomology import (
    CohomologyAction,
    eigen_match_distance,
    induced_action,
    jordan_structure,
    lefschetz_number,
    lefschetz_reference,
    spectrum_products_oracle,
)
from .core import (
    ToralAutomorphism,
    entropy,
    matrix_to_text,
    parse_matrix_text,
    random_hyperbolic,
    random_unimodular,
    validate_automorphism,
)
from .correlation import (
    CorrelationPoint,
    CorrelationSeries,
    FitResult,
    TrigObservable,
    correlate_exact,
    correlate_mc,
    default_noise_floor,
    envelope_prefactor,
    fit_rate,
    with_fit,
)
from .errors import (
    BoundViolated,
    CapExceeded,
    DegreeOutOfRange,
    IllConditioned,
    InsufficientData,
    NotHyperbolic,
    NotSquare,
    NotUnimodular,
    ToralmixError,
)
from .transfer import (
    OperatorTruncation,
    linear_torus_map,
    mode_cycles,
    perturbed_cat_map,
    pushforward_matrix,
    stochastic_spectrum,
    truncated_spectrum,
    ulam_discretize,
)

__all__ = [
    "__version__",
    "BoundViolated",
    "CapExceeded",
    "CohomologyAction",
    "CorrelationPoint",
    "CorrelationSeries",
    "DegreeBoundRow",
    "DegreeOutOfRange",
    "FitResult",
    "GapCertificate",
    "IllConditioned",
    "InsufficientData",
    "NotHyperbolic",
    "NotSquare",
    "NotUnimodular",
    "OperatorTruncation",
    "ResonanceReport",
    "ToralAutomorphism",
    "ToralmixError",
    "TrigObservable",
    "correlate_exact",
    "correlate_mc",
    "default_noise_floor",
    "degree_bounds",
    "eigen_match_distance",
    "entropy",
    "envelope_prefactor",
    "fit_rate",
    "induced_action",
    "jordan_structure",
    "lefschetz_number",
    "lefschetz_reference",
    "linear_torus_map",
    "matrix_to_text",
    "mode_cycles",
    "parse_matrix_text",
    "perturbed_cat_map",
    "pushforward_matrix",
    "random_hyperbolic",
    "random_unimodular",
    "resonance_report",
    "spectrum_products_oracle",
    "stochastic_spectrum",
    "toral_gap_check",
    "truncated_spectrum",
    "ulam_discretize",
    "validate_automorphism",
    "with_fit",
]
