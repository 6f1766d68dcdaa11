# Measures Module
from .base import Measure, Valuation, eval_valuation
from .standard import (
    FiniteDiscreteMeasure, Lebesgue, UniformCantor, ProductMeasure, ConvexCombination, Pushforward,
    approximate_on_naturals,
)
from .prokhorov import prokhorov, prokhorov_exact, deficiency
from .continuity import (
    ContinuitySetName, CertifiedRadius, RadiusStream, Basis, ContinuityBasis, Decomposition,
    cset_measure, cset_algebra, continuity_radii, continuity_basis, dyadic_radii,
)
from .from_basis import BasisMeasure, measure_from_basis, values_of
from .spec import SpecDocument, build_measure, construction_space, load_spec, parse_document, validate_spec
