"""Exact Gaussian expectations of unitary-invariant random-tensor observables.

Three independent computation routes over the same bubble observables:
direct Wick enumeration (oracle), angular integration via Weingarten
calculus plus Wishart moments (effective), and Monte Carlo sampling.
"""
from .algebra import (
    LaurentPoly,
    N,
    Partition,
    Permutation,
    RationalFunc,
    catalan,
    compose,
    cycle_type,
    partitions_of,
    symmetric_group,
)
from .bubbles import (
    Bubble,
    ChainDecomposition,
    ColorSplit,
    NotChainExpressible,
    bicolored_cycle_count,
    bubble_from_chains,
    chain_decomposition,
    chain_obstruction,
    necklace,
    validate,
)
from .effective import (
    PowerSumExpansion,
    ScalingDiagnostics,
    effective_observable,
    laguerre_reconstruct,
    scaling_diagnostics,
    wishart_moment_exact,
    wishart_moment_leading,
)
from .montecarlo import Estimate, SampleSpec, estimate_expectation, evaluate_bubble, sample_tensor
from .oracle import (
    BubbleTooLarge,
    ExpectationResult,
    dominant_contractions,
    expectation,
    gaussian_expectation,
    per_color_dimensions,
)
from .trees import CornerLabeledTree, catalan_product, enumerate_trees, tree_to_bubble
from .weingarten import (
    ConjugacyClassTable,
    conjugacy_classes,
    gram_matrix,
    weingarten_asymptotic,
    weingarten_exact,
    weingarten_table,
)

__version__ = "0.1.0"
