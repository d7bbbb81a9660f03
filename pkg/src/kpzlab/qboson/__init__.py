"""Exact machinery for the colored q-Boson vertex model.

Weights are evaluated in whatever arithmetic the parameters carry: pass
``fractions.Fraction`` values for exact identity checks, floats for speed.
"""

from .weights import (  # noqa: F401
    vertex_weight,
    crossing_weight,
    yang_baxter_sides,
    yang_baxter_check,
    color_merge_residual,
    color_merge_check_exhaustive,
    merge_map_validate,
    merged_stack,
)
from .transfer import TransferModel, QBosonConfig, normalization_constant  # noqa: F401
from .ensembles import LineEnsemble, line_ensemble, frozen_word  # noqa: F401
from .greedy import (  # noqa: F401
    height_above,
    compatible,
    valid_release_words,
    vertical_counts,
    greedy_release_word,
    pitman_error,
    column_weight,
)
from .gibbs import (  # noqa: F401
    weight_factor,
    bernoulli_bridges,
    bridge_law,
    bridge_gibbs_resample,
    colored_release_law,
    colored_gibbs_resample,
)
