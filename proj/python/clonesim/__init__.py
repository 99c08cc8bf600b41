"""Gaussian n->m coherent-state cloning: closed-form fidelities and Monte Carlo trajectories."""

from ._clonesim import (
    CloningConfig,
    CombineError,
    CombineResult,
    FidelityEstimate,
    GaussianClone,
    MomentEstimate,
    ParameterError,
    SweepRow,
    argmax_transmissivity_numeric,
    balanced_tree_combine,
    beam_splitter_apply,
    cascade_combine,
    clone_ensemble,
    clone_shot,
    coherent_overlap_fidelity,
    displace,
    estimate_clone_moments,
    estimate_fidelity,
    fidelity_general,
    fidelity_max,
    fidelity_optimal,
    fidelity_universal,
    gaussian_clone_fidelity,
    make_config,
    multi_splitter_apply,
    optimal_transmissivity,
    outcome_density,
    run_cli,
    sweep_fig4,
    universal_gain,
)

__version__ = "1.0.0"
