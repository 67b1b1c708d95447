"""Eigenvalue solver for -u'' = lambda*u on (-1, 1) under multi-point boundary conditions."""

from ._mpsl import (
    AdmissibilityReport,
    BoundaryPoint,
    DomainError,
    Eigenpair,
    EndpointCondition,
    GammaGradient,
    OracleRoot,
    OscSign,
    OscillationClass,
    PhaseSolution,
    ProblemSpec,
    SeparatedEigen,
    Side,
    SideReport,
    SolverError,
    StructuralError,
    apply_inverse_grid,
    classify,
    classify_oscillation,
    continue_eigenpair,
    count_interior_zeros,
    demo_counterexample,
    demo_missing_eigenvalues,
    eigen_residual,
    eval_w,
    gamma_endpoint,
    load_problem_file,
    missing_eigenvalue_problem,
    oracle_spectrum,
    problem_from_json,
    problem_to_json,
    rescale,
    run_cli,
    run_property_suite,
    separated_eigen,
    solve_spectrum,
    sup_norm_w,
    target_angles,
    transversality_check,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
