"""C operator of PT-symmetric cubic and quartic oscillators."""

import json

from ._ptc import (
    SolverError,
    SpecialFunctionError,
    __version__,
    c_kernel_text,
    c_second_solution,
    cpt_norm,
    eigenfunction,
    eigenpair,
    greens,
    nonpert_c_integral,
    nonpert_c_sum,
    parabolic_d_half,
    perturbative_energy,
    verify_json,
)


def verify(profile="quick", seed=42, mutate=False):
    """Run the verification suites and return the report as a dict."""
    return json.loads(verify_json(profile, seed, mutate))


__all__ = [
    "SolverError",
    "SpecialFunctionError",
    "__version__",
    "c_kernel_text",
    "c_second_solution",
    "cpt_norm",
    "eigenfunction",
    "eigenpair",
    "greens",
    "nonpert_c_integral",
    "nonpert_c_sum",
    "parabolic_d_half",
    "perturbative_energy",
    "verify",
]
