"""Exact workbench for braided binomial relation systems."""

from qgkit._core import (
    ConfigError,
    InputError,
    MathError,
    ResourceError,
    check_bialgebra,
    check_dependency,
    check_hecke,
    check_ybe,
    default_nu,
    member,
    normal_form_str,
    oscillator_comodule,
    oscillator_constraints,
    oscillator_sl2,
    relations,
    scan_nu,
    serre,
    solve_omega,
    verify_dj_image,
    __version__,
)

__all__ = [
    "ConfigError",
    "InputError",
    "MathError",
    "ResourceError",
    "check_bialgebra",
    "check_dependency",
    "check_hecke",
    "check_ybe",
    "default_nu",
    "member",
    "normal_form_str",
    "oscillator_comodule",
    "oscillator_constraints",
    "oscillator_sl2",
    "relations",
    "scan_nu",
    "serre",
    "solve_omega",
    "verify_dj_image",
    "__version__",
]
