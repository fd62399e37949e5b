"""Kink-type traveling waves of strain-rate dependent viscoelastic laws.

Thin wrapper over the compiled ``_kinkwave`` extension. Models are named by
their catalog name (``"quadratic"``, ``"modelB"``, ...) with an optional dict
of parameter overrides.
"""

import json

from ._kinkwave import (
    KinkwaveError,
    catalog_names,
    equilibria,
    eval_g,
    eval_g_derivative,
    existence,
    h_function,
    model_parameters,
    parameter_names,
    printed_formula_audit,
    profile,
    wave_speed_squared,
)


def validate_catalog():
    """Runs every catalog check and returns the report as a dict."""
    from ._kinkwave import validate_catalog_json

    return json.loads(validate_catalog_json())


__all__ = [
    "KinkwaveError",
    "catalog_names",
    "equilibria",
    "eval_g",
    "eval_g_derivative",
    "existence",
    "h_function",
    "model_parameters",
    "parameter_names",
    "printed_formula_audit",
    "profile",
    "validate_catalog",
    "wave_speed_squared",
]
