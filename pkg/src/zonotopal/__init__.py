"""Exact computations for zonotopal algebras of complex reflection arrangements."""

from .cyclotomic import cyclotomic_field, embed
from .arrangements import braid_arrangement, gale_dual, reflection_arrangement, tutte
from .wreath import WreathElement, wreath_group
from .actions import dual_model
from .verify import VerificationReport, run_check

__version__ = "0.1.0"

__all__ = [
    "cyclotomic_field",
    "embed",
    "braid_arrangement",
    "gale_dual",
    "reflection_arrangement",
    "tutte",
    "WreathElement",
    "wreath_group",
    "dual_model",
    "VerificationReport",
    "run_check",
]
