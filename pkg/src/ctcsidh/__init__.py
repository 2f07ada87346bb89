"""Constant-time CSIDH: x-only Montgomery and twisted Edwards arithmetic,
the projective Elligator, and four class-group action evaluators with
field-operation counting."""

from . import _backend
from ._types import IDENTITY, INFINITY, CurveCoeffs, PointXZ, PointYT
from .action import (ACTIONS, KeyMode, RandomTape, SecretKey, action_dummy_free, action_mcr,
                     action_oayt, action_unprotected, run_action, sample_key,
                     validate_public_key)
from .fp import Fp, OpCounter
from .params import PARAMETER_SETS, ParameterSet, load_parameter_set

__version__ = "0.1.0"

__all__ = [
    "IDENTITY", "INFINITY", "CurveCoeffs", "PointXZ", "PointYT",
    "ACTIONS", "KeyMode", "RandomTape", "SecretKey", "action_dummy_free", "action_mcr",
    "action_oayt", "action_unprotected", "run_action", "sample_key", "validate_public_key",
    "Fp", "OpCounter", "PARAMETER_SETS", "ParameterSet", "load_parameter_set", "backend",
]


def backend() -> str:
    """Name of the kernel in use: ``"c"`` or ``"python"``."""
    return _backend.name()
