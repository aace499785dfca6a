"""Utility modules."""

from .logger import get_logger, setup_logging
from .config import Config, get_config, reset_config
from .errors import (
    CertificationError,
    DegenerateDenominator,
    DenominatorStraddlesZero,
    EinflagError,
    FactorizationMismatch,
    InvalidParameters,
    MembershipFailure,
    NotDivisible,
    NotEinstein,
    PositivityUndecided,
    UnexpectedNonKahler,
)

__all__ = [
    "get_logger",
    "setup_logging",
    "Config",
    "get_config",
    "reset_config",
    "CertificationError",
    "DegenerateDenominator",
    "DenominatorStraddlesZero",
    "EinflagError",
    "FactorizationMismatch",
    "InvalidParameters",
    "MembershipFailure",
    "NotDivisible",
    "NotEinstein",
    "PositivityUndecided",
    "UnexpectedNonKahler",
]
