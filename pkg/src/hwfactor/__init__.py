"""Hamilton-Waterloo factorizations of K_n into Hamilton cycles and C_4k-factors."""

from .dispatcher import (
    InvalidParameters,
    Support,
    UnsupportedParameters,
    construct_hamilton_only,
    construct_hw,
    supported,
)
from .model import Certificate, Edge, Matching, Params, SuperPlan, TwoFactor, decode, encode
from .verifier import component_cycle_lengths, verify_certificate

__all__ = [
    "Certificate",
    "Edge",
    "InvalidParameters",
    "Matching",
    "Params",
    "SuperPlan",
    "Support",
    "TwoFactor",
    "UnsupportedParameters",
    "component_cycle_lengths",
    "construct_hamilton_only",
    "construct_hw",
    "decode",
    "encode",
    "supported",
    "verify_certificate",
]
