"""Optimal scalar linear index codes for symmetric multiple-unicast problems
with one-sided neighboring antidotes, plus GF(2) oracles to check them."""

from .constructors import CodeBook, construct
from .gf2 import BitMatrix, BitVector, DimensionError, rank, solve_membership, xor_sum
from .minrank import MinrankResult, SearchInconclusive, fits, is_critical, minrank
from .model import (
    CaseParams,
    InvalidParameters,
    ProblemSpec,
    antidotes_for_case,
    antidotes_general,
    capacity_general,
    capacity_one_sided,
    make_case,
)
from .verifier import DecodeReport, can_decode, check_optimal_length, min_transmissions, verify_all

__all__ = [
    "BitMatrix",
    "BitVector",
    "CaseParams",
    "CodeBook",
    "DecodeReport",
    "DimensionError",
    "InvalidParameters",
    "MinrankResult",
    "ProblemSpec",
    "SearchInconclusive",
    "antidotes_for_case",
    "antidotes_general",
    "can_decode",
    "capacity_general",
    "capacity_one_sided",
    "check_optimal_length",
    "construct",
    "fits",
    "is_critical",
    "make_case",
    "min_transmissions",
    "minrank",
    "rank",
    "solve_membership",
    "verify_all",
    "xor_sum",
]
