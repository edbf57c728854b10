"""Generalized Expanded Blaum-Roth (GEBR) array codes over GF(2)."""

from .code import (
    ArrayCodeword,
    GebrParams,
    MembershipReport,
    check_membership,
    is_mds_oracle,
    is_mds_theorem,
    kernel_basis,
    make_params,
    syndromes,
)
from .codec import DecodeKind, DecodeOutcome, decode_erasures, decode_erasures_dense, encode
from .ring import BitPoly, add, column_valid, lift, mul_binomial, rotate
from .solver import Outcome, RecursionOutcome, solve_binomial
from .witness import NonMdsWitness, build_witness, coset_pairing, decompose_tau, verify_witness

__all__ = [
    "ArrayCodeword", "BitPoly", "DecodeKind", "DecodeOutcome", "GebrParams",
    "MembershipReport", "NonMdsWitness", "Outcome", "RecursionOutcome",
    "add", "build_witness", "check_membership", "column_valid", "coset_pairing",
    "decode_erasures", "decode_erasures_dense", "decompose_tau", "encode",
    "is_mds_oracle", "is_mds_theorem", "kernel_basis", "lift", "make_params",
    "mul_binomial", "rotate", "solve_binomial", "syndromes", "verify_witness",
]
