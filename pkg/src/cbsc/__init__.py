"""Code-based signcryption: tag-KEM + DEM hybrid with a ternary
(U, U+V) sender trapdoor and a permuted binary Goppa receiver side."""

from .params import TOY, PAPER_L1, CommonParams, ParameterError, setup
from .sctkem import (
    Encapsulation,
    decap,
    encap,
    keygen_receiver_params,
    keygen_sender_params,
    sym,
)
from .hybrid import SigncryptedMessage, signcrypt, unsigncrypt

__all__ = [
    "TOY", "PAPER_L1", "CommonParams", "ParameterError", "setup",
    "Encapsulation", "sym", "encap", "decap",
    "keygen_receiver_params", "keygen_sender_params",
    "SigncryptedMessage", "signcrypt", "unsigncrypt",
]

__version__ = "0.1.0"
