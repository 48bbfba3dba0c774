"""Kochen-Specker proofs from the N-qubit Pauli group: diagrams, projector systems
and parity proofs, computed with exact arithmetic."""

from ksforge.config import setup_logging

__all__ = ["setup_logging"]
