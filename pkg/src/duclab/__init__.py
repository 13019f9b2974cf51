"""Dual-unitary Clifford circuits: operator dynamics, MBQC gate algebras and checks."""
from .pauli import PauliWord, commutator, commutes, pauli_mul

__all__ = ["PauliWord", "commutator", "commutes", "pauli_mul"]
__version__ = "0.1.0"
