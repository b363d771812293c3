"""Entanglement-assisted quantum error-correcting codes: binary symplectic
Pauli algebra, weight enumerators and the MacWilliams transform, distance
bounds (analytic and exact linear/integer programming), repetition and
accumulator code families with encoder circuits, and depolarizing-channel
error analysis.
"""

__version__ = "0.1.0"

from .code import EaqecCode, parse_code, serialize_code  # noqa: F401
from .pauli import CliffordCircuit, PauliOp, SymplecticMatrix  # noqa: F401
