"""Exact lattice current and vertex algebras over the Z_q Hopf algebra."""

from .cyclotomic import CycloNum, half_qpow, qpow
from .currents import LatticeConfig, build_currents
from .report import RelationReport
from .vertex import VertexFamily, build_vertex
from .weyl import WeylElement, induced_rep, lattice_table

__all__ = [
    "CycloNum",
    "qpow",
    "half_qpow",
    "LatticeConfig",
    "build_currents",
    "RelationReport",
    "VertexFamily",
    "build_vertex",
    "WeylElement",
    "induced_rep",
    "lattice_table",
]

__version__ = "0.1.0"
