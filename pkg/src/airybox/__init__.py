"""Airy-function solution of a charged particle in a 1D box with a uniform field."""

from .airy_solver import (
    EigenState,
    FieldProblem,
    ForceBalance,
    boundary_forces,
    characteristic,
    characteristic_derivative,
    eigenfunction,
    eigenvalues,
    force_sweep,
    j_analytic,
    j_quadrature,
    zero_field_eigenvalues,
)
from .fd_solver import FDSpectrum, fd_boundary_forces, fd_spectrum
from .specfun import AiryValues, airy

__version__ = "0.1.0"
