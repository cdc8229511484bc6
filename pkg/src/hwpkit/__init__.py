"""Heisenberg-Weyl-parity toolkit for odd-dimensional quantum systems.

Exact residue arithmetic, the displacement-parity operators and their
group, dihedral representations, coherent-state frames, unified
Wigner-Weyl tables and a noisy-reconstruction experiment.
"""
from ._backend import BACKEND
from .frames import (BargmannTable, CoherentFrame, FiducialError, bargmann, build_frame,
                     reconstruct, validate_fiducial)
from .group import HWPElement, DihedralElement, GroupClosure, commutator_hwp, derived_series
from .noise import NoiseConfig, NoiseReport, run_experiment
from .operators import (displaced_parity, displacement, dp_operator, fourier, parity,
                        principal_log_hamiltonian, clock_z, shift_x)
from .ring import Dim, ModInt, Phase, omega
from .wigner import WWTable, unified_ww

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BargmannTable", "CoherentFrame", "FiducialError", "bargmann", "build_frame",
    "reconstruct", "validate_fiducial", "HWPElement", "DihedralElement", "GroupClosure",
    "commutator_hwp", "derived_series", "NoiseConfig", "NoiseReport", "run_experiment",
    "displaced_parity", "displacement", "dp_operator", "fourier", "parity",
    "principal_log_hamiltonian", "clock_z", "shift_x", "Dim", "ModInt", "Phase", "omega",
    "WWTable", "unified_ww", "__version__",
]
