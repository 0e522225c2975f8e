"""Chu-Harrington-limit performance bounds for electrically small emitters.

Thin wrapper re-exporting the pybind11 core. The heavy lifting (CHL algebra,
field-to-power inference, quantum-defect Numerov solver, reference catalog)
lives in the C++ extension.
"""

from ._esebound import *  # noqa: F401,F403
from ._esebound import constants  # noqa: F401

__version__ = "0.1.0"
