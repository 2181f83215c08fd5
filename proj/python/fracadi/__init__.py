"""Second-order solvers for two-sided space-fractional convection-diffusion
equations: spline coefficient tables, Crank-Nicolson and ADI time stepping,
convergence studies, stability sweeps, and a coefficient audit."""

try:
    from ._fracadi import *  # noqa: F401,F403  installed builds
except ImportError:
    from _fracadi import *  # noqa: F401,F403  in-tree builds via PYTHONPATH

__version__ = "0.1.0"
