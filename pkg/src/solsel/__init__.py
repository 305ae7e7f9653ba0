"""solsel: online selection and tuning of preconditioned iterative solvers.

The package couples a tree-structured solver configuration space, a
two-stage learned pipeline (success classifier + reward regressor), and
desk-scale numerical environments into a reproducible experiment harness.
"""

from solsel.space import ConfigSpace, SolverConfig, load_space, parse_space

__version__ = "0.1.0"

__all__ = ["ConfigSpace", "SolverConfig", "load_space", "parse_space", "__version__"]
