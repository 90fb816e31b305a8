"""Matrix means on positive definite matrices and constructive witnesses
for trace-characterizing inequalities."""

from ._tracewitness import *  # noqa: F401,F403
from ._tracewitness import __version__  # noqa: F401
