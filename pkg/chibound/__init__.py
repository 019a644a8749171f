# ---------------------------------------------------------------------------------------
# CHIBOUND
# ---------------------------------------------------------------------------------------
# Recognition and colouring of (P2+P4, diamond)-free graphs within the chi-bound
#   w = 2 -> 4,   w = 3 -> 6,   w >= 4 -> w
# ---------------------------------------------------------------------------------------
from .engine import colour, dispatch, theorem_bound
from .graph import Graph, from_edges
from .recognition import class_membership

__version__ = "1.0.0"

__all__ = ["Graph", "class_membership", "colour", "dispatch", "from_edges", "theorem_bound"]
