"""Strata, dg-models and Ext recursions for open Richardson varieties in Grassmannians."""

from .laurent import BiLaurent
from .perm import Permutation
from .shapes import Shape

__all__ = ["BiLaurent", "Permutation", "Shape"]
__version__ = "0.1.0"
