"""Domination polynomials of graphs: exact computation, closed forms for
several families, domination roots and limits of roots."""
from __future__ import annotations

from .graph import Graph
from .poly import Polynomial

__all__ = ["Graph", "Polynomial"]
__version__ = "0.1.0"
