"""Distinguishing 2-edge-colourings of finite connected regular graphs."""

__version__ = "0.1.0"

from .engine import ColouringReport, ExceptionGraph, distinguishing_two_colouring
from .graph import Graph, parse_graph6, write_graph6
from .symmetry import BLUE, RED, EdgeColouring, automorphisms, is_distinguishing

__all__ = ["BLUE", "RED", "ColouringReport", "EdgeColouring", "ExceptionGraph", "Graph",
           "automorphisms", "distinguishing_two_colouring", "is_distinguishing",
           "parse_graph6", "write_graph6"]
