"""Combinatorial (Fg) checks for d-Koszul and (D,A)-stacked monomial algebras."""

__version__ = "0.1.0"
