"""Exact arithmetic for Drinfeld modular forms over F_q[theta].

Finite-field and polynomial algebra, Carlitz torsion rings, Dirichlet
characters with Gauss-Thakur sums, truncated u-expansions and
A-expansions, Hecke operators and character twists, and a catalog of
named forms with identity-verification reports.
"""

__version__ = "0.1.0"
