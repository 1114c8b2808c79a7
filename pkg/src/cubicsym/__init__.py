"""Finite abelian symmetry groups of smooth cubic fourfolds: diagonal
character groups and closures of monomial sets, combinatorial and
Jacobian-criterion smoothness certificates, exhaustive enumeration of the
maximal-group list, and the monomial-matrix (shift/weight) case analysis.
"""

__version__ = "0.1.0"
