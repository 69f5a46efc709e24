"""Exact-arithmetic engine for equivariant cyclic homology.

Finite-dimensional structure-constant (co/bi/Hopf) algebras over Q or F_p,
the bar and twisted coalgebra Hochschild complexes, validated (co)cyclic
modules of module coalgebras and comodule algebras, and machine verification
of excision and relative-homology statements on concrete instances.
"""

__version__ = "0.1.0"
