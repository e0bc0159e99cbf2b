"""Exact classes of varieties with cyclic group actions.

The main entry points are :class:`~eqmotive.eqring.EqClass` for classes
over a cyclic group, :func:`~eqmotive.perops.per` for powers with the
permutation-of-factors action, and :func:`~eqmotive.torusknot.assemble` for
torus-knot representation varieties.
"""

from .algebra import Poly, Q, RatFunc, divisors, mobius
from .eqring import EqClass
from .errors import DomainError
from .perops import per, per_character, per_prime
from .varieties import OrbitBlocks, RankProfile, conj_quotient, gl_class, vclass

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "Q",
    "RatFunc",
    "divisors",
    "mobius",
    "EqClass",
    "DomainError",
    "per",
    "per_character",
    "per_prime",
    "OrbitBlocks",
    "RankProfile",
    "conj_quotient",
    "gl_class",
    "vclass",
]
