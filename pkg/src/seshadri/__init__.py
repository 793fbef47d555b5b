"""Exact combinatorics of Seshadri stratifications on Schubert varieties.

Bonded Bruhat posets, the LS-fan of monoids and LS-paths, Demazure
characters, standard monomials, divided-power monomials and the degree
formula on the simplicial complex of chains.
"""

from .root_system import CartanData
from .strat_poset import StratPoset, build

__all__ = ["CartanData", "StratPoset", "build"]
__version__ = "0.1.0"
