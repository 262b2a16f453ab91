"""Hierarchical provability logics: parsing, proof search, proof checking,
cut elimination and translations. Proof objects cross the boundary as JSON
strings; formulas as text."""

from ._hml import *  # noqa: F401,F403
from ._hml import __doc__  # noqa: F401
