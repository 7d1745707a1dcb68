"""cyclobrauer — exact cyclotomic walled Brauer algebras.

Regular-monomial normal forms and a rewriting product for 𝓑_{k,r,t}, the level-two Hecke
and cellular layers, weight-diagram combinatorics, and an independent gl(m|n) matrix model
that every algebraic claim is checked against.
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _pkg_version

try:
    __version__ = _pkg_version("cyclobrauer")
except PackageNotFoundError:  # uninstalled checkout
    __version__ = "0+unknown"
