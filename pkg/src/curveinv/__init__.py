"""Exact invariants of plane curve singularities in any characteristic.

The package computes intersection numbers, Milnor, delta, polar and gamma
invariants of reduced plane curve germs, and the global Pluecker bookkeeping
they feed into, entirely with exact field arithmetic.
"""

from __future__ import annotations

from .algebra import MPoly, parse_poly
from .field import FieldCtx, FieldElement, embed
from .hne import Branch, BranchSet, branch_decompose
from .invariants import (
    INF,
    ExtNat,
    GammaBudget,
    GammaResult,
    InvariantReport,
    analyze_local,
    delta,
    gamma,
    gamma_tilde,
    intersection_multiplicity,
    kappa,
    milnor,
    swan,
    verify_relations,
)
from .projective import (
    PluckerReport,
    SingularPoint,
    local_equation,
    plucker_analysis,
    singular_points,
)

__all__ = [
    "FieldCtx",
    "FieldElement",
    "embed",
    "MPoly",
    "parse_poly",
    "Branch",
    "BranchSet",
    "branch_decompose",
    "INF",
    "ExtNat",
    "GammaBudget",
    "GammaResult",
    "InvariantReport",
    "analyze_local",
    "delta",
    "gamma",
    "gamma_tilde",
    "intersection_multiplicity",
    "kappa",
    "milnor",
    "swan",
    "verify_relations",
    "PluckerReport",
    "SingularPoint",
    "local_equation",
    "plucker_analysis",
    "singular_points",
]
