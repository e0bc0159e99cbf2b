"""Motives of ``GL_r`` representation and character varieties of torus knots, ``r <= 4``."""

from .catalog import Catalog, KappaPattern, TypeRecipe, load_catalog
from .pipeline import (
    TorusKnotReport,
    assemble,
    kappa_terms,
    load_baseline,
    normalize,
    pgl,
    r_kappa_irr,
    r_kappa_red,
    r_tau,
    sl_baseline,
)

__all__ = [
    "Catalog",
    "KappaPattern",
    "TypeRecipe",
    "load_catalog",
    "TorusKnotReport",
    "assemble",
    "kappa_terms",
    "load_baseline",
    "normalize",
    "pgl",
    "r_kappa_irr",
    "r_kappa_red",
    "r_tau",
    "sl_baseline",
]
