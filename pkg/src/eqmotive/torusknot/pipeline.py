"""Assembly of the torus-knot classes from the catalog.

For the ``(n, m)`` torus knot the group ``mu_{nm}`` acts on the variety of
irreducible pairs ``(A, B)`` with ``A^n = B^m = Id`` by scaling.  A
configuration of eigenvalues with stabilizer of order ``h`` has an orbit of
size ``nm / h``, and each orbit contributes the induction of its
irreducible class to ``mu_{nm}``.  The representation variety of the knot
group fibres over this with fibre ``C^*``, so its class is
``(q - 1) [R^irr / mu_{nm}]``.

Only the part of each irreducible class that sees the action contributes
to the difference with the ``SL_r`` prediction, so for rank 4 the catalog
carries just the types with a nontrivial stabilizer and the remaining
(plain) part is taken from an externally supplied ``SL_4`` baseline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..algebra import Poly, Q, RatFunc
from ..eqring import EqClass
from ..errors import InvalidKnot, MissingBaseline, UnsupportedRank
from .catalog import Catalog, KappaPattern, TypeRecipe, load_catalog

MAX_RANK = 4

DEVIATION_NOTES = {
    2: (
        "Rank 2: the simplified closed form for even n disagrees with the configuration-level sum by "
        "(1/4)(m-1)(q-1)(q^4-2q^3-q^2+2q); the configuration-level sum is used.",
        "Rank 2: the configuration-level sum gives the GL-vs-SL correction (1/4)(m-1)(q-1)q^2(q^2-1) "
        "on representation varieties and (1/4)(m-1)(q-1)q on character varieties.",
    ),
    3: (
        "Rank 3: the representation-level correction has the factor (m-2)/6; the variant with (m-2)/2 "
        "is inconsistent with the character-level form and is not used.",
        "Rank 3: for a regular configuration with stabilizer mu_3 the reducible part is one third of "
        "[R_kappa] - [R_kappa^irr], with q^9 coefficient 6 per orbit; the variant with 3q^9 would make "
        "[M^irr] a non-polynomial whenever 3 | n.",
    ),
    4: (
        "Rank 4: the character-variety class assumes [R^irr] = [PGL_4][M^irr], which is conjectural in this rank.",
        "Rank 4: Q^4 coefficients of configurations with stabilizer mu_4 are fixed by requiring the correction "
        "part to have zero underlying class.",
    ),
}


def normalize(n: int, m: int, r: int) -> tuple[int, int, bool]:
    """Validate the input and orient it so that the divisible parameter is ``n``."""
    for name, v in (("n", n), ("m", m), ("rank", r)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be a positive integer")
    if gcd(n, m) != 1:
        raise InvalidKnot("gcd(n,m) must be 1")
    if r > MAX_RANK:
        raise UnsupportedRank(f"rank {r} is not supported (maximum {MAX_RANK})")
    swap = False
    if r in (2, 4) and m % 2 == 0:
        swap = True
    elif r == 3 and m % 3 == 0:
        swap = True
    return (m, n, True) if swap else (n, m, False)


def pgl(r: int) -> RatFunc:
    """``[PGL_r] = q^{r-1} prod_{i=0}^{r-2} (q^r - q^i)``."""
    out = Q ** (r - 1)
    for i in range(r - 1):
        out = out * (Q**r - Q**i)
    return RatFunc(out)


@dataclass
class KappaTerm:
    pattern: KappaPattern
    count: Fraction
    irr: EqClass
    nm: int

    @property
    def orbits(self) -> Fraction:
        """Number of ``mu_{nm}``-orbits of configurations of this shape."""
        return self.count * self.pattern.stabilizer / self.nm


@dataclass
class TorusKnotReport:
    n: int
    m: int
    r: int
    rIrrEquivariant: EqClass
    repMotive: RatFunc | None
    charMotive: RatFunc | None
    deltaVsSL: RatFunc
    swapped: bool = False
    conjectural: bool = False
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def enc(x):
            return None if x is None else x.to_json()

        return {
            "n": self.n,
            "m": self.m,
            "rank": self.r,
            "swapped": self.swapped,
            "conjectural": self.conjectural,
            "rIrrEquivariant": self.rIrrEquivariant.to_json(),
            "repMotive": enc(self.repMotive),
            "charMotive": enc(self.charMotive),
            "deltaVsSL": enc(self.deltaVsSL),
            "notes": list(self.notes),
        }


def r_tau(tau: TypeRecipe | str, r: int, catalog: Catalog | None = None) -> EqClass:
    return (catalog or load_catalog()).r_tau(tau, r)


def r_kappa_red(pattern: KappaPattern | str, catalog: Catalog | None = None) -> EqClass:
    cat = catalog or load_catalog()
    return cat.kappa_red(_pattern(cat, pattern))


def r_kappa_irr(pattern: KappaPattern | str, catalog: Catalog | None = None) -> EqClass:
    cat = catalog or load_catalog()
    return cat.kappa_irr(_pattern(cat, pattern))


def _pattern(cat: Catalog, pattern: KappaPattern | str) -> KappaPattern:
    return cat.patterns[pattern] if isinstance(pattern, str) else pattern


def kappa_terms(n: int, m: int, r: int, catalog: Catalog | None = None) -> list[KappaTerm]:
    """Catalog patterns of rank ``r`` occurring for the (normalized) knot ``(n, m)``."""
    cat = catalog or load_catalog()
    out = []
    for pat in cat.for_rank(r):
        if not pat.applies(n, m):
            continue
        count = pat.multiplicity(n, m)
        if count == 0:
            continue
        if gcd(r, n * m) % pat.stabilizer:
            raise InvalidKnot(f"configuration {pat.id!r} cannot have stabilizer {pat.stabilizer} for ({n}, {m})")
        term = KappaTerm(pat, count, cat.kappa_irr(pat), n * m)
        if term.orbits.denominator != 1:
            raise InvalidKnot(f"configuration {pat.id!r} does not split into whole orbits for ({n}, {m})")
        out.append(term)
    return out


def correction_class(terms: list[KappaTerm], nm: int, ablate: bool = False) -> EqClass:
    """Sum over orbits of the induced action-sensitive parts."""
    out = EqClass.zero(nm)
    if ablate:
        return out
    for t in terms:
        out = out + t.irr.fixed_part().induce(nm).scale(t.orbits)
    return out


def sl_baseline(r: int, n: int, m: int, baseline: Poly | RatFunc | None = None, catalog=None) -> RatFunc:
    """``[R^irr(SL_r)]^* = (r/nm) sum_kappa [R_kappa^irr]``.

    For rank 4 the value must be supplied as the class of the ``SL_4``
    character variety; it is converted with ``[PGL_4]``.
    """
    n, m, _ = normalize(n, m, r)
    if r == 4:
        if baseline is None:
            raise MissingBaseline("rank 4 needs an SL_4 baseline polynomial")
        return RatFunc.coerce(baseline) * pgl(4)
    total = RatFunc(Poly([]))
    for t in kappa_terms(n, m, r, catalog):
        total = total + t.irr.plain() * t.count
    return total * Fraction(r, n * m)


def assemble(
    n: int,
    m: int,
    r: int,
    baseline: Poly | RatFunc | None = None,
    catalog: Catalog | None = None,
    ablate_corrections: bool = False,
) -> TorusKnotReport:
    """Classes of the irreducible ``GL_r`` representation and character varieties.

    ``ablate_corrections`` drops the action-sensitive parts, leaving only the
    ``SL_r``-proportional term; it exists for testing.
    """
    n0, m0 = n, m
    n, m, swapped = normalize(n, m, r)
    nm = n * m
    terms = kappa_terms(n, m, r, catalog)
    corr = correction_class(terms, nm, ablate_corrections)
    pg = pgl(r)
    delta_rep = corr.quotient_class(1) * (Q - 1)
    notes = list(DEVIATION_NOTES.get(r, ()))
    if r < 4:
        sl = sl_baseline(r, n, m, catalog=catalog)
        plain_part = EqClass.basis(nm, nm, sl * Fraction(1, r))
        equiv = plain_part + corr
        rep = equiv.quotient_class(1) * (Q - 1)
        char = rep / pg
        return TorusKnotReport(n0, m0, r, equiv, rep, char, delta_rep / pg, swapped, False, notes)
    if baseline is None:
        notes.append("Rank 4: no SL_4 baseline supplied; the equivariant class is the correction part only.")
        return TorusKnotReport(n0, m0, r, corr, None, None, delta_rep / pg, swapped, True, notes)
    sl = sl_baseline(4, n, m, baseline)
    equiv = EqClass.basis(nm, nm, sl * Fraction(1, 4)) + corr
    rep = equiv.quotient_class(1) * (Q - 1)
    return TorusKnotReport(n0, m0, r, equiv, rep, rep / pg, delta_rep / pg, swapped, True, notes)


def load_baseline(path: str) -> Poly:
    """Read an ``SL_4`` baseline polynomial (coefficient array or ``{num, den}``)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    val = RatFunc.from_json(data)
    return val.as_poly() if val.is_poly() else val
