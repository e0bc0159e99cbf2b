"""Inline validations behind ``eqmotive torusknot --check``.

Each check compares the assembled report against an independent closed
form or a structural property and is reported under a short anchor name.
The closed forms are written out here rather than derived from the catalog,
so a failing check points at a disagreement between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..algebra import Q, RatFunc, binom
from ..exprlang import evaluate
from ..eqring import EqClass
from .pipeline import TorusKnotReport, assemble, kappa_terms, normalize, sl_baseline


@dataclass
class CheckResult:
    anchor: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.anchor}" + (f": {self.detail}" if self.detail else "")


def _p(src: str) -> RatFunc:
    return RatFunc.coerce(evaluate(src, {"q": Q}))


SL2_DISTINCT = "q^4-2*q^3-q^2+2*q"


def rank2_equivariant(n: int, m: int) -> EqClass:
    """Closed form of the equivariant rank-2 class for even ``n``."""
    nm = n * m
    return EqClass(
        nm,
        {
            nm // 2: _p("(q^2-q)*(q^2+q)") * Fraction(m - 1, 2),
            nm: _p("q-q^3") * Fraction(m - 1, 2) + _p(SL2_DISTINCT) * Fraction((n - 2) * (m - 1), 4),
        },
    )


def rank3_delta(m: int) -> RatFunc:
    """Character-level delta against ``SL_3`` when ``3 | n``."""
    inner = _p("q^2+q") * Fraction((m - 1) * (m - 2), 6) + (m - 1)
    return inner * _p("(q-1)*q^2") * Fraction(2, 3)


def rank4_delta(n: int, m: int) -> RatFunc:
    """Closed form for the rank-4 delta with ``m`` odd, guarded by ``2 | n`` and ``4 | n``."""
    b2, b3 = binom(m - 1, 2), binom(m - 1, 3)
    out = RatFunc.coerce(0)
    if n % 2 == 0:
        out = out + (
            _p("(q-1)*(q^5+2*q^4-q^3+3*q^2+2*q-2)") * Fraction(-(n - 2) * (m - 1), 16)
            + _p("(q-1)*q*(q^4-2*q^2-2)") * Fraction((n - 2) * b2, 8)
            - _p("(q-1)*q*(3*q^2+2)") * Fraction((n - 2) * (m - 1), 8)
            + _p("(q-1)*q^2*(q^7+2*q^6+4*q^5+5*q^4-6*q^3-6*q^2-6*q-6)") * Fraction((n - 2) * b3, 32)
            - _p("(q-1)*q*(q^2+q+3)") * Fraction(b2, 2)
            + _p("q^4*(q^2+q-5)") * Fraction(b3, 8)
        )
    if n % 4 == 0:
        out = out + (
            _p("(q-1)*q^2*(q^7+2*q^6-3*q^4+6*q^3+6*q^2+6*q+6)") * Fraction(b3, 128)
            + _p("q*(3*q^7+3*q^6+q^4+3*q^3-4*q^2+4*q-4)") * Fraction(b2, 16)
            + _p("q^5-3*q^4+4*q^3+q^2-4*q+2") * Fraction(m - 1, 32)
            + _p("(q-1)*q*(3*q^2+2*q+2)") * Fraction(m - 1, 16)
        )
    return out


def _integral_and_divisible(x: RatFunc) -> bool:
    if not x.is_poly():
        return False
    p = x.as_poly()
    if not p.is_integral():
        return False
    _, rem = p.divmod(Q - 1)
    return rem.is_zero()


def run_checks(n: int, m: int, r: int, baseline=None, report: TorusKnotReport | None = None) -> list[CheckResult]:
    """Validate the report for ``(n, m, r)``; returns one result per anchor."""
    rep = report or assemble(n, m, r, baseline)
    nn, mm, _ = normalize(n, m, r)
    out: list[CheckResult] = []

    if rep.repMotive is not None:
        out.append(CheckResult("repMotive integral and divisible by q-1", _integral_and_divisible(rep.repMotive)))

    other = assemble(m, n, r, baseline)
    same = other.rIrrEquivariant == rep.rIrrEquivariant and other.deltaVsSL == rep.deltaVsSL
    out.append(CheckResult("n-m symmetry", same))

    terms = kappa_terms(nn, mm, r)
    plain_free = all(t.irr.fixed_part().plain().is_zero() for t in terms)
    out.append(CheckResult("corrections have zero underlying class", plain_free))

    if r == 1:
        out.append(CheckResult("rank 1 closed form q - 1", rep.repMotive == Q - 1))
    if r in (2, 3) and gcd(r, nn * mm) == 1:
        expect = sl_baseline(r, nn, mm) * Fraction(1, r) * (Q - 1)
        out.append(CheckResult("coprime closed form", rep.repMotive == expect))
    if r == 2 and nn % 2 == 0:
        out.append(CheckResult("rank 2 configuration-level assembly", rep.rIrrEquivariant == rank2_equivariant(nn, mm)))
    if r == 3 and nn % 3 == 0:
        out.append(CheckResult("rank 3 delta closed form", rep.deltaVsSL == rank3_delta(mm)))
    if r == 4:
        expect = rank4_delta(nn, mm)
        ok = rep.deltaVsSL == expect
        detail = "" if ok else f"difference {(rep.deltaVsSL - expect).to_str()}"
        out.append(CheckResult("rank 4 delta closed form", ok, detail))
    return out
