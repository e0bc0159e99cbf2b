"""Declarative catalog of eigenvalue configurations and reducible types.

The catalog is a versioned JSON document with two sections:

``types``
    Reducible strata ``R(tau)`` keyed by id.  A type either quotes its class
    (``"direct"``) or gives the ingredients ``M``, ``F0``, ``I`` and the
    exponent ``D`` of the identity ``[R][F0] q^D = [M][GL_r][I]``.

``patterns``
    Eigenvalue configurations ``kappa`` of a given rank: a stabilizer order,
    a guard and a count (small arithmetic expressions in ``n`` and ``m``),
    the class of the full stratum ``R_kappa`` and the list of types
    ``{"type": id, "count": k}`` to remove from it.  A pattern may instead
    quote its irreducible class (``"irr"``).  Patterns marked ``"partial"``
    list only the types with a nontrivial stabilizer; only the part of their
    irreducible class that sees the action is meaningful.

Expression nodes (evaluated over a cyclic group whose order is fixed by the
surrounding context):

=====================================  ========================================
``"q^2 - q"``                          polynomial with trivial action
``{"class": {"1": p, "2": p}}``        explicit ``sum_d p_d (x) Q^d``
``{"gl": k}``                          ``[GL_k]`` with trivial action
``{"conj": [[lam, ell], ...]}``        ``GL / prod GL_lam`` with permuted blocks
``{"per": e, "from": o}``              ``Per`` of ``e`` evaluated at order ``o``
``{"ind": e, "from": o}``              induction of ``e`` from order ``o``
``{"mul": [...]}`` / ``{"add": [...]}``
``{"sub": [a, b]}`` / ``{"div": [a, b]}``
``{"pow": [e, k]}``
``{"scale": "1/2", "of": e}``
``{"ref": pattern_id}``                irreducible class of another pattern
=====================================  ========================================
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Any, Mapping

from ..algebra import Q, RatFunc, binom
from ..eqring import EqClass
from ..errors import CatalogError
from ..exprlang import ExprError, evaluate
from ..perops import per
from ..varieties import OrbitBlocks, conj_quotient, gl_class

CATALOG_ENV = "EQMOTIVE_CATALOG"
FORMAT = "eqmotive-catalog"
SUPPORTED_VERSIONS = (1,)


def _div(k, x) -> int:
    return int(Fraction(x) % k == 0)


def _count_env(n: int, m: int) -> dict[str, Any]:
    return {
        "n": Fraction(n),
        "m": Fraction(m),
        "binom": lambda a, b: Fraction(binom(int(a), int(b))) if Fraction(a).denominator == 1 else Fraction(0),
        "div": lambda k, x: _div(k, x),
        "ndiv": lambda k, x: 1 - _div(k, x),
    }


@dataclass(frozen=True)
class TypeRecipe:
    """Data for one reducible stratum ``R(tau)``."""

    id: str
    stabilizer: int
    D: int = 0
    M: Any = "1"
    F0: Any = "1"
    I: Any = "1"
    direct: Any = None
    anchor: str = ""

    @classmethod
    def from_json(cls, tid: str, data: Mapping) -> "TypeRecipe":
        try:
            return cls(
                id=tid,
                stabilizer=int(data["stabilizer"]),
                D=int(data.get("D", 0)),
                M=data.get("M", "1"),
                F0=data.get("F0", "1"),
                I=data.get("I", "1"),
                direct=data.get("direct"),
                anchor=str(data.get("paper_anchor", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"type {tid!r}: {exc}") from None


@dataclass(frozen=True)
class TypeUse:
    type: str
    count: int


@dataclass(frozen=True)
class KappaPattern:
    """An eigenvalue configuration with its count and reducible types."""

    id: str
    rank: int
    stabilizer: int
    count: str
    guard: str = "1"
    base: Any = None
    taus: tuple[TypeUse, ...] = ()
    irr: Any = None
    partial: bool = False
    anchor: str = ""

    @classmethod
    def from_json(cls, data: Mapping) -> "KappaPattern":
        try:
            pid = str(data["id"])
            taus = tuple(TypeUse(str(t["type"]), int(t["count"])) for t in data.get("taus", ()))
            pat = cls(
                id=pid,
                rank=int(data["rank"]),
                stabilizer=int(data["stabilizer"]),
                count=str(data["count"]),
                guard=str(data.get("guard", "1")),
                base=data.get("base"),
                taus=taus,
                irr=data.get("irr"),
                partial=bool(data.get("partial", False)),
                anchor=str(data.get("paper_anchor", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"pattern {data.get('id', '?')!r}: {exc}") from None
        if pat.base is None and pat.irr is None:
            raise CatalogError(f"pattern {pid!r} needs a base class or a quoted irreducible class")
        return pat

    def applies(self, n: int, m: int) -> bool:
        try:
            return bool(evaluate(self.guard, _count_env(n, m)))
        except (ExprError, ZeroDivisionError) as exc:
            raise CatalogError(f"pattern {self.id!r}: bad guard: {exc}") from None

    def multiplicity(self, n: int, m: int) -> Fraction:
        """Number of configurations of this shape for the ``(n, m)`` knot."""
        try:
            val = Fraction(evaluate(self.count, _count_env(n, m)))
        except (ExprError, ZeroDivisionError, TypeError) as exc:
            raise CatalogError(f"pattern {self.id!r}: bad count: {exc}") from None
        if val < 0 or val.denominator != 1:
            raise CatalogError(f"pattern {self.id!r}: count {val} at (n, m) = ({n}, {m}) is not a natural number")
        return val


@dataclass
class Catalog:
    version: int
    types: dict[str, TypeRecipe]
    patterns: dict[str, KappaPattern]
    source: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_json(cls, data: Mapping, source: str = "") -> "Catalog":
        if not isinstance(data, Mapping) or data.get("format") != FORMAT:
            raise CatalogError(f"{source or 'catalog'}: not an {FORMAT} document")
        version = data.get("version")
        if version not in SUPPORTED_VERSIONS:
            raise CatalogError(f"unsupported catalog version {version!r}")
        types = {tid: TypeRecipe.from_json(tid, t) for tid, t in data.get("types", {}).items()}
        patterns: dict[str, KappaPattern] = {}
        for entry in data.get("patterns", ()):
            pat = KappaPattern.from_json(entry)
            if pat.id in patterns:
                raise CatalogError(f"duplicate pattern id {pat.id!r}")
            patterns[pat.id] = pat
        cat = cls(int(version), types, patterns, source)
        cat.validate()
        return cat

    def validate(self) -> None:
        for pat in self.patterns.values():
            if pat.stabilizer < 1 or pat.rank % pat.stabilizer:
                raise CatalogError(f"pattern {pat.id!r}: stabilizer order must divide the rank")
            for use in pat.taus:
                tau = self.types.get(use.type)
                if tau is None:
                    raise CatalogError(f"pattern {pat.id!r} uses unknown type {use.type!r}")
                if pat.stabilizer % tau.stabilizer:
                    raise CatalogError(f"type {tau.id!r} has a stabilizer not contained in that of {pat.id!r}")
                if use.count < 0:
                    raise CatalogError(f"pattern {pat.id!r}: negative type count")

    def for_rank(self, r: int) -> list[KappaPattern]:
        return [p for p in self.patterns.values() if p.rank == r]

    # --- evaluation ---------------------------------------------------------------
    def eval(self, node: Any, order: int) -> EqClass:
        """Evaluate an expression node over the group of the given order."""
        key = (json.dumps(node, sort_keys=True), order)
        got = self._cache.get(key)
        if got is None:
            got = self._eval(node, order)
            self._cache[key] = got
        return got

    def _eval(self, node: Any, order: int) -> EqClass:
        if isinstance(node, (str, int)):
            return EqClass.trivial(order, _poly(node))
        if not isinstance(node, Mapping) or not node:
            raise CatalogError(f"malformed expression {node!r}")
        if "class" in node:
            return EqClass(order, {int(d): _poly(p) for d, p in node["class"].items()})
        if "gl" in node:
            return EqClass.trivial(order, RatFunc(gl_class(int(node["gl"]))))
        if "conj" in node:
            return conj_quotient(OrbitBlocks(order, tuple(tuple(b) for b in node["conj"])))
        if "per" in node or "ind" in node:
            inner_order = int(node.get("from", 1))
            if inner_order < 1 or order % inner_order:
                raise CatalogError(f"cannot lift from order {inner_order} to order {order}")
            inner = self.eval(node.get("per", node.get("ind")), inner_order)
            if "per" in node:
                return per(inner, order // inner_order)
            return inner.induce(order)
        if "mul" in node:
            out = EqClass.one(order)
            for sub in node["mul"]:
                out = out * self.eval(sub, order)
            return out
        if "add" in node:
            out = EqClass.zero(order)
            for sub in node["add"]:
                out = out + self.eval(sub, order)
            return out
        if "sub" in node:
            a, b = node["sub"]
            return self.eval(a, order) - self.eval(b, order)
        if "div" in node:
            a, b = node["div"]
            return self.eval(a, order).divide(self.eval(b, order))
        if "pow" in node:
            a, k = node["pow"]
            return self.eval(a, order) ** int(k)
        if "scale" in node:
            return self.eval(node["of"], order).scale(Fraction(node["scale"]))
        if "ref" in node:
            pat = self.patterns.get(node["ref"])
            if pat is None:
                raise CatalogError(f"reference to unknown pattern {node['ref']!r}")
            if pat.stabilizer != order:
                raise CatalogError(f"pattern {pat.id!r} lives over order {pat.stabilizer}, not {order}")
            if pat.partial:
                raise CatalogError(f"pattern {pat.id!r} is partial and cannot be referenced")
            return self.kappa_irr(pat)
        raise CatalogError(f"unknown expression node {sorted(node)}")

    def r_tau(self, tau: TypeRecipe | str, rank: int) -> EqClass:
        """``[R(tau)]`` over the stabilizer of ``tau``."""
        if isinstance(tau, str):
            tau = self.types[tau]
        h = tau.stabilizer
        if tau.direct is not None:
            return self.eval(tau.direct, h)
        num = self.eval(tau.M, h) * EqClass.trivial(h, RatFunc(gl_class(rank))) * self.eval(tau.I, h)
        den = self.eval(tau.F0, h) * EqClass.trivial(h, RatFunc(Q**tau.D))
        return num.divide(den)

    def kappa_base(self, pat: KappaPattern) -> EqClass:
        if pat.base is None:
            raise CatalogError(f"pattern {pat.id!r} has no base class")
        return self.eval(pat.base, pat.stabilizer)

    def kappa_red(self, pat: KappaPattern) -> EqClass:
        """Reducible part: each type orbit contributes an induced class."""
        h = pat.stabilizer
        out = EqClass.zero(h)
        for use in pat.taus:
            tau = self.types[use.type]
            part = self.r_tau(tau, pat.rank).induce(h)
            out = out + part.scale(Fraction(use.count * tau.stabilizer, h))
        return out

    def kappa_irr(self, pat: KappaPattern) -> EqClass:
        key = ("irr", pat.id)
        got = self._cache.get(key)
        if got is None:
            if pat.irr is not None:
                got = self.eval(pat.irr, pat.stabilizer)
            else:
                got = self.kappa_base(pat) - self.kappa_red(pat)
            self._cache[key] = got
        return got


def _poly(src) -> RatFunc:
    try:
        val = evaluate(str(src), {"q": Q})
    except ExprError as exc:
        raise CatalogError(str(exc)) from None
    return RatFunc.coerce(val)


def default_catalog_path() -> str:
    env = os.environ.get(CATALOG_ENV)
    if env:
        return env
    return str(resources.files("eqmotive.torusknot").joinpath("data/catalog.json"))


@lru_cache(maxsize=8)
def _load(path: str, mtime: float) -> Catalog:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {path} is not valid JSON: {exc.msg}") from None
    return Catalog.from_json(data, source=path)


def load_catalog(path: str | None = None) -> Catalog:
    """Load (and cache) the catalog; ``$EQMOTIVE_CATALOG`` overrides the default."""
    path = path or default_catalog_path()
    try:
        mtime = os.path.getmtime(path)
    except OSError:
        raise CatalogError(f"catalog file {path} not found") from None
    return _load(path, mtime)


def stabilizer_ok(pat: KappaPattern, n: int, m: int) -> bool:
    """The stabilizer of a configuration divides ``gcd(r, nm)``."""
    return gcd(pat.rank, n * m) % pat.stabilizer == 0
