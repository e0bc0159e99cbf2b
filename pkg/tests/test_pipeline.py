"""Torus-knot assembly: displayed configuration classes, closed forms and structure."""

import json
from fractions import Fraction

import pytest

from eqmotive.algebra import Q, RatFunc, binom
from eqmotive.eqring import EqClass
from eqmotive.errors import CatalogError, InvalidKnot, MissingBaseline, UnsupportedRank
from eqmotive.torusknot import (
    assemble,
    kappa_terms,
    load_baseline,
    load_catalog,
    normalize,
    pgl,
    r_kappa_irr,
    r_kappa_red,
    sl_baseline,
)
from eqmotive.torusknot.checks import rank2_equivariant, rank3_delta, run_checks

from _util import C, P

RANK3_KAPPA_BASE_Q1 = "(q^3-q^2)*(q^3-q)*q^2*(q^2+q)*(q^2+q+1)"
RANK3_REPEAT_Q1 = "(q^3-q^2)*(q^3-q)*q^2*(q^2+q+1)"


def _is_int_poly_div_q1(x: RatFunc) -> bool:
    if not x.is_poly():
        return False
    p = x.as_poly()
    return p.is_integral() and p.divmod(Q - 1)[1].is_zero()


# --- displayed configuration classes ----------------------------------------------
def test_rank2_mu2_reducible_and_irreducible():
    assert r_kappa_red("r2_mu2") == C(2, d2="2*q^3+q^2-q")
    assert r_kappa_irr("r2_mu2") == C(2, d1="(q^2-q)*(q^2+q)", d2="-q^3+q")


def test_rank3_mu3_repeat_display():
    assert r_kappa_irr("r3_mu3_repeat") == C(3, d1=RANK3_REPEAT_Q1, d3="-(q+1)*(q-1)^3*q^3*(q^2+q+1)")


def test_rank3_mu3_regular_display():
    expected = C(3, d1=RANK3_KAPPA_BASE_Q1, d3="q^3*(q^8-3*q^7-2*q^6+6*q^5+4*q^4-2*q^3-7*q^2-q+4)")
    assert r_kappa_irr("r3_mu3_regular") == expected


def test_rank3_mu3_regular_reducible_is_a_third_of_the_plain_difference():
    # [R^red] = [R_kappa] - [R_kappa^irr] on underlying classes, spread over the
    # three free orbits of the reducible locus.
    cat = load_catalog()
    pat = cat.patterns["r3_mu3_regular"]
    base_plain = cat.kappa_base(pat).plain()
    p12 = cat.eval(cat.patterns["r3_regular"].irr, 1).plain()
    assert r_kappa_red(pat) == EqClass.basis(3, 3, (base_plain - p12) * Fraction(1, 3))
    assert r_kappa_irr(pat).plain() == p12


def test_mu3_patterns_have_the_trivial_stabilizer_plain_class():
    cat = load_catalog()
    assert r_kappa_irr("r3_mu3_regular").plain() == cat.eval(cat.patterns["r3_regular"].irr, 1).plain()
    assert r_kappa_irr("r3_mu3_repeat").plain() == cat.eval(cat.patterns["r3_one_repeat"].irr, 1).plain()


# --- closed forms --------------------------------------------------------------------
def test_rank1_is_q_minus_1():
    for n, m in [(1, 1), (2, 3), (5, 7)]:
        rep = assemble(n, m, 1)
        assert rep.repMotive == Q - 1
        assert rep.charMotive == Q - 1


@pytest.mark.parametrize("n,m", [(2, 3), (2, 5), (4, 3), (3, 4), (6, 5), (2, 7)])
def test_rank2_configuration_level_assembly(n, m):
    rep = assemble(n, m, 2)
    nn, mm, _ = normalize(n, m, 2)
    assert rep.rIrrEquivariant == rank2_equivariant(nn, mm)


@pytest.mark.parametrize("n,m", [(2, 3), (4, 3), (6, 5)])
def test_rank2_simplified_line_differs_by_registered_term(n, m):
    rep = assemble(n, m, 2)
    unsimplified = (P("(q^2-q)*(q^2+q)") + P("-q^3+q")) * Fraction(m - 1, 2) + P("q^4-2*q^3-q^2+2*q") * Fraction(
        (n - 2) * (m - 1), 4
    )
    simplified = P("(q-1)*(q^4-2*q^3-q^2+2*q)") * Fraction((n - 1) * (m - 1), 4) + P(
        "(q-1)*(q^4-q^3-q^2+q)"
    ) * Fraction(m - 1, 2)
    assert rep.repMotive == unsimplified * (Q - 1)
    assert simplified - rep.repMotive == P("(q-1)*(q^4-2*q^3-q^2+2*q)") * Fraction(m - 1, 4)


@pytest.mark.parametrize("n,m", [(2, 3), (4, 3), (2, 5)])
def test_rank2_correction_against_sl(n, m):
    rep = assemble(n, m, 2)
    want = (rep.repMotive - sl_baseline(2, n, m) * Fraction(1, 2) * (Q - 1))
    assert want == P("(q-1)*q^2*(q^2-1)") * Fraction(m - 1, 4)
    assert rep.deltaVsSL == P("(q-1)*q") * Fraction(m - 1, 4)


@pytest.mark.parametrize("n,m", [(3, 2), (3, 4), (6, 5), (3, 5), (6, 7), (9, 2)])
def test_rank3_delta_closed_form(n, m):
    assert assemble(n, m, 3).deltaVsSL == rank3_delta(m)


@pytest.mark.parametrize("n,m,r", [(5, 3, 2), (5, 2, 3), (4, 5, 3), (7, 3, 2), (2, 5, 3)])
def test_coprime_points(n, m, r):
    rep = assemble(n, m, r)
    assert rep.repMotive == sl_baseline(r, n, m) * Fraction(1, r) * (Q - 1)
    assert rep.deltaVsSL.is_zero()


# --- structure -------------------------------------------------------------------------
@pytest.mark.parametrize("n,m,r", [(2, 3, 2), (3, 4, 3), (4, 3, 2), (6, 5, 3), (4, 5, 4), (2, 3, 4)])
def test_n_m_symmetry(n, m, r):
    a, b = assemble(n, m, r), assemble(m, n, r)
    assert a.rIrrEquivariant == b.rIrrEquivariant
    assert a.deltaVsSL == b.deltaVsSL
    assert a.swapped != b.swapped


@pytest.mark.parametrize("n,m,r", [(2, 3, 2), (4, 3, 2), (3, 2, 3), (3, 4, 3), (6, 5, 3), (9, 4, 3), (5, 2, 3)])
def test_rep_motive_integral_and_char_motive_polynomial(n, m, r):
    rep = assemble(n, m, r)
    assert _is_int_poly_div_q1(rep.repMotive)
    assert rep.charMotive.is_poly()
    assert rep.charMotive * pgl(r) == rep.repMotive


@pytest.mark.parametrize("n,m,r", [(4, 3, 2), (3, 4, 3), (6, 5, 3), (4, 5, 4)])
def test_corrections_have_zero_plain_class(n, m, r):
    nn, mm, _ = normalize(n, m, r)
    for t in kappa_terms(nn, mm, r):
        assert t.irr.fixed_part().plain().is_zero()
        assert t.orbits.denominator == 1


def test_ablation_leaves_only_the_sl_part():
    rep = assemble(3, 4, 3, ablate_corrections=True)
    sl = sl_baseline(3, 3, 4)
    assert rep.rIrrEquivariant == EqClass.basis(12, 12, sl * Fraction(1, 3))
    assert rep.deltaVsSL.is_zero()
    assert rep.repMotive != assemble(3, 4, 3).repMotive


def test_equivariant_plain_class_is_sl_part_scaled():
    # corrections are plain-free, so the underlying class is nm/r times the SL part
    rep = assemble(6, 5, 3)
    assert rep.rIrrEquivariant.plain() == sl_baseline(3, 6, 5) * Fraction(30, 3)


def test_configuration_counts_sum_to_all_configurations():
    # rank 2: eigenvalue pairs for A and B with distinct entries on each side
    n, m = 4, 3
    total = sum(t.count for t in kappa_terms(n, m, 2))
    distinct = binom(n, 2) * binom(m, 2)
    assert total <= distinct and total > 0


# --- normalization and errors ------------------------------------------------------
def test_normalize_swaps_divisible_parameter_first():
    assert normalize(3, 4, 2) == (4, 3, True)
    assert normalize(4, 3, 2) == (4, 3, False)
    assert normalize(2, 3, 3) == (3, 2, True)
    assert normalize(5, 2, 4) == (2, 5, True)
    assert normalize(2, 5, 1) == (2, 5, False)


def test_normalize_rejects_bad_input():
    with pytest.raises(InvalidKnot, match=r"gcd\(n,m\) must be 1"):
        normalize(4, 2, 2)
    with pytest.raises(UnsupportedRank):
        normalize(2, 3, 5)
    with pytest.raises(ValueError):
        normalize(0, 3, 2)
    with pytest.raises(ValueError):
        normalize(2, 3, True)


def test_rank4_without_baseline():
    rep = assemble(4, 3, 4)
    assert rep.repMotive is None and rep.charMotive is None
    assert rep.conjectural
    assert any("no SL_4 baseline" in note for note in rep.notes)
    with pytest.raises(MissingBaseline):
        sl_baseline(4, 4, 3)


def test_rank4_with_baseline(tmp_path):
    baseline = P("q^6-2*q^3+1")
    path = tmp_path / "sl4.json"
    path.write_text(json.dumps(baseline.as_poly().to_json()))
    loaded = load_baseline(str(path))
    rep = assemble(2, 3, 4, loaded)
    without = assemble(2, 3, 4)
    assert rep.deltaVsSL == without.deltaVsSL
    expected_rep = baseline * pgl(4) * Fraction(1, 4) * (Q - 1) + without.deltaVsSL * pgl(4)
    assert rep.repMotive == expected_rep
    assert rep.charMotive == expected_rep / pgl(4)


def test_report_json_shape():
    data = assemble(3, 4, 3).to_json()
    assert set(data) == {"n", "m", "rank", "swapped", "conjectural", "rIrrEquivariant", "repMotive", "charMotive", "deltaVsSL", "notes"}
    assert EqClass.from_json(data["rIrrEquivariant"]) == assemble(3, 4, 3).rIrrEquivariant
    assert json.loads(json.dumps(data)) == data


@pytest.mark.parametrize("n,m,r", [(2, 3, 2), (3, 4, 3), (6, 5, 3), (2, 5, 4), (5, 3, 2)])
def test_inline_checks_pass(n, m, r):
    assert all(c.passed for c in run_checks(n, m, r))


# --- catalog loading -------------------------------------------------------------------
def test_catalog_loads_and_validates():
    cat = load_catalog()
    assert cat.version == 1
    assert {p.rank for p in cat.patterns.values()} == {1, 2, 3, 4}
    for pat in cat.patterns.values():
        assert pat.rank % pat.stabilizer == 0


def _write(tmp_path, data):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_catalog_rejects_bad_documents(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(_write(tmp_path, {"format": "something-else", "version": 1}))
    with pytest.raises(CatalogError, match="version"):
        load_catalog(_write(tmp_path, {"format": "eqmotive-catalog", "version": 99}))
    bad_type = {
        "format": "eqmotive-catalog",
        "version": 1,
        "types": {},
        "patterns": [{"id": "x", "rank": 2, "stabilizer": 2, "count": "1", "base": "1", "taus": [{"type": "nope", "count": 1}]}],
    }
    with pytest.raises(CatalogError, match="unknown type"):
        load_catalog(_write(tmp_path, bad_type))
    bad_stab = {
        "format": "eqmotive-catalog",
        "version": 1,
        "patterns": [{"id": "x", "rank": 3, "stabilizer": 2, "count": "1", "base": "1"}],
    }
    with pytest.raises(CatalogError, match="divide the rank"):
        load_catalog(_write(tmp_path, bad_stab))
    with pytest.raises(CatalogError, match="not found"):
        load_catalog(str(tmp_path / "missing.json"))


def test_catalog_env_override(tmp_path, monkeypatch):
    doc = {
        "format": "eqmotive-catalog",
        "version": 1,
        "patterns": [{"id": "only", "rank": 1, "stabilizer": 1, "count": "n*m", "irr": "2"}],
    }
    monkeypatch.setenv("EQMOTIVE_CATALOG", _write(tmp_path, doc))
    cat = load_catalog()
    assert list(cat.patterns) == ["only"]
    # a point class of 2 doubles the rank-1 answer, so the override is in effect
    assert assemble(2, 3, 1).repMotive == (Q - 1) * 2
