"""Frozen expected values for the rank-4 catalog, entry by entry.

Each entry is keyed by catalog id.  Polynomials are written as expression
strings in ``q`` and turned into classes by :func:`build`.
"""

from fractions import Fraction

from _util import C, P

# single-factor building blocks shared by many types
F_TT = {"d1": "(q^2-1)^2", "d2": "-2*(q^2-q)*(q-1)"}
F_GG = {"d1": "(q^2-q)^2*(q^2-1)^2"}
F_PG = {"d1": "(q^4-q^2)*(q^4-1)", "d2": "-q^3*(q-1)^2*(q+1)^2"}
F_CG = {"d1": "(q^2-1)*(q^2-q)*(q^2-1)", "d2": "-(q-1)*(q^2-q)*(q^2-1)"}

I_PT = {"d1": "1"}
I_SQ = {"d1": "(q-1)^2*(q+1)^2*q^4", "d2": "-2*q^2*(q+1)^2*(q-1)^3"}
I_PER = {"d1": "q^8-2*q^6-q^4+2*q^2", "d2": "-2*q^7+2*q^6+4*q^5-3*q^4-2*q^3+q^2"}
I_ONE = {"d1": "(q^2-q)*(q^2+q)", "d2": "-q^3+q"}

M_PT = {"d1": "1"}
M_C4 = {"d1": "q^4-1"}
M_PER0 = {"d1": "q^4-1", "d2": "-(q^2-1)"}
M_C4L = {"d1": "q^4-q^2"}
M_PERL = {"d1": "q^4-q^2", "d2": "q^2-q^3"}
M_C4P = {"d1": "q^4-q"}

# type -> (F0', I, M)
PARTS = {
    "t1": (F_TT, I_PT, M_PT),
    "t2": (F_GG, I_SQ, M_PT),
    "t3": (F_PG, I_PER, M_PT),
    "t4": (F_TT, I_PT, M_PER0),
    "t5": (F_GG, I_SQ, M_C4),
    "t6": (F_CG, I_ONE, M_PT),
    "t7": (F_GG, I_SQ, M_PT),
    "t8": (F_CG, I_ONE, M_C4),
    "t9": (F_CG, I_ONE, M_PER0),
    "t10": (F_GG, I_SQ, M_C4),
    "t11": (F_GG, I_SQ, M_PT),
    "t12": (F_GG, I_SQ, M_C4),
    "t13": (F_CG, I_ONE, M_PT),
    "t14": (F_CG, I_ONE, M_C4),
    "t15": (F_CG, I_ONE, M_PER0),
    "t16": (F_CG, I_ONE, M_PT),
    "t17": (F_GG, I_SQ, M_PT),
    "t18": (F_CG, I_ONE, M_PERL),
    "t19": (F_CG, I_ONE, M_PERL),
    "t20": (F_GG, I_SQ, M_C4P),
    "t21": (F_GG, I_SQ, M_PT),
    "t22": (F_GG, I_SQ, M_C4L),
}

# the type with stabilizer of order four; its parts live over mu_4
PARTS_MU4 = {
    "t2p": (
        {"d1": "(q^4-q^2)*(q^4-1)", "d2": "-q^3*(q^2-1)^2"},
        {"d1": "(q^4-q^2)*(q^4+q^2)", "d2": "-q^4*(q-1)*(q+1)", "d4": "(-q^3+q)*(q^2-q)*(q^2-1)"},
        {"d1": "q^4-1"},
    )
}

R_TAU = {
    "t1": {"d1": "(q^2+1)*(q^4-q)*q^2*(q^4-q^3)", "d2": "2*q^7*(q^2+1)*(q^2+q+1)"},
    "t2": {"d1": "(q-1)^2*(q+1)^2*q^8*(q^2+1)*(q^2+q+1)", "d2": "-2*(q+1)^2*(q-1)^3*q^6*(q^2+1)*(q^2+q+1)"},
    "t3": {"d1": "(q+1)*(q-1)^3*q^6*(q^2-2)*(q^2+1)*(q^2+q+1)", "d2": "-(q+1)*(q-1)^2*q^6*(q^2-q-1)*(q^2+1)*(q^2+q+1)"},
    "t4": {"d1": "(q+1)*q^6*(q-1)^3*(q^2+q+1)*(q^2+1)^2", "d2": "(q+1)*(q-1)^2*q^6*(q^2+1)*(2*q^2+q+1)*(q^2+q+1)"},
    "t5": {"d1": "(q-1)^3*(q+1)^3*q^8*(q^2+q+1)*(q^2+1)^2", "d2": "-2*q^6*(q+1)^3*(q-1)^4*(q^2+q+1)*(q^2+1)^2"},
    "t6": {"d1": "(q+1)*(q-1)*q^7*(q^2+1)*(q^3-1)", "d2": "-(q+1)*q^6*(q^2+1)*(q^3-1)"},
    "t7": {"d1": "(q-1)*(q+1)^2*q^8*(q^2+1)*(q^3-1)", "d2": "-2*(q+1)^2*(q-1)^2*q^6*(q^2+1)*(q^3-1)"},
    "t8": {"d1": "(q+1)^2*(q-1)^2*q^7*(q^3-1)*(q^2+1)^2", "d2": "-(q-1)*q^6*(q+1)^2*(q^3-1)*(q^2+1)^2"},
    "t9": {"d1": "(q+1)^2*(q-1)^2*q^7*(q^3-1)*(q^2+1)^2", "d2": "-(2*q+1)*q^6*(q^2-1)^2*(q^2+1)*(q^3-1)"},
    "t10": {"d1": "(q-1)^2*(q+1)^3*q^8*(q^3-1)*(q^2+1)^2", "d2": "-2*q^6*(q+1)^3*(q-1)^3*(q^3-1)*(q^2+1)^2"},
    "t11": {"d1": "(q-1)^2*(q+1)^2*q^8*(q^2+1)*(q^2+q+1)", "d2": "-2*(q+1)^2*(q-1)^3*q^6*(q^2+1)*(q^2+q+1)"},
    "t12": {"d1": "(q-1)^3*(q+1)^3*q^8*(q^2+q+1)*(q^2+1)^2", "d2": "-2*q^6*(q+1)^3*(q-1)^4*(q^2+q+1)*(q^2+1)^2"},
    "t13": {"d1": "(q+1)*(q-1)^2*q^7*(q^2+1)*(q^2+q+1)", "d2": "-(q-1)*(q+1)*q^6*(q^2+1)*(q^2+q+1)"},
    "t14": {"d1": "(q+1)^2*(q-1)^3*q^7*(q^2+q+1)*(q^2+1)^2", "d2": "-(q-1)^2*q^6*(q+1)^2*(q^2+q+1)*(q^2+1)^2"},
    "t15": {"d1": "(q+1)^2*(q-1)^3*q^7*(q^2+q+1)*(q^2+1)^2", "d2": "-(2*q+1)*q^6*(q+1)^2*(q-1)^3*(q^2+1)*(q^2+q+1)"},
    "t16": {"d1": "(q+1)*(q-1)*q^7*(q^2+1)*(q^3-1)", "d2": "-(q+1)*q^6*(q^2+1)*(q^3-1)"},
    # the reference Q^1 entry has (q-1)^2 (q+1); see REFERENCE_T17_Q1
    "t17": {"d1": "(q-1)*(q+1)^2*q^8*(q^2+1)*(q^3-1)", "d2": "-2*(q+1)^2*(q-1)^2*q^6*(q^2+1)*(q^3-1)"},
    "t18": {"d1": "(q+1)^2*(q-1)^2*q^7*(q^2+1)*(q^3-1)", "d2": "-(q+1)^2*(q-1)^2*q^6*(q^2+1)*(q^3-1)"},
    "t19": {"d1": "(q+1)^2*(q-1)^2*q^7*(q^2+1)*(q^3-1)", "d2": "-(q+1)^2*(q-1)^2*q^6*(q^2+1)*(q^3-1)"},
    "t20": {"d1": "(q+1)^2*(q-1)*q^7*(q^2+1)*(q^3-1)^2", "d2": "-2*(q+1)^2*q^5*(q-1)^2*(q^2+1)*(q^3-1)^2"},
    "t21": {"d1": "(q-1)^2*(q+1)^2*q^8*(q^2+1)*(q^2+q+1)", "d2": "-2*(q+1)^2*(q-1)^3*q^6*(q^2+1)*(q^2+q+1)"},
    "t22": {"d1": "(q-1)^3*(q+1)^3*q^8*(q^2+1)*(q^2+q+1)", "d2": "-2*(q+1)^3*(q-1)^4*q^6*(q^2+1)*(q^2+q+1)"},
    "t2p": {
        "d1": "(q+1)^2*(q-1)^4*q^8*(q^2+q+1)*(q^2+1)^2",
        "d2": "(q+1)^2*(q-1)^3*q^8*(q^2+q+1)*(q^2+1)^2",
        "d4": "-(q+1)^3*(q-1)^4*q^6*(q^2+q+1)*(q^2+1)^2",
    },
}

REFERENCE_T17_Q1 = "(q-1)^2*(q+1)*q^8*(q^2+1)*(q^3-1)"

KAPPA_BASE = {
    "k1": {"d1": "(q-1)^3*(q+1)^3*q^12*(q^2+1)*(q^2+q+1)^2", "d2": "(q-1)^2*(q+1)^2*q^12*(q^2+1)*(q^2+q+1)^2", "d4": "(q+1)^2*q^13*(q^2+1)^2*(q^2+q+1)^2"},
    "k2": {"d1": "(q+1)^2*(q-1)^3*q^11*(q^2+1)*(q^2+q+1)^2", "d2": "(q+1)*(q-1)^2*q^11*(q^2+1)*(q^2+q+1)^2", "d4": "(q+1)*q^12*(q^2+1)^2*(q^2+q+1)^2"},
    "k3": {"d1": "(q+1)*(q-1)^3*q^10*(q^2+1)*(q^2+q+1)^2", "d2": "(q-1)^2*q^10*(q^2+1)*(q^2+q+1)^2", "d4": "q^11*(q^2+1)^2*(q^2+q+1)^2"},
    "k4": {"d1": "(q+1)^2*(q-1)^3*q^9*(q^2+1)*(q^2+q+1)", "d2": "(q+1)*(q-1)^2*q^9*(q^2+1)*(q^2+q+1)", "d4": "(q+1)*q^10*(q^2+q+1)*(q^2+1)^2"},
    "k5": {"d1": "(q-1)^2*(q+1)^2*q^12*(q^2+1)^2*(q^2+q+1)^2", "d2": "2*(q+1)^2*q^13*(q^2+1)^2*(q^2+q+1)^2"},
    "k6": {"d1": "(q+1)*(q-1)^2*q^11*(q^2+1)^2*(q^2+q+1)^2", "d2": "2*(q+1)*q^12*(q^2+1)^2*(q^2+q+1)^2"},
    "k7": {"d1": "(q-1)^2*q^10*(q^2+1)^2*(q^2+q+1)^2", "d2": "2*q^11*(q^2+1)^2*(q^2+q+1)^2"},
    "k8": {"d1": "(q+1)*(q-1)^2*q^9*(q^2+q+1)*(q^2+1)^2", "d2": "2*(q+1)*q^10*(q^2+q+1)*(q^2+1)^2"},
    "k9": {"d1": "(q-1)^2*(q+1)^2*q^10*(q^2+1)*(q^2+q+1)^2", "d2": "(q+1)^2*q^11*(q^2+1)*(q^2+q+1)^2"},
    "k10": {"d1": "(q+1)*(q-1)^2*q^9*(q^2+1)*(q^2+q+1)^2", "d2": "(q+1)*q^10*(q^2+1)*(q^2+q+1)^2"},
}

# action-sensitive part of the irreducible class: a (Q^1 - Q^N/N) + b (Q^2 - Q^4/2)
KAPPA_IRR_FIXED = {
    "k1": ("(q-1)^3*(q+1)^3*q^12*(q^2+1)*(q^2+q+1)^2", "(q^2-1)^2*q^8*(q^2+1)*(q^3-1)*(q^5+2*q^4-3*q^3-3*q^2-3*q-3)"),
    "k2": ("(q+1)^2*(q-1)^3*q^11*(q^2+1)*(q^2+q+1)^2", "-(q+1)^2*(q-1)^3*q^7*(q^2+1)^2*(q^2+q+1)^2"),
    "k3": ("q^10*(q^4-1)*(q^3-1)^2-(q+1)^2*(q-1)^3*q^8*(q^3-1)*(q^2+1)^2", "-(q^2-1)*q^6*(q^2+1)*(q^3-1)*(q^7+2*q^6-q^5+q^3-4*q^2-q+1)"),
    "k4": ("(q+1)^2*(q-1)^3*q^9*(q^2+1)*(q^2+q+1)", "-(q+1)^2*(q-1)^3*q^7*(2*q^2+1)*(q^2+1)*(q^2+q+1)"),
    "k5": ("(q+1)^2*(q-1)^3*q^8*(q^2+1)*(q^2+q+1)*(q^7+2*q^6+4*q^5+5*q^4-6*q^3-6*q^2-6*q-6)", None),
    "k6": ("(q+1)^2*(q-1)^3*q^7*(q^2+1)*(q^2+q+1)^2*(q^4-2*q^2-2)", None),
    "k7": ("-(q+1)^2*(q-1)^3*q^6*(q^2+1)*(q^2+q+1)*(q^5+2*q^4-q^3+3*q^2+2*q-2)", None),
    "k8": ("-(q+1)^2*(q-1)^3*q^7*(3*q^2+2)*(q^2+1)*(q^2+q+1)", None),
    "k9": ("(q-1)^2*(q+1)^2*q^10*(q^2+1)*(q^2+q-5)*(q^2+q+1)", None),
    "k10": ("-(q+1)^2*(q-1)^3*q^7*(q^2+1)*(q^2+q+1)*(q^2+q+3)", None),
}

# action-sensitive part of the reducible class for k1, k2, k4: c (Q^2 - Q^4/2)
KAPPA_RED_FIXED = {
    "k1": "3*(q-1)^2*(q+1)^2*q^8*(q^2+1)*(q^2+q+1)*(2*q^4-1)",
    "k2": "(q+1)*(q-1)^2*q^7*(q^2+1)*(q^2+q+1)^2*(2*q^4-1)",
    "k4": "(q+1)*(q-1)^2*q^7*(q^2+1)*(q^2+q+1)*(2*q^4-1)",
}


def build(order: int, terms: dict) -> object:
    return C(order, **terms)


def irr_fixed(order: int, a: str, b: str | None):
    out = {1: P(a), order: -P(a) * Fraction(1, order)}
    if b is not None:
        out[2] = P(b)
        out[4] = out[4] - P(b) * Fraction(1, 2)
    from eqmotive.eqring import EqClass

    return EqClass(order, out)


def red_fixed(c: str):
    from eqmotive.eqring import EqClass

    return EqClass(4, {2: P(c), 4: -P(c) * Fraction(1, 2)})
