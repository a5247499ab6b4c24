"""Structural upper bounds on graph energy.

``bound1``, ``bound2`` and ``bound3`` are the first three truncations of the
energy series, written in terms of fragment counts.  Expanding the third
truncation with the tr A^6 identity gives, with ``L`` the spectral radius:

    ======  ==========================
    term    coefficient
    ======  ==========================
    n       5L / 16
    m       (15L^4 - 5L^2 + 1) / (8L^5)
    P3      -(5L^2 - 3) / (4L^5)
    C4      -(10L^2 - 12) / (4L^5)
    C3      3 / (2L^5)
    P4      3 / (8L^5)
    S13     3 / (4L^5)
    D4      9 / (4L^5)
    F       3 / (4L^5)
    H       3 / (2L^5)
    C6      3 / (4L^5)
    ======  ==========================

``bound3`` itself is evaluated through the traces, not this table; the
table is kept for :func:`bound3_coefficients` and the fullerene form.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt
from typing import Optional

from .census import SubgraphCensus, census_formulas, moments_from_census
from .errors import PreconditionError
from .graph import is_connected
from .series import binomial_half, series_coefficient_alt
from .spectral import energy_exact, require_connected, spectral_radius


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    lambda1: float
    energy: float
    mcclelland: float
    bound1: float
    bound2: float
    bound3: float
    fullerene_bound: Optional[float]
    census: SubgraphCensus


def mcclelland(g):
    return sqrt(2 * g.m * g.n)


def _lambda1(g, lambda1):
    require_connected(g, "energy bounds")
    if g.m == 0:
        raise PreconditionError("energy bounds need at least one edge")
    return spectral_radius(g) if lambda1 is None else lambda1


def bound1(g, lambda1=None):
    lam = _lambda1(g, lambda1)
    return lam * g.n / 2 + g.m / lam


def bound2(g, lambda1=None, census=None):
    lam = _lambda1(g, lambda1)
    c = census_formulas(g) if census is None else census
    return (3 * lam / 8 * g.n
            + (6 * lam**2 - 1) / (4 * lam**3) * c.m
            - c.P3 / (2 * lam**3)
            - c.C4 / lam**3)


def truncated_series_from_moments(n, moments, lam, K):
    """``l1 * sum_{k<=K} C(1/2,k) tr B^k`` with ``moments = (tr A^2, tr A^4, ...)``."""
    traces = (n,) + tuple(moments)
    if K > len(traces) - 1:
        raise ValueError(f"K={K} needs {K} moments, got {len(moments)}")
    total = 0.0
    for k in range(K + 1):
        tr_bk = sum((-1) ** (k - l) * comb(k, l) * traces[l] / lam ** (2 * l) for l in range(k + 1))
        total += float(binomial_half(k)) * tr_bk
    return lam * total


def bound3(g, lambda1=None, census=None):
    """Third truncation, evaluated from census-derived tr A^2, tr A^4, tr A^6."""
    lam = _lambda1(g, lambda1)
    c = census_formulas(g) if census is None else census
    return truncated_series_from_moments(g.n, moments_from_census(c, g.n), lam, 3)


def bound3_coefficients(lam):
    """Per-term weights of the third truncation (see the module table)."""
    l5 = lam**5
    return {
        "n": 5 * lam / 16,
        "m": (15 * lam**4 - 5 * lam**2 + 1) / (8 * l5),
        "P3": -(5 * lam**2 - 3) / (4 * l5),
        "C4": -(10 * lam**2 - 12) / (4 * l5),
        "C3": 3 / (2 * l5),
        "P4": 3 / (8 * l5),
        "S13": 3 / (4 * l5),
        "D4": 9 / (4 * l5),
        "F": 3 / (4 * l5),
        "H": 3 / (2 * l5),
        "C6": 3 / (4 * l5),
    }


def evaluate_coefficients(coefficients, n, census):
    values = census.as_dict()
    values["n"] = n
    return sum(w * values[name] for name, w in coefficients.items())


def fullerene_check(g, census=None):
    """Name of the first failed fullerene-bound precondition, or None."""
    if not is_connected(g):
        return "connected"
    if any(k != 3 for k in g.degrees):
        return "3-regular"
    c = census_formulas(g) if census is None else census
    if c.C3:
        return "triangle-free"
    if c.C4:
        return "square-free"
    return None


def fullerene_bound(g, lambda1=None, census=None):
    """Third truncation keeping only the n, m, P3, P4, S13 and C6 terms.

    Valid for connected cubic graphs without triangles or squares, where
    every dropped fragment count is zero.
    """
    c = census_formulas(g) if census is None else census
    failed = fullerene_check(g, c)
    if failed:
        raise PreconditionError(f"fullerene bound needs a {failed} graph")
    lam = _lambda1(g, lambda1)
    w = bound3_coefficients(lam)
    kept = {k: w[k] for k in ("n", "m", "P3", "P4", "S13", "C6")}
    return evaluate_coefficients(kept, g.n, c)


def fragment_first_term_exact(eta, k):
    """``(coefficient, power)`` with first-term value ``coefficient / l1^power``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if eta < 0:
        raise ValueError("fragment weight must be non-negative")
    return series_coefficient_alt(k) * Fraction(eta), 2 * k - 1


def fragment_first_term(eta, k, lambda1):
    """Contribution of a fragment in the first series term it appears in.

    ``eta`` is the fragment's weight in tr A^(2k), e.g. 16 for an 8-cycle in
    tr A^8.  The value is ``l1 * C(1/2,k) * eta / l1^(2k)``.
    """
    coef, power = fragment_first_term_exact(eta, k)
    return float(coef) / lambda1**power


def bound_chain_report(g):
    require_connected(g, "bound_chain_report")
    lam = _lambda1(g, None)
    c = census_formulas(g)
    fb = fullerene_bound(g, lam, c) if fullerene_check(g, c) is None else None
    return BoundReport(
        n=g.n,
        m=g.m,
        lambda1=lam,
        energy=energy_exact(g),
        mcclelland=mcclelland(g),
        bound1=bound1(g, lam),
        bound2=bound2(g, lam, c),
        bound3=bound3(g, lam, c),
        fullerene_bound=fb,
        census=c,
    )
