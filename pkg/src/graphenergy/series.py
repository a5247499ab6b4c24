"""Energy as a binomial series in traces of even adjacency powers.

With ``l1`` the spectral radius and ``B = (A / l1)^2 - I`` (spectrum in
``[-1, 0]``)::

    E(G) = tr|A| = l1 * tr sqrt(I + B) = l1 * sum_k C(1/2, k) tr B^k

and ``tr B^k`` expands binomially into ``tr A^(2l) / l1^(2l)``, l <= k.

Evaluating that alternating expansion in floating point loses about
``k * log10(2)`` digits, so the traces are combined exactly: ``l1`` is a
dyadic rational ``p / q``, and scaling every term by ``p^(2W)`` turns the
whole computation into integer forward differences.  Only the final ratio
is rounded.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import comb
from typing import NamedTuple

from .errors import PreconditionError
from .spectral import even_traces, iter_even_traces, require_connected, spectral_radius

DEFAULT_KMAX = 512
DEFAULT_TOL = 1e-9
LAMBDA1_CHECK_TOL = 1e-8


def binomial_half(k):
    """Exact generalized binomial coefficient C(1/2, k)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    c = Fraction(1)
    for i in range(k):
        c *= (Fraction(1, 2) - i) / (i + 1)
    return c


def series_coefficient_alt(k):
    """C(2k, k) (-1)^(k+1) / (4^k (2k - 1)); equals binomial_half(k)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return Fraction(comb(2 * k, k) * (-1) ** (k + 1), 4**k * (2 * k - 1))


@dataclass(frozen=True)
class SeriesExpansion:
    lambda1: float
    b_traces: tuple  # tr B^k, k = 0..K
    partial_sums: tuple  # S_k, k = 0..K
    K: int


class ConvergenceResult(NamedTuple):
    estimate: float
    k_used: int
    converged: bool


def _checked_lambda1(g, lambda1):
    require_connected(g, "the energy series")
    if g.m == 0:
        raise PreconditionError("the energy series needs at least one edge (l1 > 0)")
    reference = spectral_radius(g)
    if lambda1 is None:
        return reference
    if abs(lambda1 - reference) > LAMBDA1_CHECK_TOL:
        raise PreconditionError(
            f"supplied l1={lambda1!r} differs from power iteration value {reference!r}"
        )
    return float(lambda1)


def _scaled_b_traces(traces, lambda1):
    """Integers ``D_k = p^(2W) tr B^k`` for k = 0..W, plus ``p^(2W)``.

    ``traces[l] = tr A^(2l)`` and ``lambda1 = p / q`` exactly.
    """
    p, q = Fraction(lambda1).as_integer_ratio()
    w = len(traces) - 1
    pp, qq = p * p, q * q
    # u_l = tr A^(2l) * q^(2l) * p^(2(W-l)) = p^(2W) tr A^(2l) / l1^(2l)
    row = [t * qq**l * pp ** (w - l) for l, t in enumerate(traces)]
    diffs = [row[0]]
    for _ in range(w):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        diffs.append(row[0])
    return diffs, pp**w


def expansion_from_traces(traces, lambda1):
    """Series data computed purely from ``[tr A^0, tr A^2, ..., tr A^(2K)]``."""
    diffs, scale = _scaled_b_traces(traces, lambda1)
    p, q = Fraction(lambda1).as_integer_ratio()
    w = len(diffs) - 1
    # C(1/2, k) * 4^k is an integer, so 4^W clears every denominator
    denom = q * 4**w * scale
    coef = Fraction(1)
    acc = 0
    sums = []
    for k, d in enumerate(diffs):
        acc += int(coef * 4**w) * d
        sums.append(p * acc / denom)
        coef *= (Fraction(1, 2) - k) / (k + 1)
    b_traces = tuple(d / scale for d in diffs)
    return SeriesExpansion(float(lambda1), b_traces, tuple(sums), len(traces) - 1)


def expand(g, K, lambda1=None):
    if K < 0:
        raise ValueError("K must be non-negative")
    lambda1 = _checked_lambda1(g, lambda1)
    return expansion_from_traces(even_traces(g, K), lambda1)


def trace_b_power(g, lambda1, k):
    """``tr B^k`` from exact integer traces of ``A^0 .. A^(2k)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    lambda1 = _checked_lambda1(g, lambda1)
    diffs, scale = _scaled_b_traces(even_traces(g, k), lambda1)
    return diffs[k] / scale


def partial_sum(g, K, lambda1=None):
    """``S_K = l1 * sum_{k<=K} C(1/2, k) tr B^k``; an upper bound on E(G) for K >= 1."""
    return expand(g, K, lambda1).partial_sums[K]


def converge(g, tol=DEFAULT_TOL, k_max=DEFAULT_KMAX, lambda1=None):
    """Extend the partial sums until two consecutive ones differ by <= tol.

    Graphs with a zero adjacency eigenvalue give ``B`` the eigenvalue -1,
    where the tail decays like ``K^(-1/2)``; those usually stop at ``k_max``
    with ``converged=False``.  The estimate is still a valid upper bound.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    lambda1 = _checked_lambda1(g, lambda1)
    walks = iter_even_traces(g)
    traces = []
    window = min(16, k_max)
    while True:
        traces.extend(islice(walks, window + 1 - len(traces)))
        sums = expansion_from_traces(traces, lambda1).partial_sums
        for k in range(1, window + 1):
            if abs(sums[k] - sums[k - 1]) <= tol:
                return ConvergenceResult(sums[k], k, True)
        if window == k_max:
            return ConvergenceResult(sums[-1], k_max, False)
        window = min(2 * window, k_max)
