"""Adjacency spectra, energy, spectral radius and exact closed-walk counts."""

from dataclasses import dataclass
from itertools import islice

import numpy as np

from .errors import ConvergenceError, DisconnectedGraphError, TraceOverflowError
from .graph import is_connected

DEFAULT_TOL = 1e-10
MAX_TRACE_POWER = 16
_INT64_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple  # descending
    n: int

    def __iter__(self):
        return iter(self.eigenvalues)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.eigenvalues[i]


def eigenvalues(g, tol=DEFAULT_TOL):
    """All adjacency eigenvalues, sorted descending.

    Raises ConvergenceError if LAPACK fails or any eigenpair has residual
    ``||Av - lv|| > tol * ||A||``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = g.adjacency.astype(float)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"symmetric eigensolver failed: {exc}") from exc
    scale = max(np.abs(w).max(initial=0.0), 1.0)
    residual = np.linalg.norm(a @ v - v * w, axis=0).max(initial=0.0)
    if not np.isfinite(residual) or residual > tol * scale:
        raise ConvergenceError(f"eigenpair residual {residual:.3g} exceeds {tol * scale:.3g}")
    return Spectrum(tuple(float(x) for x in w[::-1]), g.n)


def energy_exact(g, tol=DEFAULT_TOL):
    return float(sum(abs(x) for x in eigenvalues(g, tol)))


def require_connected(g, what="this operation"):
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def spectral_radius(g, tol=DEFAULT_TOL, max_iter=20000):
    """Perron eigenvalue by power iteration on ``A + I``.

    The unit shift separates ``l1`` from ``-l1`` on bipartite graphs.  The
    start vector is all-ones, which is exact for regular graphs and never
    orthogonal to the positive Perron vector.
    """
    require_connected(g, "spectral_radius")
    if g.m == 0:
        return 0.0
    a = g.adjacency.astype(float)
    scale = max(g.degrees)
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    for _ in range(max_iter):
        ax = a @ x
        mu = float(x @ ax) / float(x @ x)
        if np.linalg.norm(ax - mu * x) <= tol * scale:
            return mu
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def _walk_power_bound(g, p):
    # every entry of A^k is at most Delta^(k-1); tr A^p <= n * Delta^p
    delta = max(g.degrees, default=0)
    return g.n * delta**p


def trace_power(g, p, max_power=MAX_TRACE_POWER):
    """Exact ``tr(A^p)``, the number of closed walks of length ``p``."""
    if p < 0:
        raise ValueError("p must be non-negative")
    if p > max_power:
        raise ValueError(f"p={p} exceeds the configured cap {max_power}")
    if p == 0:
        return g.n
    if _walk_power_bound(g, p) > _INT64_LIMIT:
        raise TraceOverflowError(f"tr A^{p} may exceed 64-bit range for this graph")
    a = g.adjacency
    half = np.linalg.matrix_power(a, p // 2) if p >= 2 else np.eye(g.n, dtype=np.int64)
    other = half @ a if p % 2 else half
    return int((half * other).sum())


def iter_even_traces(g):
    """Yield exact ``tr A^0, tr A^2, tr A^4, ...`` as Python ints, forever.

    Walk matrices stay in int64 while provably safe and switch to
    arbitrary-precision object arrays afterwards, so nothing wraps.
    """
    yield g.n
    a = g.adjacency
    delta = max(g.degrees, default=0)
    walks = np.eye(g.n, dtype=np.int64)
    exact = False
    k = 0
    while True:
        k += 1
        if not exact and g.n * delta ** (2 * k) > _INT64_LIMIT:
            walks = walks.astype(object)
            exact = True
        if exact:
            # column j of W @ A is the sum of W's columns over neighbors of j
            walks = np.stack(
                [walks[:, list(nb)].sum(axis=1) if nb else np.zeros(g.n, dtype=object)
                 for nb in g.neighbors],
                axis=1,
            )
        else:
            walks = walks @ a
        yield int((walks * walks).sum())


def even_traces(g, kmax):
    """Exact ``[tr A^0, tr A^2, ..., tr A^(2*kmax)]``."""
    return list(islice(iter_even_traces(g), kmax + 1))
