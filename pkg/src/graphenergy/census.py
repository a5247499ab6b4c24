"""Counts of the small subgraphs behind tr A^2, tr A^4 and tr A^6.

All counts are subgraph counts: copies of the fragment as a (not
necessarily induced) subgraph, i.e. injective edge-preserving maps divided
by the fragment's automorphism count.

    tr A^2 = 2m
    tr A^4 = 2m + 4 P3 + 8 C4
    tr A^6 = 2m + 12 P3 + 24 C3 + 48 C4 + 12 S13 + 6 P4 + 36 D4 + 12 F + 24 H + 12 C6
"""

from dataclasses import asdict, dataclass
from math import comb

import numpy as np

from .errors import CensusInconsistencyError, PreconditionError
from .spectral import trace_power

FIELDS = ("m", "P3", "C3", "C4", "P4", "S13", "D4", "F", "H", "C6")

# fragment edge lists on vertices 0..k-1
FRAGMENTS = {
    "m": [(0, 1)],
    "P3": [(0, 1), (1, 2)],
    "C3": [(0, 1), (1, 2), (2, 0)],
    "C4": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "P4": [(0, 1), (1, 2), (2, 3)],
    "S13": [(0, 1), (0, 2), (0, 3)],
    "D4": [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    "F": [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
    "H": [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
    "C6": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
}

BRUTEFORCE_MAX_N = 60


@dataclass(frozen=True)
class SubgraphCensus:
    m: int = 0
    P3: int = 0
    C3: int = 0
    C4: int = 0
    P4: int = 0
    S13: int = 0
    D4: int = 0
    F: int = 0
    H: int = 0
    C6: int = 0

    def as_dict(self):
        return asdict(self)


# -- brute force ------------------------------------------------------------

def _adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def count_embeddings(pattern_edges, target_adj):
    """Injective maps pattern -> target sending every pattern edge to an edge."""
    k = 1 + max(max(e) for e in pattern_edges)
    padj = _adjacency_sets(k, pattern_edges)
    # order pattern vertices so each (after the first) touches an earlier one
    order = [0]
    while len(order) < k:
        for v in range(k):
            if v not in order and padj[v] & set(order):
                order.append(v)
                break
        else:
            raise ValueError("pattern must be connected")
    back = [[order.index(u) for u in padj[v] if order.index(u) < i] for i, v in enumerate(order)]

    image = [None] * k
    used = set()

    def extend(i):
        if i == k:
            return 1
        anchors = [image[j] for j in back[i]]
        if anchors:
            candidates = set(target_adj[anchors[0]])
            for a in anchors[1:]:
                candidates &= target_adj[a]
        else:
            candidates = range(len(target_adj))
        total = 0
        for c in candidates:
            if c in used:
                continue
            image[i] = c
            used.add(c)
            total += extend(i + 1)
            used.discard(c)
        return total

    return extend(0)


def _automorphisms(pattern_edges):
    k = 1 + max(max(e) for e in pattern_edges)
    return count_embeddings(pattern_edges, _adjacency_sets(k, pattern_edges))


def census_bruteforce(g, max_n=BRUTEFORCE_MAX_N):
    """Exhaustive embedding search; independent of every closed form below."""
    if g.n > max_n:
        raise PreconditionError(f"brute-force census limited to n <= {max_n}, got n={g.n}")
    if g.m == 0:
        return SubgraphCensus()
    adj = _adjacency_sets(g.n, g.edges)
    counts = {}
    for name, pattern in FRAGMENTS.items():
        emb = count_embeddings(pattern, adj)
        aut = _automorphisms(pattern)
        if emb % aut:
            raise CensusInconsistencyError(f"{name}: {emb} embeddings not divisible by |Aut|={aut}")
        counts[name] = emb // aut
    return SubgraphCensus(**counts)


# -- closed forms -----------------------------------------------------------

def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise CensusInconsistencyError(f"{what}: {num} not divisible by {den}")
    return q


def census_formulas(g):
    """Fast census from degrees, codegrees and exact traces.

    P4, D4, F and H come from per-edge triangle counts and per-vertex 4-cycle
    counts; C6 is whatever is left of tr A^6 once everything else is removed.
    """
    m = g.m
    if m == 0:
        return SubgraphCensus()
    t6 = trace_power(g, 6)  # fails fast on overflow, before any O(n^3) work
    a = g.adjacency
    deg = a.sum(axis=1)
    a2 = a @ a  # codegrees off the diagonal
    edges = np.array(sorted(g.edges), dtype=np.intp)
    eu, ev = edges[:, 0], edges[:, 1]
    tri_on_edge = a2[eu, ev]

    p3 = int(sum(comb(int(k), 2) for k in deg))
    s13 = int(sum(comb(int(k), 3) for k in deg))
    c3 = _exact_div(trace_power(g, 3), 6, "C3")
    c4 = _exact_div(trace_power(g, 4) - 2 * m - 4 * p3, 8, "C4")

    # paths u'-u-v-v' through middle edge uv, minus closed ones (u' = v')
    p4 = int(((deg[eu] - 1) * (deg[ev] - 1)).sum()) - 3 * c3
    # one diamond per (edge, pair of triangles on it)
    d4 = int((tri_on_edge * (tri_on_edge - 1) // 2).sum())
    # bowtie: two triangles at v sharing only v
    tri_at_vertex = (a2 * a).sum(axis=1) // 2
    h = int((tri_at_vertex * (tri_at_vertex - 1) // 2).sum()) - 2 * d4
    # 4-cycle through v plus a pendant at v off the cycle; each chord of the
    # cycle is one diamond and removes one pendant choice at both its ends
    off = a2 - np.diag(np.diag(a2))
    c4_at_vertex = (off * (off - 1) // 2).sum(axis=1)
    f = int((c4_at_vertex * (deg - 2)).sum()) - 2 * d4

    rest = (2 * m + 12 * p3 + 24 * c3 + 48 * c4 + 12 * s13
            + 6 * p4 + 36 * d4 + 12 * f + 24 * h)
    c6 = _exact_div(t6 - rest, 12, "C6")
    counts = dict(m=m, P3=p3, C3=c3, C4=c4, P4=p4, S13=s13, D4=d4, F=f, H=h, C6=c6)
    for name, value in counts.items():
        if value < 0:
            raise CensusInconsistencyError(f"{name} came out negative ({value})")
    return SubgraphCensus(**counts)


def moments_from_census(c, n=None):
    """``(tr A^2, tr A^4, tr A^6)`` rebuilt from fragment counts."""
    t2 = 2 * c.m
    t4 = 2 * c.m + 4 * c.P3 + 8 * c.C4
    t6 = (2 * c.m + 12 * c.P3 + 24 * c.C3 + 48 * c.C4 + 12 * c.S13
          + 6 * c.P4 + 36 * c.D4 + 12 * c.F + 24 * c.H + 12 * c.C6)
    return t2, t4, t6
