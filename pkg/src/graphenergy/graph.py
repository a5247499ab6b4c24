"""Simple undirected graphs: construction, file formats, generators, checks."""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import GraphFormatError

GRAPH6_HEADER = b">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.  Use
    :meth:`from_edges` to build one from arbitrary (possibly duplicated)
    pairs.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"edge {(u, v)} is not normalized (need u < v)")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, edges, n=None):
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        if n is None:
            n = 1 + max((v for _, v in norm), default=0)
        return cls(n, frozenset(norm))

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        a = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            idx = np.array(sorted(self.edges), dtype=np.intp)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def neighbors(self):
        nbrs = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(x) for x in nbrs)

    @property
    def degrees(self):
        return [len(x) for x in self.neighbors]

    def relabel(self, perm):
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        return Graph.from_edges(((perm[u], perm[v]) for u, v in self.edges), n=self.n)


@dataclass(frozen=True)
class ValidationReport:
    is_simple: bool
    is_connected: bool
    n: int
    m: int
    degree_sequence: list


def is_connected(g):
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def validate(g):
    a = g.adjacency
    simple = bool(np.array_equal(a, a.T) and not a.diagonal().any() and a.max(initial=0) <= 1)
    return ValidationReport(
        is_simple=simple,
        is_connected=is_connected(g),
        n=g.n,
        m=g.m,
        degree_sequence=g.degrees,
    )


# -- edge lists -------------------------------------------------------------

def parse_edge_list(text):
    """Parse ``u v`` lines; ``#`` comments and blank lines are skipped.

    An optional first data line ``n <count>`` fixes the vertex count, which
    otherwise is one more than the largest index seen.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    edges = set()
    max_index = -1
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not seen_data and tokens[0] == "n":
            seen_data = True
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            n = _parse_index(tokens[1], lineno)
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        seen_data = True
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex indices, got {len(tokens)} tokens", lineno)
        u, v = (_parse_index(t, lineno) for t in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.add((u, v) if u < v else (v, u))
        max_index = max(max_index, u, v)
    if n is None:
        if max_index < 0:
            raise GraphFormatError("no edges and no 'n <count>' header")
        n = max_index + 1
    elif max_index >= n:
        raise GraphFormatError(f"vertex {max_index} out of range for header n={n}")
    return Graph(n, frozenset(edges))


def _parse_index(token, lineno):
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise GraphFormatError(f"negative vertex index {value}", lineno)
    return value


def to_edge_list(g):
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


# -- graph6 -----------------------------------------------------------------

def _encode_n(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"n={n} too large for graph6")


def _decode_n(data):
    """Return ``(n, header_length)``."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        digits, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        digits, start = data[1:4], 4
    n = 0
    for d in digits:
        n = (n << 6) | (d - 63)
    return n, start


def parse_graph6(data):
    """Decode one graph6 record (the ``>>graph6<<`` header is optional)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} at offset {pos} outside [63, 126]")
    n, start = _decode_n(data)
    if n < 1:
        raise GraphFormatError("graph6 encodes an empty graph")
    body = data[start:]
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(body) != nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("nonzero padding bits")
    return Graph(n, frozenset(edges))


def to_graph6(g):
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def read_graph(path, fmt="edgelist"):
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "edgelist":
        return parse_edge_list(data)
    if fmt == "graph6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown graph format {fmt!r}")


# -- generators -------------------------------------------------------------

GENERATORS = ("cycle", "path", "star", "complete", "dodecahedron")
_MIN_N = {"cycle": 3, "path": 1, "star": 2, "complete": 1}


def generate(kind, n=None):
    """Named graph families.

    cycle: i -- (i+1 mod n).  path: i -- i+1.  star: center 0, leaves 1..n-1
    (``n`` counts all vertices).  complete: all pairs.  dodecahedron: the
    generalized Petersen graph GP(10, 2), 20 vertices, ``n`` ignored.
    """
    if kind == "dodecahedron":
        outer = [(i, (i + 1) % 10) for i in range(10)]
        spokes = [(i, i + 10) for i in range(10)]
        inner = [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
        return Graph.from_edges(outer + spokes + inner, n=20)
    if kind not in _MIN_N:
        raise ValueError(f"unsupported graph kind {kind!r}; choose from {', '.join(GENERATORS)}")
    if n is None or n < _MIN_N[kind]:
        raise ValueError(f"{kind} needs n >= {_MIN_N[kind]}, got {n}")
    if kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "star":
        edges = [(0, i) for i in range(1, n)]
    else:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(edges, n=n)


def parse_gen_spec(spec):
    """``"cycle:5"`` -> ``generate("cycle", 5)``."""
    kind, _, size = spec.partition(":")
    if size:
        try:
            n = int(size)
        except ValueError:
            raise ValueError(f"bad size in generator spec {spec!r}") from None
    else:
        n = None
    return generate(kind, n)
