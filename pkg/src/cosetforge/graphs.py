"""Simple graphs and black/white colored bipartite (Levi) graphs.

Vertices are the integers 0..n-1.  In a :class:`ColoredBipartiteGraph`
color 0 is black (points) and color 1 is white (lines); every edge joins a
black vertex to a white one.
"""

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import DuplicateEdge, LoopEdge, MalformedRecord, NotBipartite, UnknownName

BLACK = 0
WHITE = 1
_COLOR_NAMES = {"black": BLACK, "white": WHITE, "b": BLACK, "w": WHITE, "0": BLACK, "1": WHITE}


def _normalize_edges(n, pairs):
    seen = set()
    edges = []
    for u, v in pairs:
        u, v = int(u), int(v)
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedRecord(f"edge ({u}, {v}) outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
        edges.append(e)
    return tuple(sorted(edges))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph."""

    n_vertices: int
    edges: tuple
    id: str = None
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n, pairs, id=None):
        return cls(n, _normalize_edges(n, pairs), id)

    @property
    def n_edges(self):
        return len(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(a) for a in self.adjacency]

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def components(self):
        return _components(self.n_vertices, self.adjacency)

    def is_connected(self):
        return len(self.components()) <= 1

    def girth(self):
        return _girth(self.n_vertices, self.adjacency)

    def relabel(self, perm):
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.n_vertices, tuple(sorted(_edge(perm[u], perm[v]) for u, v in self.edges)), self.id)


def _edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColoredBipartiteGraph(Graph):
    """Bipartite graph with fixed black (0) and white (1) color classes.

    ``labels`` optionally names the vertices (coset representatives for Levi
    graphs of coset geometries); it only affects DOT output.
    """

    color: tuple = ()
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        super().__post_init__()
        if len(self.color) != self.n_vertices:
            raise MalformedRecord("coloring must assign every vertex")
        for u, v in self.edges:
            if self.color[u] == self.color[v]:
                raise NotBipartite(f"edge ({u}, {v}) joins two vertices of one color")

    @classmethod
    def from_edges(cls, n, pairs, coloring=None, id=None, labels=None):
        edges = _normalize_edges(n, pairs)
        if coloring is None:
            color = bipartition(n, edges)
        else:
            color = tuple(_color_value(coloring[v]) for v in range(n))
        return cls(n, edges, id, color, labels)

    @classmethod
    def from_graph(cls, g, coloring=None):
        return cls.from_edges(g.n_vertices, g.edges, coloring, g.id)

    @property
    def black(self):
        return tuple(v for v in range(self.n_vertices) if self.color[v] == BLACK)

    @property
    def white(self):
        return tuple(v for v in range(self.n_vertices) if self.color[v] == WHITE)

    def colored_edges(self):
        """Edges as (black, white) pairs in lexicographic order."""
        out = [(u, v) if self.color[u] == BLACK else (v, u) for u, v in self.edges]
        return sorted(out)

    def base_edge(self):
        """Lexicographically least adjacent (black, white) pair."""
        edges = self.colored_edges()
        return edges[0] if edges else None

    def relabel(self, perm):
        color = [0] * self.n_vertices
        for v in range(self.n_vertices):
            color[perm[v]] = self.color[v]
        labels = None
        if self.labels is not None:
            labels = [None] * self.n_vertices
            for v in range(self.n_vertices):
                labels[perm[v]] = self.labels[v]
            labels = tuple(labels)
        edges = tuple(sorted(_edge(perm[u], perm[v]) for u, v in self.edges))
        return ColoredBipartiteGraph(self.n_vertices, edges, self.id, tuple(color), labels)

    def swap_colors(self):
        return ColoredBipartiteGraph(
            self.n_vertices, self.edges, self.id, tuple(1 - c for c in self.color), self.labels
        )

    def black_first(self):
        """Relabeled copy with black vertices numbered before white ones (order kept)."""
        order = list(self.black) + list(self.white)
        perm = [0] * self.n_vertices
        for new, old in enumerate(order):
            perm[old] = new
        return self.relabel(perm)

    def is_semiregular(self):
        bd = {self.degree(v) for v in self.black}
        wd = {self.degree(v) for v in self.white}
        return len(bd) <= 1 and len(wd) <= 1


def _color_value(c):
    if isinstance(c, int) and c in (BLACK, WHITE):
        return c
    key = str(c).strip().lower()
    if key not in _COLOR_NAMES:
        raise MalformedRecord(f"unknown color {c!r}")
    return _COLOR_NAMES[key]


def _components(n, adj):
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _girth(n, adj):
    best = math.inf
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def bipartition(n, edges):
    """Proper 2-coloring; the lowest id in each component is black."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [None] * n
    for s in range(n):
        if color[s] is not None:
            continue
        color[s] = BLACK
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(f"odd cycle through edge ({u}, {v})")
    return tuple(color)


def from_edge_list(pairs, coloring=None, n=None, id=None):
    pairs = [tuple(p) for p in pairs]
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
        if coloring is not None:
            n = max(n, 1 + max(coloring))
    return ColoredBipartiteGraph.from_edges(n, pairs, coloring, id)


def is_connected(g):
    return g.is_connected()


def girth(g):
    return g.girth()


def subdivide(g):
    """Insert one white vertex into every edge; original vertices become black."""
    n = g.n_vertices
    pairs = []
    for k, (u, v) in enumerate(g.edges):
        pairs.append((u, n + k))
        pairs.append((v, n + k))
    color = [BLACK] * n + [WHITE] * g.n_edges
    name = f"subdivision({g.id})" if g.id else None
    return ColoredBipartiteGraph.from_edges(n + g.n_edges, pairs, color, name)


def dual(g):
    """Same graph with black and white exchanged."""
    return g.swap_colors()


def is_configuration(g):
    """Semi-regular with girth at least 6."""
    return g.is_semiregular() and g.girth() >= 6


def disjoint_union(a, b):
    n = a.n_vertices
    pairs = list(a.edges) + [(u + n, v + n) for u, v in b.edges]
    color = list(a.color) + list(b.color)
    return ColoredBipartiteGraph.from_edges(n + b.n_vertices, pairs, color)


# -- built-in fixtures ----------------------------------------------------------


def _complete_bipartite(p, q, name):
    pairs = [(i, p + j) for i in range(p) for j in range(q)]
    return ColoredBipartiteGraph.from_edges(p + q, pairs, [BLACK] * p + [WHITE] * q, name)


def _cube():
    # vertices of {0,1}^3; even-weight words are black (ids 0..3), odd are white (4..7)
    words = [w for w in range(8) if bin(w).count("1") % 2 == 0]
    words += [w for w in range(8) if bin(w).count("1") % 2 == 1]
    index = {w: i for i, w in enumerate(words)}
    pairs = [(index[w], index[w ^ (1 << b)]) for w in words[:4] for b in range(3)]
    return ColoredBipartiteGraph.from_edges(8, pairs, [BLACK] * 4 + [WHITE] * 4, "cube")


def _heawood():
    # points 0..6 and lines 7..13 of the Fano plane; line j is {j, j+1, j+3} mod 7
    pairs = [(p % 7, 7 + j) for j in range(7) for p in (j, j + 1, j + 3)]
    return ColoredBipartiteGraph.from_edges(14, pairs, [BLACK] * 7 + [WHITE] * 7, "heawood")


def _petersen():
    # outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, pairs, "petersen")


def _petersen_subdivision():
    g = subdivide(_petersen())
    return ColoredBipartiteGraph(g.n_vertices, g.edges, "petersen_subdivision", g.color)


BUILTINS = {
    "k33": lambda: _complete_bipartite(3, 3, "k33"),
    "k44": lambda: _complete_bipartite(4, 4, "k44"),
    "cube": _cube,
    "heawood": _heawood,
    "petersen": _petersen,
    "petersen_subdivision": _petersen_subdivision,
}

BUILTIN_DOCS = {
    "k33": "K3,3; black 0-2, white 3-5",
    "k44": "K4,4; black 0-3, white 4-7",
    "cube": "3-cube; even-weight words black 0-3, odd-weight white 4-7",
    "heawood": "Fano plane Levi graph; points 0-6, line j = 7+j = {j, j+1, j+3 mod 7}",
    "petersen": "Petersen graph, uncolored (not bipartite); outer 0-4, inner 5-9",
    "petersen_subdivision": "subdivided Petersen; black 0-9 original, white 10-24 edges",
}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise UnknownName(f"unknown builtin graph {name!r}; choose from {sorted(BUILTINS)}") from None


# -- graph6 -----------------------------------------------------------------------


def _encode_n(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g, header=False):
    n = g.n_vertices
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (">>graph6<<" if header else "") + _encode_n(n) + body


def _decode_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedRecord("empty graph6 record")
    data = []
    for ch in s:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise MalformedRecord(f"invalid graph6 character {ch!r}")
        data.append(x)
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    else:
        raise MalformedRecord("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise MalformedRecord(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                pairs.append((i, j))
            k += 1
    return n, pairs


def parse_graph6_plain(text):
    n, pairs = _decode_graph6(text)
    return Graph.from_edges(n, pairs)


def parse_graph6(text, id=None):
    """Decode one graph6 record into a colored bipartite graph (vertex order kept)."""
    n, pairs = _decode_graph6(text)
    return ColoredBipartiteGraph.from_edges(n, pairs, None, id)


def read_graph6_file(path):
    """Yield (line number, record text) for every non-empty, non-comment line."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if s and not s.startswith("#"):
                yield lineno, s


# -- plain edge-list text format --------------------------------------------------


def parse_edge_list_text(text, id=None):
    """One ``u v`` pair per line; ``c v black|white`` lines fix colors; ``#`` comments."""
    pairs = []
    coloring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            if len(parts) != 3:
                raise MalformedRecord(f"line {lineno}: expected 'c <vertex> <color>'")
            coloring[int(parts[1])] = _color_value(parts[2])
        elif len(parts) == 2:
            pairs.append((int(parts[0]), int(parts[1])))
        else:
            raise MalformedRecord(f"line {lineno}: expected 'u v'")
    n = 1 + max([max(p) for p in pairs] + list(coloring), default=-1)
    if coloring:
        if len(coloring) != n:
            missing = sorted(set(range(n)) - set(coloring))
            raise MalformedRecord(f"colors given for some vertices but not for {missing}")
        return ColoredBipartiteGraph.from_edges(n, pairs, coloring, id)
    return ColoredBipartiteGraph.from_edges(n, pairs, None, id)


def write_edge_list_text(g):
    lines = [f"{u} {v}" for u, v in g.edges]
    lines += [f"c {v} {'black' if c == BLACK else 'white'}" for v, c in enumerate(g.color)]
    return "\n".join(lines) + "\n"


def to_dot(g, name="levi"):
    out = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        label = g.labels[v] if g.labels is not None else str(v)
        fill = "black" if g.color[v] == BLACK else "white"
        font = "white" if g.color[v] == BLACK else "black"
        out.append(
            f'  {v} [label="{label}", style=filled, fillcolor={fill}, fontcolor={font}];'
        )
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
