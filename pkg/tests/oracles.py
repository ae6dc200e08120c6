"""Independent brute-force reference computations used by the tests.

Nothing here touches the library's stabilizer chains, refinement or
canonical forms; everything is plain enumeration.
"""

import itertools
import random
from collections import deque

import networkx as nx


def mul(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def closure_elements(gens, n):
    e = tuple(range(n))
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def random_group_gens(rng, max_order, degrees=(3, 4, 5, 6), ngens=(1, 2)):
    """Random generators (with brute-force order) of a group of order <= max_order."""
    while True:
        n = rng.choice(degrees)
        gens = []
        for _ in range(rng.choice(ngens)):
            p = list(range(n))
            rng.shuffle(p)
            gens.append(tuple(p))
        elems = closure_elements(gens, n)
        if len(elems) <= max_order:
            return n, gens, elems


def all_subgroups(elements, n):
    """Every subgroup, as frozensets, by closing cyclic subgroups under joins."""
    cyclic = {}
    for g in elements:
        cyclic.setdefault(frozenset(closure_elements([g], n)), g)
    subs = {S: [g] for S, g in cyclic.items()}
    frontier = dict(subs)
    while frontier:
        new = {}
        for a, gens in frontier.items():
            for c, g in cyclic.items():
                if c <= a:
                    continue
                j = frozenset(closure_elements(gens + [g], n))
                if j not in subs and j not in new:
                    new[j] = gens + [g]
        subs.update(new)
        frontier = new
    return set(subs)


def conjugates_of(S, elements):
    return {frozenset(mul(mul(g, s), inv(g)) for s in S) for g in elements}


# -- graphs -------------------------------------------------------------------------


def automorphisms_by_bijections(n, edges, colors=None):
    """All automorphisms by trying every bijection (tiny graphs only)."""
    E = {frozenset(e) for e in edges}
    out = []
    for p in itertools.permutations(range(n)):
        if colors is not None and any(colors[p[v]] != colors[v] for v in range(n)):
            continue
        if all(frozenset((p[u], p[v])) in E for u, v in edges):
            out.append(p)
    return out


def count_automorphisms(adj, colors=None):
    """Plain backtracking, no refinement: extend a partial map vertex by vertex.

    Vertices are visited in breadth-first order so that each one (except the
    first of a component) has an already mapped neighbour whose image
    restricts the candidates.
    """
    n = len(adj)
    sets = [set(a) for a in adj]
    order = []
    parent = {}
    for s in range(n):
        if s in parent:
            continue
        parent[s] = None
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(sets[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
    image = {}
    used = [False] * n
    count = 0

    def ok(v, t):
        if len(sets[v]) != len(sets[t]):
            return False
        if colors is not None and colors[v] != colors[t]:
            return False
        return all((u in sets[v]) == (image[u] in sets[t]) for u in image)

    def extend(i):
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        p = parent[v]
        candidates = range(n) if p is None else sets[image[p]]
        for t in candidates:
            if not used[t] and ok(v, t):
                image[v] = t
                used[t] = True
                extend(i + 1)
                used[t] = False
                del image[v]

    extend(0)
    return count


def bfs_girth(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = float("inf")
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def odd_cycle(n, edges):
    side = {}
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for s in range(n):
        if s in side:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return True
    return False


def k_arcs(adj, k):
    """All non-backtracking walks with k edges, as tuples."""
    arcs = [(v,) for v in range(len(adj))]
    for _ in range(k):
        nxt = []
        for a in arcs:
            for y in adj[a[-1]]:
                if len(a) >= 2 and y == a[-2]:
                    continue
                nxt.append(a + (y,))
        arcs = nxt
    return arcs


def largest_arc_transitive_k(adj, elements, cap=8):
    k = 0
    while k < cap:
        arcs = k_arcs(adj, k + 1)
        orbit = {tuple(g[x] for x in arcs[0]) for g in elements}
        if len(orbit) != len(arcs):
            break
        k += 1
    return k


def to_networkx(g):
    G = nx.Graph()
    for v in range(g.n_vertices):
        G.add_node(v, color=g.color[v])
    G.add_edges_from(g.edges)
    return G


def relabelings(n, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        p = list(range(n))
        rng.shuffle(p)
        yield tuple(p)
