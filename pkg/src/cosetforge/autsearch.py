"""Automorphism groups and canonical certificates by individualization-refinement.

The automorphism search walks the first path of the search tree, then,
from the deepest level upwards, looks for an automorphism mapping the base
point to every other vertex of its target cell that is not yet in the orbit
of the automorphisms already found.  The found generators form a strong
generating set for the base given by the first path.
"""

from dataclasses import dataclass

from .groups import PermGroup
from .refine import individualize, initial


def _is_automorphism(adj, mapping):
    for u, nbrs in enumerate(adj):
        mu = mapping[u]
        target = adj[mu]
        for v in nbrs:
            if mapping[v] not in target:
                return False
    return True


def _leaf_map(left, right):
    n = len(left.lab)
    m = [0] * n
    for a, b in zip(left.lab, right.lab):
        m[a] = b
    return tuple(m)


def _search(adj, left, right):
    """An automorphism sending the discrete refinement of left onto right, or None."""
    if left.is_discrete():
        m = _leaf_map(left, right)
        return m if _is_automorphism(adj, m) else None
    t = left.target_cell()
    if right.ends.get(t) != left.ends[t]:
        return None
    x = left.lab[t]
    lchild, ltrace = individualize(adj, left, x)
    for y in sorted(right.cell_at(t)):
        rchild, rtrace = individualize(adj, right, y)
        if rtrace != ltrace or rchild.shape() != lchild.shape():
            continue
        found = _search(adj, lchild, rchild)
        if found is not None:
            return found
    return None


def _orbit_closure(orbit, gens, new_points):
    queue = list(new_points)
    for p in queue:
        for g in gens:
            q = g[p]
            if q not in orbit:
                orbit.add(q)
                queue.append(q)


def automorphism_search(adj, cells):
    """Automorphisms of the graph preserving each cell of the ordered partition.

    Returns ``(generators, base, order)``.
    """
    n = len(adj)
    root, _ = initial(adj, n, cells)
    path = [root]
    base = []
    while not path[-1].is_discrete():
        part = path[-1]
        t = part.target_cell()
        v = min(part.cell_at(t))
        base.append(v)
        child, _ = individualize(adj, part, v)
        path.append(child)
    gens = []
    order = 1
    for level in range(len(base) - 1, -1, -1):
        part = path[level]
        v = base[level]
        cell = sorted(part.cell_at(part.target_cell()))
        orbit = {v}
        _orbit_closure(orbit, gens, [v])
        left, ltrace = individualize(adj, part, v)
        for u in cell:
            if u in orbit:
                continue
            right, rtrace = individualize(adj, part, u)
            if rtrace != ltrace or right.shape() != left.shape():
                continue
            g = _search(adj, left, right)
            if g is not None:
                gens.append(g)
                _orbit_closure(orbit, gens, list(orbit))
        order *= len(orbit)
    return gens, base, order


def find_isomorphism(adj, cells_from, cells_to):
    """An automorphism mapping the ordered partition cells_from onto cells_to."""
    n = len(adj)
    left, ltrace = initial(adj, n, cells_from)
    right, rtrace = initial(adj, n, cells_to)
    if ltrace != rtrace or left.shape() != right.shape():
        return None
    return _search(adj, left, right)


def automorphism_group_of_partition(adj, cells):
    n = len(adj)
    gens, _, order = automorphism_search(adj, cells)
    return PermGroup(n, gens, known_order=order)


# -- canonical forms ------------------------------------------------------------


def canonical_edges(adj, cells, group):
    """Lexicographically least relabeled edge list over the pruned search tree.

    ``group`` must be the automorphism group of the graph preserving the
    cells; children in one orbit of the pointwise stabilizer of the current
    prefix lead to identical leaves and are skipped.
    """
    n = len(adj)
    root, _ = initial(adj, n, cells)
    best = [None]
    stabs = {(): group}

    def leaf_key(part):
        pos = [0] * n
        for k, v in enumerate(part.lab):
            pos[v] = k
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u in range(n) for v in adj[u] if u < v))

    def walk(part, prefix):
        if part.is_discrete():
            key = leaf_key(part)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        stab = stabs[prefix]
        cell = sorted(part.cell_at(part.target_cell()))
        covered = set()
        for x in cell:
            if x in covered:
                continue
            covered |= stab.orbit(x)
            child, _ = individualize(adj, part, x)
            nxt = prefix + (x,)
            if nxt not in stabs:
                stabs[nxt] = stab.stabilizer(x)
            walk(child, nxt)

    walk(root, ())
    return best[0]


@dataclass(frozen=True)
class GraphCertificate:
    bytes: bytes
    color_mode: str


COLOR_MODES = ("respect_classes", "preserve_classes", "ignore")


def _encode(tag, sizes, edges):
    head = f"{tag}|{','.join(map(str, sizes))}|"
    body = ";".join(f"{u},{v}" for u, v in edges)
    return (head + body).encode()


def certificate(g, mode="preserve_classes"):
    """Canonical byte string: equal iff isomorphic under the color mode.

    ``preserve_classes`` maps black to black, ``respect_classes`` also allows
    a global black/white swap, ``ignore`` forgets the coloring.
    """
    adj = g.adjacency
    n = g.n_vertices
    if mode == "ignore":
        cells = [list(range(n))]
        grp = automorphism_group_of_partition(adj, cells)
        return GraphCertificate(_encode("I", (n,), canonical_edges(adj, cells, grp)), mode)
    black, white = list(g.black), list(g.white)
    if mode == "preserve_classes":
        orders = [(black, white)]
        tag = "P"
    elif mode == "respect_classes":
        tag = "R"
        if len(black) < len(white):
            orders = [(black, white)]
        elif len(white) < len(black):
            orders = [(white, black)]
        else:
            orders = [(black, white), (white, black)]
    else:
        raise ValueError(f"unknown color mode {mode!r}")
    grp = automorphism_group_of_partition(adj, [black, white])
    best = None
    for first, second in orders:
        key = (len(first), len(second)), canonical_edges(adj, [first, second], grp)
        if best is None or key < best:
            best = key
    return GraphCertificate(_encode(tag, best[0], best[1]), mode)
