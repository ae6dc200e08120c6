"""Ordered-partition refinement and individualization.

Cells are identified by their start position in ``lab``; ``ends[s]`` is one
past the last position of the cell starting at ``s``.  Refinement is
equitable and labeling-invariant: two isomorphic inputs produce equal
traces, so comparing traces is a sound pruning test during search.
"""

from collections import deque


class Partition:
    __slots__ = ("lab", "cellof", "ends")

    def __init__(self, lab, cellof, ends):
        self.lab = lab
        self.cellof = cellof
        self.ends = ends

    @classmethod
    def from_cells(cls, n, cells):
        lab = []
        cellof = [0] * n
        ends = {}
        for cell in cells:
            if not cell:
                continue
            s = len(lab)
            lab.extend(sorted(cell))
            ends[s] = len(lab)
            for v in cell:
                cellof[v] = s
        if len(lab) != n:
            raise ValueError("cells must partition the vertex set")
        return cls(lab, cellof, ends)

    def copy(self):
        return Partition(list(self.lab), list(self.cellof), dict(self.ends))

    def is_discrete(self):
        return len(self.ends) == len(self.lab)

    def cells(self):
        return [self.lab[s : self.ends[s]] for s in sorted(self.ends)]

    def target_cell(self):
        """Start of the first smallest non-singleton cell, or None."""
        best = None
        for s in sorted(self.ends):
            size = self.ends[s] - s
            if size > 1 and (best is None or size < best[0]):
                best = (size, s)
        return None if best is None else best[1]

    def cell_at(self, s):
        return self.lab[s : self.ends[s]]

    def shape(self):
        return tuple((s, self.ends[s]) for s in sorted(self.ends))


def refine(adj, part, active):
    """Refine part in place to an equitable partition; returns the trace."""
    lab, cellof, ends = part.lab, part.cellof, part.ends
    queue = deque(active)
    queued = set(active)
    trace = []
    while queue:
        w = queue.popleft()
        queued.discard(w)
        count = {}
        for x in lab[w : ends[w]]:
            for y in adj[x]:
                count[y] = count.get(y, 0) + 1
        touched = sorted({cellof[y] for y in count})
        for s in touched:
            e = ends[s]
            if e - s == 1:
                continue
            seg = lab[s:e]
            keys = [count.get(v, 0) for v in seg]
            if min(keys) == max(keys):
                continue
            order = sorted(range(len(seg)), key=keys.__getitem__)
            lab[s:e] = [seg[i] for i in order]
            sorted_keys = [keys[i] for i in order]
            frags = []
            start = s
            for k in range(1, len(seg) + 1):
                if k == len(seg) or sorted_keys[k] != sorted_keys[k - 1]:
                    frags.append((start, s + k, sorted_keys[k - 1]))
                    start = s + k
            trace.append((w, s, tuple((c, b - a) for a, b, c in frags)))
            for a, b, _ in frags:
                ends[a] = b
                if a != s:
                    for v in lab[a:b]:
                        cellof[v] = a
            was_queued = s in queued
            for a, _, _ in frags:
                if a == s and was_queued:
                    continue
                if a not in queued:
                    queue.append(a)
                    queued.add(a)
    return tuple(trace)


def individualize(adj, part, v):
    """Copy of part with v split off into a singleton cell, then refined."""
    p = part.copy()
    s = p.cellof[v]
    e = p.ends[s]
    if e - s > 1:
        i = p.lab.index(v, s, e)
        p.lab[s], p.lab[i] = p.lab[i], p.lab[s]
        p.ends[s] = s + 1
        p.ends[s + 1] = e
        for u in p.lab[s + 1 : e]:
            p.cellof[u] = s + 1
    trace = refine(adj, p, [s])
    return p, trace


def initial(adj, n, cells):
    p = Partition.from_cells(n, cells)
    trace = refine(adj, p, sorted(p.ends))
    return p, trace
