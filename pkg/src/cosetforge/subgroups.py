"""Conjugacy classes of subgroups of small permutation groups.

Elements of G are indexed once; subgroups are Python ints used as bitsets
over those indices.  Starting from the trivial group, every class
representative S is joined with every element g (one per coset gS) and the
result <S, g> is recorded unless one of its conjugates is already known.
Every subgroup is reached: a subgroup generated by g1..gk is the last step
of the chain <g1> < <g1,g2> < ..., and each step is conjugate to a join
of a recorded representative with one element.
"""

from .errors import CapExceeded
from .groups import PermGroup
from .perm import compose, conjugate

DEFAULT_ORDER_CAP = 5000


class _IndexedGroup:
    def __init__(self, G):
        self.G = G
        self.elements = sorted(G.elements(G.order()), key=G.base_image)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.index[G.identity()]
        self._cols = {}
        self.conj = [
            [self.index[conjugate(g, x)] for x in self.elements] for g in G.generators
        ]

    def right_mult(self, t):
        """Column of the multiplication table: x -> x*t for every index x."""
        col = self._cols.get(t)
        if col is None:
            el = self.elements[t]
            col = [self.index[compose(x, el)] for x in self.elements]
            self._cols[t] = col
        return col

    def generate(self, gens):
        """Bitset and member list of the subgroup generated by index list gens."""
        cols = [self.right_mult(t) for t in gens]
        members = [self.identity]
        bits = 1 << self.identity
        for x in members:
            for col in cols:
                y = col[x]
                if not (bits >> y) & 1:
                    bits |= 1 << y
                    members.append(y)
        return bits, members

    def conjugate_bits(self, table, members):
        out = 0
        for x in members:
            out |= 1 << table[x]
        return out


def _members(bits):
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def subgroup_classes(G, order_cap=DEFAULT_ORDER_CAP):
    """One representative per G-conjugacy class of subgroups of G.

    Sorted by order, then by the smallest bitset in the class (deterministic).
    """
    if G.order() > order_cap:
        raise CapExceeded("subgroup enumeration", G.order(), order_cap)
    ig = _IndexedGroup(G)
    known = {}
    classes = []

    def record(bits, members, gens):
        if bits in known:
            return
        cid = len(classes)
        orbit = [bits]
        known[bits] = cid
        for b in orbit:
            mem = members if b == bits else _members(b)
            for table in ig.conj:
                c = ig.conjugate_bits(table, mem)
                if c not in known:
                    known[c] = cid
                    orbit.append(c)
        classes.append((bits, members, gens, min(orbit)))

    bits, members = ig.generate([])
    record(bits, members, [])
    k = 0
    while k < len(classes):
        sbits, smembers, sgens, _ = classes[k]
        covered = sbits
        for g in range(len(ig.elements)):
            if (covered >> g) & 1:
                continue
            col = ig.right_mult(g)
            # <S, g> = <S, s*g> = <S, g*s>; mark the left coset gS and right coset Sg
            for s in smembers:
                covered |= 1 << ig.right_mult(s)[g]
                covered |= 1 << col[s]
            kbits, kmembers = ig.generate(sgens + [g])
            record(kbits, kmembers, sgens + [g])
        k += 1

    classes.sort(key=lambda c: (len(c[1]), c[3]))
    out = []
    for bits, members, gens, _ in classes:
        perms = [ig.elements[i] for i in gens]
        out.append(PermGroup(G.degree, perms, known_order=len(members)))
    return out


def subgroup_element_sets(G, order_cap=DEFAULT_ORDER_CAP):
    """Every subgroup of G (all conjugates) as a frozenset of permutations."""
    if G.order() > order_cap:
        raise CapExceeded("subgroup enumeration", G.order(), order_cap)
    out = set()
    for H in subgroup_classes(G, order_cap):
        hel = H.elements()
        for g in G.elements():
            out.add(frozenset(conjugate(g, h) for h in hel))
    return out
