"""Permutation groups backed by a base and strong generating set.

A :class:`PermGroup` is immutable once built.  Construction runs a
deterministic Schreier-Sims; when the group order is already known (base
changes, stabilizers, automorphism groups found by search) a seeded random
variant is used instead, which stops as soon as the product of basic orbit
lengths reaches the known order.
"""

import random
from collections import Counter
from math import lcm

from .errors import CapExceeded, DegreeMismatch, NotInvariant, NotProper, NotSubgroup
from .perm import compose, conjugate, identity, inverse, is_identity
from .perm import order as perm_order

DEFAULT_ELEMENT_CAP = 20000
_SEED = 20120131


def _first_moved(p):
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


class _Chain:
    """Mutable stabilizer chain used while a group is being built."""

    def __init__(self, degree, base):
        self.degree = degree
        self.ident = identity(degree)
        self.base = list(base)
        self.strong = []
        self.orbits = [[b] for b in self.base]
        self.reps = [{b: self.ident} for b in self.base]
        self.inv_reps = [{b: self.ident} for b in self.base]

    def level_gens(self, i):
        prefix = self.base[:i]
        return [s for s in self.strong if all(s[b] == b for b in prefix)]

    def extend_base(self, point):
        self.base.append(point)
        self.orbits.append([point])
        self.reps.append({point: self.ident})
        self.inv_reps.append({point: self.ident})

    def update_orbit(self, i):
        gens = self.level_gens(i)
        orbit, reps, inv_reps = self.orbits[i], self.reps[i], self.inv_reps[i]
        k = 0
        while k < len(orbit):
            p = orbit[k]
            u = reps[p]
            for s in gens:
                q = s[p]
                if q not in reps:
                    v = compose(s, u)
                    reps[q] = v
                    inv_reps[q] = inverse(v)
                    orbit.append(q)
            k += 1

    def sift(self, g, start=0):
        h = g
        for i in range(start, len(self.base)):
            beta = h[self.base[i]]
            uinv = self.inv_reps[i].get(beta)
            if uinv is None:
                return h, i
            h = compose(uinv, h)
        return h, len(self.base)

    def add_strong(self, h, level):
        """Insert residue h that fixes base[:level]; returns the level it enters."""
        if level == len(self.base):
            self.extend_base(_first_moved(h))
        self.strong.append(h)
        for i in range(level + 1):
            self.update_orbit(i)

    def size(self):
        n = 1
        for orb in self.orbits:
            n *= len(orb)
        return n


def _schreier_sims(degree, gens, base_prefix=()):
    chain = _Chain(degree, base_prefix)
    gens = [g for g in gens if not is_identity(g)]
    for g in gens:
        if all(g[b] == b for b in chain.base):
            chain.extend_base(_first_moved(g))
    chain.strong = list(dict.fromkeys(gens))
    for i in range(len(chain.base)):
        chain.update_orbit(i)
    # verified (point, generator) pairs per level; reps never change once set,
    # so a Schreier generator that sifted to the identity keeps doing so
    done = [set() for _ in chain.base]
    i = len(chain.base) - 1
    while i >= 0:
        restart = False
        gens_i = chain.level_gens(i)
        reps, inv_reps = chain.reps[i], chain.inv_reps[i]
        for beta in chain.orbits[i]:
            u = reps[beta]
            for s in gens_i:
                key = (beta, s)
                if key in done[i]:
                    continue
                sg = compose(inv_reps[s[beta]], compose(s, u))
                if not is_identity(sg):
                    h, j = chain.sift(sg, i + 1)
                    if not is_identity(h):
                        chain.add_strong(h, j)
                        while len(done) < len(chain.base):
                            done.append(set())
                        i = j
                        restart = True
                        break
                done[i].add(key)
            if restart:
                break
        if not restart:
            i -= 1
    return chain


def _random_schreier_sims(degree, known_order, sampler, base_prefix=()):
    chain = _Chain(degree, base_prefix)
    stale = 0
    while chain.size() < known_order:
        h, j = chain.sift(sampler())
        if not is_identity(h):
            chain.add_strong(h, j)
            stale = 0
        else:
            stale += 1
            if stale > 500:
                raise ValueError(
                    f"generators do not reach declared order {known_order} (got {chain.size()})"
                )
    if chain.size() != known_order:
        raise ValueError(f"group order {chain.size()} exceeds declared order {known_order}")
    return chain


def _product_replacement(gens, degree, seed=_SEED):
    rng = random.Random(seed)
    ident = identity(degree)
    state = list(gens) or [ident]
    while len(state) < 10:
        state.append(state[len(state) % max(1, len(gens))] if gens else ident)
    acc = ident

    def step():
        nonlocal acc
        i, j = rng.sample(range(len(state)), 2)
        if rng.random() < 0.5:
            state[i] = compose(state[i], state[j])
        else:
            state[i] = compose(state[j], state[i])
        acc = compose(acc, state[i])
        return acc

    for _ in range(50):
        step()
    return step


class PermGroup:
    """A permutation group on the points 0..degree-1."""

    def __init__(self, degree, generators=(), base=(), known_order=None):
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != degree:
                raise DegreeMismatch(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(g for g in dict.fromkeys(gens) if not is_identity(g))
        if known_order is None or not self.generators:
            chain = _schreier_sims(degree, self.generators, base)
        else:
            chain = _random_schreier_sims(
                degree, known_order, _product_replacement(self.generators, degree), base
            )
        self._adopt(chain)

    def _adopt(self, chain):
        self.base = tuple(chain.base)
        self.strong_generators = tuple(chain.strong)
        self.basic_orbits = tuple(tuple(o) for o in chain.orbits)
        self._reps = chain.reps
        self._inv_reps = chain.inv_reps
        self._order = chain.size()
        self._elements = None

    @classmethod
    def _from_chain(cls, degree, generators, chain):
        grp = cls.__new__(cls)
        grp.degree = degree
        grp.generators = tuple(g for g in dict.fromkeys(generators) if not is_identity(g))
        grp._adopt(chain)
        return grp

    @classmethod
    def trivial(cls, degree):
        return cls(degree, ())

    @classmethod
    def from_elements(cls, degree, elements):
        """Group whose element set is given; picks a small generating set greedily."""
        gens = []
        grp = cls(degree, ())
        for g in elements:
            if not grp.contains(g):
                gens.append(g)
                grp = cls(degree, gens)
        return grp

    # -- basic queries -------------------------------------------------

    def order(self):
        return self._order

    def __len__(self):
        return self._order

    def is_trivial(self):
        return self._order == 1

    def identity(self):
        return identity(self.degree)

    def sift(self, g):
        h = g
        for i, b in enumerate(self.base):
            uinv = self._inv_reps[i].get(h[b])
            if uinv is None:
                return h, i
            h = compose(uinv, h)
        return h, len(self.base)

    def contains(self, g):
        if len(g) != self.degree:
            raise DegreeMismatch(f"permutation of degree {len(g)}, group degree {self.degree}")
        h, _ = self.sift(tuple(g))
        return is_identity(h)

    __contains__ = contains

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self._order == other._order
            and self.is_subgroup_of(other)
        )

    def __hash__(self):
        return hash((self.degree, self._order))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self._order}, ngens={len(self.generators)})"

    # -- elements ------------------------------------------------------

    def elements(self, cap=DEFAULT_ELEMENT_CAP):
        """All elements, as a list; raises CapExceeded above the cap."""
        if self._order > cap:
            raise CapExceeded("element enumeration", self._order, cap)
        if self._elements is None:
            elems = [self.identity()]
            for i in range(len(self.base) - 1, -1, -1):
                reps = [self._reps[i][p] for p in self.basic_orbits[i]]
                elems = [compose(u, g) for u in reps for g in elems]
            self._elements = elems
        return list(self._elements)

    def random_element(self, rng):
        g = self.identity()
        for i in range(len(self.base) - 1, -1, -1):
            p = rng.choice(self.basic_orbits[i])
            g = compose(self._reps[i][p], g)
        return g

    def base_image(self, g):
        return tuple(g[b] for b in self.base)

    # -- orbits and stabilizers ----------------------------------------

    def orbit(self, point):
        seen = {point}
        queue = [point]
        for p in queue:
            for g in self.generators:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return frozenset(seen)

    def orbits(self, domain=None):
        pts = range(self.degree) if domain is None else sorted(domain)
        out = []
        seen = set()
        for p in pts:
            if p not in seen:
                orb = self.orbit(p)
                seen |= orb
                out.append(orb)
        return out

    def with_base(self, prefix):
        """Same group with a stabilizer chain whose base starts with prefix."""
        prefix = list(dict.fromkeys(prefix))
        if list(self.base[: len(prefix)]) == prefix:
            return self
        if self._order == 1:
            return PermGroup._from_chain(self.degree, (), _Chain(self.degree, prefix))
        rng = random.Random(_SEED)
        chain = _random_schreier_sims(
            self.degree, self._order, lambda: self.random_element(rng), prefix
        )
        return PermGroup._from_chain(self.degree, self.generators, chain)

    def pointwise_stabilizer(self, points):
        points = list(dict.fromkeys(points))
        if not points:
            return self
        g = self.with_base(points)
        k = len(points)
        chain = _Chain(self.degree, g.base[k:])
        chain.strong = [s for s in g.strong_generators if all(s[p] == p for p in points)]
        chain.orbits = [list(o) for o in g.basic_orbits[k:]]
        chain.reps = g._reps[k:]
        chain.inv_reps = g._inv_reps[k:]
        return PermGroup._from_chain(self.degree, chain.strong, chain)

    def stabilizer(self, point):
        return self.pointwise_stabilizer([point])

    def setwise_image(self, g, points):
        return frozenset(g[p] for p in points)


# -- module-level operations ---------------------------------------------------


def group_from_generators(degree, gens):
    return PermGroup(degree, gens)


def order(G):
    return G.order()


def contains(G, p):
    return G.contains(p)


def orbit(G, point):
    return G.orbit(point)


def orbits(G, domain=None):
    return G.orbits(domain)


def point_stabilizer(G, point):
    return G.stabilizer(point)


def closure(H, extra):
    extra = [tuple(g) for g in extra]
    for g in extra:
        if len(g) != H.degree:
            raise DegreeMismatch("closure: degree mismatch")
    if all(H.contains(g) for g in extra):
        return H
    return PermGroup(H.degree, list(H.generators) + extra)


def _check_subgroup(H, G):
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise NotSubgroup("first group is not a subgroup of the second")


def induced_action(G, blocks):
    """Action of G on a list of blocks (sets, or ordered tuples).

    Returns ``(image, kernel)``: the image group acting on block indices and
    the subgroup of G acting trivially on every block.
    """
    keyed = [tuple(b) if isinstance(b, tuple) else frozenset(b) for b in blocks]
    index = {b: i for i, b in enumerate(keyed)}
    if len(index) != len(keyed):
        raise ValueError("blocks must be distinct")
    m = len(keyed)

    def image_of(g):
        img = []
        for b in keyed:
            gb = tuple(g[x] for x in b) if isinstance(b, tuple) else frozenset(g[x] for x in b)
            j = index.get(gb)
            if j is None:
                raise NotInvariant("generator does not permute the blocks")
            img.append(j)
        return tuple(img)

    images = [image_of(g) for g in G.generators]
    image = PermGroup(m, images)
    n = G.degree
    if image.order() == G.order():
        return image, PermGroup.trivial(n)
    diag = [g + tuple(n + x for x in im) for g, im in zip(G.generators, images)]
    D = PermGroup(n + m, diag, known_order=G.order())
    K = D.pointwise_stabilizer(range(n, n + m))
    kernel_gens = [k[:n] for k in K.strong_generators]
    kernel = PermGroup(n, kernel_gens, known_order=K.order())
    return image, kernel


def transitivity_degree(G, points, cap=2):
    """0 if G is intransitive on points, 1 if transitive, 2 if doubly transitive."""
    pts = frozenset(points)
    for g in G.generators:
        if any(g[x] not in pts for x in pts):
            raise NotInvariant("group does not preserve the point set")
    if not pts:
        return 0
    x = min(pts)
    if G.orbit(x) != pts:
        return 0
    if cap < 2 or len(pts) < 2:
        return 1
    rest = pts - {x}
    y = min(rest)
    if G.stabilizer(x).orbit(y) == rest:
        return 2
    return 1


def is_normal_in(H, G):
    _check_subgroup(H, G)
    return all(H.contains(conjugate(g, h)) for g in G.generators for h in H.generators)


def double_coset_reps(H, G, cap=DEFAULT_ELEMENT_CAP):
    """One representative per double coset HgH (the identity comes first)."""
    _check_subgroup(H, G)
    hel = H.elements(cap)
    seen = set()
    reps = []
    for g in G.elements(cap):
        if g in seen:
            continue
        reps.append(g)
        for a in hel:
            ag = compose(a, g)
            for b in hel:
                seen.add(compose(ag, b))
    return reps


def is_maximal_in(H, G, cap=DEFAULT_ELEMENT_CAP):
    """True iff H is a maximal subgroup of G (H must be proper)."""
    _check_subgroup(H, G)
    if H.order() == G.order():
        raise NotProper("subgroup is not proper")
    if G.order() % H.order() == 0 and G.order() // H.order() == 2:
        return True
    for g in double_coset_reps(H, G, cap):
        if H.contains(g):
            continue
        if closure(H, [g]).order() != G.order():
            return False
    return True


def left_coset_table(G, H, cap=DEFAULT_ELEMENT_CAP):
    """Left cosets gH of H in G.

    Returns ``(reps, coset_of)``: coset representatives ordered by their
    minimal element under base-image order (each representative *is* that
    minimal element), and a dict sending every element of G to its coset
    index.
    """
    _check_subgroup(H, G)
    elems = sorted(G.elements(cap), key=G.base_image)
    hel = H.elements(cap)
    coset_of = {}
    reps = []
    for g in elems:
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in hel:
            coset_of[compose(g, h)] = k
    return reps, coset_of


def coset_action(G, H, cap=DEFAULT_ELEMENT_CAP):
    """Images of G's generators acting by left multiplication on cosets of H."""
    reps, coset_of = left_coset_table(G, H, cap)
    images = [tuple(coset_of[compose(g, r)] for r in reps) for g in G.generators]
    return reps, images


def core_in(H, G, cap=DEFAULT_ELEMENT_CAP):
    """Largest normal subgroup of G contained in H (kernel of the coset action)."""
    _check_subgroup(H, G)
    if H.is_trivial():
        return H
    if is_normal_in(H, G):
        return H
    reps, coset_of = left_coset_table(G, H, cap)
    # the kernel lies inside H: keep the elements of H fixing every coset
    kernel_elems = [
        h for h in H.elements(cap) if all(coset_of[compose(h, r)] == k for k, r in enumerate(reps))
    ]
    return PermGroup.from_elements(G.degree, kernel_elems)


def normalizer_in(H, G, cap=DEFAULT_ELEMENT_CAP):
    _check_subgroup(H, G)
    if G.order() > cap:
        raise CapExceeded("normalizer scan", G.order(), cap)
    if is_normal_in(H, G):
        return G
    elems = [g for g in G.elements(cap) if all(H.contains(conjugate(g, h)) for h in H.generators)]
    return PermGroup.from_elements(G.degree, elems)


def transporter(G, A, B, cap=DEFAULT_ELEMENT_CAP):
    """Some g in G with g A g^-1 = B, or None."""
    _check_subgroup(A, G)
    _check_subgroup(B, G)
    if G.order() > cap:
        raise CapExceeded("transporter scan", G.order(), cap)
    if A.order() != B.order():
        return None
    for g in sorted(G.elements(cap), key=G.base_image):
        if all(B.contains(conjugate(g, a)) for a in A.generators):
            return g
    return None


def element_orders(G, cap=DEFAULT_ELEMENT_CAP):
    return Counter(perm_order(g) for g in G.elements(cap))


def max_element_order(G, cap=DEFAULT_ELEMENT_CAP):
    return max(element_orders(G, cap))


def exponent(G, cap=DEFAULT_ELEMENT_CAP):
    return lcm(*element_orders(G, cap))


def normal_closure(gens, G):
    """Smallest normal subgroup of G containing gens."""
    N = PermGroup(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for n in list(N.generators):
            for g in G.generators:
                c = conjugate(g, n)
                if not N.contains(c):
                    N = PermGroup(G.degree, list(N.generators) + [c])
                    changed = True
    return N


def derived_subgroup(G):
    comms = []
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            c = compose(compose(a, b), compose(inverse(a), inverse(b)))
            if not is_identity(c):
                comms.append(c)
    return normal_closure(comms, G)


def center(G, cap=DEFAULT_ELEMENT_CAP):
    elems = [
        z for z in G.elements(cap) if all(compose(z, g) == compose(g, z) for g in G.generators)
    ]
    return PermGroup.from_elements(G.degree, elems)


def is_abelian(G):
    gens = G.generators
    return all(compose(a, b) == compose(b, a) for a in gens for b in gens)
