"""Explicit constructions of named groups, and the PSL(2, 31) example geometry.

The analysis never prints group names.  Instead, a row's fingerprint can be
compared with ``fingerprint(named_group(...))`` for the groups below.
"""

import random

from .errors import UnknownName
from .groups import PermGroup, closure
from .perm import compose, from_cycles, inverse
from .perm import order as perm_order


def cyclic(n):
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))] if n > 1 else [])


def symmetric(n):
    if n < 2:
        return PermGroup(max(n, 1), [])
    gens = [from_cycles(n, [[0, 1]])]
    if n > 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return PermGroup(n, gens)


def alternating(n):
    gens = [from_cycles(n, [[0, 1, i]]) for i in range(2, n)]
    return PermGroup(n, gens)


def dihedral(n):
    """Dihedral group of order 2n acting on n points (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


def direct_product(*groups):
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = list(range(degree))
            for i, x in enumerate(g):
                img[offset + i] = offset + x
            gens.append(tuple(img))
        offset += G.degree
    return PermGroup(degree, gens)


def affine(p, mult_gen_order=None):
    """x -> a x + b over GF(p), a ranging over the subgroup of the given order."""
    root = primitive_root(p)
    k = p - 1 if mult_gen_order is None else mult_gen_order
    a = pow(root, (p - 1) // k, p)
    trans = tuple((x + 1) % p for x in range(p))
    scale = tuple((a * x) % p for x in range(p))
    return PermGroup(p, [trans, scale])


def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            return g
    return 1


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


NAMED = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C6": lambda: cyclic(6),  # C3 x 2
    "2^2": lambda: direct_product(cyclic(2), cyclic(2)),
    "S3": lambda: symmetric(3),
    "C3xC3": lambda: direct_product(cyclic(3), cyclic(3)),
    "S3xC3": lambda: direct_product(symmetric(3), cyclic(3)),
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
    "C7:C3": lambda: affine(7, 3),
    "C2^2xC2^2": lambda: direct_product(*(cyclic(2) for _ in range(4))),
    "C5:C4": lambda: affine(5),
    "D5": lambda: dihedral(5),
    "D15": lambda: dihedral(15),
    "A5": lambda: alternating(5),
    "S5": lambda: symmetric(5),
}


def named_group(name):
    try:
        return NAMED[name]()
    except KeyError:
        raise UnknownName(f"no reference construction for {name!r}") from None


# -- PSL(2, p) on the projective line -------------------------------------------


def psl2(p):
    """PSL(2, p) acting on GF(p) plus infinity (point p); degree p + 1."""
    inf = p
    square = pow(primitive_root(p), 2, p)

    def mobius(a, b, c, d):
        img = []
        for x in range(p + 1):
            if x == inf:
                img.append(inf if c == 0 else (a * pow(c, -1, p)) % p)
                continue
            den = (c * x + d) % p
            img.append(inf if den == 0 else ((a * x + b) * pow(den, -1, p)) % p)
        return tuple(img)

    gens = {
        "translate": mobius(1, 1, 0, 1),
        "scale": mobius(square, 0, 0, 1),
        "invert": mobius(0, p - 1, 1, 0),
    }
    return PermGroup(p + 1, list(gens.values())), gens


def psl2_31_geometry(seed=31):
    """(PSL(2,31) : D15, A5) with a Borel subgroup of order 10.

    D15 is the normalizer of the split torus of order 15.  An A5 is found by
    random search for a (2,3,5)-generating pair, then conjugated until it
    meets D15 in a subgroup of order 10 and, together with D15, generates
    the whole group.
    """
    G, gens = psl2(31)
    D15 = PermGroup(32, [gens["scale"], gens["invert"]])
    rng = random.Random(seed)
    A5 = None
    while A5 is None:
        a = G.random_element(rng)
        b = G.random_element(rng)
        if perm_order(a) != 2 or perm_order(b) != 3 or perm_order(compose(a, b)) != 5:
            continue
        cand = PermGroup(32, [a, b])
        if cand.order() == 60:
            A5 = cand
    d15_elems = D15.elements()
    while True:
        g = G.random_element(rng)
        ginv = inverse(g)
        conj = [compose(compose(g, x), ginv) for x in A5.generators]
        cand = PermGroup(32, conj)
        if sum(1 for x in d15_elems if cand.contains(x)) != 10:
            continue
        if closure(D15, cand.generators).order() == G.order():
            return G, D15, cand
