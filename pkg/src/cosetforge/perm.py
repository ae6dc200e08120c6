"""Permutations as plain tuples of images over the domain 0..n-1.

Products use function composition: ``compose(p, q)`` applies ``q`` first,
then ``p``.  This matches left cosets ``gH`` and left actions ``g.x``.

Text I/O uses 1-based cycle notation, e.g. ``"(2,3)(4,5)"``.
"""

import math
import re

from .errors import DegreeMismatch, MalformedRecord

Perm = tuple


def identity(n):
    return tuple(range(n))


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def compose(p, q):
    """Return p*q, i.e. the map x -> p[q[x]]."""
    return tuple([p[x] for x in q])


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(g, p):
    """Return g p g^-1."""
    n = len(p)
    out = [0] * n
    for i in range(n):
        out[g[i]] = g[p[i]]
    return tuple(out)


def check_perm(p, degree=None):
    if degree is not None and len(p) != degree:
        raise DegreeMismatch(f"permutation of degree {len(p)}, expected {degree}")
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")


def cycles(p):
    """Nontrivial cycles of p, each starting at its smallest point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def order(p):
    return math.lcm(*(len(c) for c in cycles(p))) if not is_identity(p) else 1


def power(p, k):
    n = len(p)
    result = identity(n)
    base = p
    if k < 0:
        base = inverse(p)
        k = -k
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def parity(p):
    """0 for even permutations, 1 for odd ones."""
    return sum(len(c) - 1 for c in cycles(p)) % 2


def from_cycles(n, cycle_list):
    """Build a permutation of degree n from 0-based cycles."""
    img = list(range(n))
    for cyc in cycle_list:
        if len(set(cyc)) != len(cyc):
            raise MalformedRecord(f"repeated point in cycle {cyc!r}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < n:
                raise DegreeMismatch(f"point {a} outside domain of size {n}")
            img[a] = b
    check_perm(img)
    return tuple(img)


def format_cycles(p):
    """1-based cycle notation; the identity is ``()``."""
    cyc = cycles(p)
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(\s*([0-9,\s]*)\)")


def parse_cycles(text, n):
    """Parse 1-based cycle notation into a permutation of degree n."""
    s = text.strip()
    pos = 0
    cyc_list = []
    while pos < len(s):
        m = _CYCLE_RE.match(s, pos)
        if not m:
            raise MalformedRecord(f"cannot parse permutation {text!r}")
        body = m.group(1).strip()
        if body:
            pts = [int(x) - 1 for x in re.split(r"[,\s]+", body) if x]
            cyc_list.append(pts)
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return from_cycles(n, cyc_list)


def apply_to_set(p, points):
    return frozenset(p[x] for x in points)
