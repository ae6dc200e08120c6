import itertools
import random

import pytest

from cosetforge.errors import CapExceeded
from cosetforge.groups import PermGroup
from cosetforge.perm import from_cycles
from cosetforge.reference import affine, alternating, cyclic, symmetric
from cosetforge.subgroups import subgroup_classes

from oracles import all_subgroups, closure_elements, conjugates_of, mul, random_group_gens


def _classes_by_brute_force(subs, elements):
    seen = set()
    classes = []
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in seen:
            continue
        orbit = conjugates_of(S, elements)
        seen |= orbit
        classes.append(orbit)
    return classes


def _check_complete(G, subs=None):
    n = G.degree
    elements = set(G.elements())
    if subs is None:
        subs = all_subgroups(elements, n)
    reps = subgroup_classes(G)
    union = set()
    orbits = []
    for H in reps:
        orbit = conjugates_of(frozenset(H.elements()), elements)
        assert not any(orbit & o for o in orbits), "two classes are conjugate"
        orbits.append(orbit)
        union |= orbit
    assert union == subs
    assert len(reps) == len(_classes_by_brute_force(subs, elements))
    return reps


def test_a4_against_subset_lattice():
    A4 = alternating(4)
    elems = sorted(A4.elements())
    subsets = set()
    for mask in range(1, 1 << len(elems)):
        S = frozenset(e for i, e in enumerate(elems) if mask >> i & 1)
        if all(mul(a, b) in S for a in S for b in S):
            subsets.add(S)
    assert len(subsets) == 10
    reps = _check_complete(A4, subsets)
    assert [H.order() for H in reps] == [1, 2, 3, 4, 12]


@pytest.mark.parametrize(
    "G,count",
    [(cyclic(2), 2), (cyclic(6), 4), (symmetric(3), 4), (symmetric(4), 11), (alternating(5), 9), (symmetric(5), 19)],
)
def test_class_counts(G, count):
    assert len(_check_complete(G)) == count


def test_random_small_groups_complete():
    rng = random.Random(7)
    for _ in range(100):
        n, gens, elems = random_group_gens(rng, 120, degrees=(3, 4, 5, 6), ngens=(1, 2))
        _check_complete(PermGroup(n, gens), all_subgroups(elems, n))


def test_order_72_group_on_six_points():
    # S3 wreath C2: the two factors act on {0,1,2} and {3,4,5}, swapped by the last generator
    gens = [
        from_cycles(6, [[0, 1, 2]]),
        from_cycles(6, [[0, 1]]),
        from_cycles(6, [[0, 3], [1, 4], [2, 5]]),
    ]
    G = PermGroup(6, gens)
    assert G.order() == 72
    elems = closure_elements(gens, 6)
    _check_complete(G, all_subgroups(elems, 6))


def test_psl27_and_affine_groups():
    psl = PermGroup(7, [from_cycles(7, [[0, 1, 2, 3, 4, 5, 6]]), from_cycles(7, [[1, 2, 4], [3, 6, 5]]), from_cycles(7, [[0, 1], [3, 6]])])
    assert psl.order() == 168
    reps = _check_complete(psl)
    assert len(reps) == 15
    _check_complete(affine(7))


def test_output_is_deterministic_and_sorted():
    G = symmetric(4)
    a = [sorted(H.elements()) for H in subgroup_classes(G)]
    b = [sorted(H.elements()) for H in subgroup_classes(PermGroup(4, list(reversed(G.generators))))]
    assert a == b
    orders = [len(x) for x in a]
    assert orders == sorted(orders)


def test_cap():
    with pytest.raises(CapExceeded):
        subgroup_classes(symmetric(5), order_cap=100)


def test_class_sizes_divide_group_order():
    G = symmetric(4)
    for H in subgroup_classes(G):
        for p in itertools.islice(H.elements(), 3):
            assert G.contains(p)
        assert G.order() % H.order() == 0
