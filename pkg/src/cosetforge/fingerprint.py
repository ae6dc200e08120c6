"""Isomorphism-invariant descriptors of small groups.

Equal fingerprints are necessary, not sufficient, for isomorphism.  They
stand in for structure names such as ``S3 x C3``; see
:mod:`cosetforge.reference` for fingerprints of explicitly built groups.
"""

from dataclasses import dataclass

from .groups import DEFAULT_ELEMENT_CAP, center, derived_subgroup, element_orders, is_abelian
from .errors import CapExceeded
from math import lcm


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    exponent: int
    derived_series_lengths: tuple
    center_order: int
    element_order_histogram: tuple  # sorted (element order, count) pairs

    def sort_key(self):
        return (
            self.order,
            self.abelian,
            self.exponent,
            self.derived_series_lengths,
            self.center_order,
            self.element_order_histogram,
        )

    def to_dict(self):
        return {
            "order": self.order,
            "abelian": self.abelian,
            "exponent": self.exponent,
            "derived_series_lengths": list(self.derived_series_lengths),
            "center_order": self.center_order,
            "element_order_histogram": {str(k): v for k, v in self.element_order_histogram},
        }


def derived_series(G):
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order() == series[-1].order():
            return series
        series.append(D)


def fingerprint(H, cap=DEFAULT_ELEMENT_CAP):
    if H.order() > cap:
        raise CapExceeded("fingerprint", H.order(), cap)
    hist = element_orders(H, cap)
    return GroupFingerprint(
        order=H.order(),
        abelian=is_abelian(H),
        exponent=lcm(*hist),
        derived_series_lengths=tuple(D.order() for D in derived_series(H)),
        center_order=center(H, cap).order(),
        element_order_histogram=tuple(sorted(hist.items())),
    )
