"""Probability measures on the dicyclic group."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .group import GroupElement, GroupParams, elements


@dataclass
class Measure:
    """Sparse distribution element -> weight; missing elements carry weight 0.

    Weights must be non-negative and sum to 1 (up to a small numerical
    guard).  Instances are treated as immutable after construction.
    """

    params: GroupParams
    weights: dict[GroupElement, float]

    def __post_init__(self) -> None:
        two_n = 2 * self.params.n
        for g, w in self.weights.items():
            if not 0 <= g.exponent < two_n:
                raise ValueError(f"element {g} not canonical for n={self.params.n}")
            if w < 0.0:
                raise ValueError(f"negative weight {w!r} at {g}")
        total = math.fsum(self.weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"weights sum to {total!r}, expected 1")

    def mass(self, g: GroupElement) -> float:
        return self.weights.get(g, 0.0)

    def total(self) -> float:
        return math.fsum(self.weights.values())


def point_mass(params: GroupParams, g: GroupElement) -> Measure:
    return Measure(params, {g: 1.0})


def uniform(params: GroupParams) -> Measure:
    w = 1.0 / params.order
    return Measure(params, {g: w for g in elements(params)})
