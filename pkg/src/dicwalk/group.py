"""Exact arithmetic on the dicyclic group of order 4n.

The group has presentation <a, x | a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1>;
its 4n elements split into rotations a^e and flipped elements a^e*x.  All
values are immutable and all operations are pure functions, so everything
here is safe to call from concurrent tasks without coordination.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class NotIrreducibleError(ValueError):
    """A walk support fails to reach the whole group."""


@dataclass(frozen=True)
class GroupParams:
    """Group parameter: the dicyclic group on 4n elements."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")

    @property
    def order(self) -> int:
        return 4 * self.n


@dataclass(frozen=True)
class GroupElement:
    """a^exponent when has_x is false, a^exponent*x when true.

    The exponent is kept reduced mod 2n by every constructor and operation.
    """

    exponent: int
    has_x: bool = False


def element(params: GroupParams, exponent: int, has_x: bool = False) -> GroupElement:
    """Canonical element with exponent reduced mod 2n."""
    return GroupElement(exponent % (2 * params.n), bool(has_x))


def identity(params: GroupParams) -> GroupElement:
    return GroupElement(0, False)


def multiply(g: GroupElement, h: GroupElement, params: GroupParams) -> GroupElement:
    two_n = 2 * params.n
    if not g.has_x:
        # (a^k)(a^m) = a^(k+m),  (a^k)(a^m x) = a^(k+m) x
        return GroupElement((g.exponent + h.exponent) % two_n, h.has_x)
    if not h.has_x:
        # (a^k x)(a^m) = a^(k-m) x
        return GroupElement((g.exponent - h.exponent) % two_n, True)
    # (a^k x)(a^m x) = a^(k-m+n)
    return GroupElement((g.exponent - h.exponent + params.n) % two_n, False)


def inverse(g: GroupElement, params: GroupParams) -> GroupElement:
    two_n = 2 * params.n
    if g.has_x:
        # (a^k x)^-1 = a^(k+n) x, since (a^k x)(a^(k+n) x) = a^(k-k-n+n) = 1
        return GroupElement((g.exponent + params.n) % two_n, True)
    return GroupElement(-g.exponent % two_n, False)


def elements(params: GroupParams) -> list[GroupElement]:
    """All 4n elements: rotations by exponent, then x-elements by exponent."""
    two_n = 2 * params.n
    out = [GroupElement(e, False) for e in range(two_n)]
    out.extend(GroupElement(e, True) for e in range(two_n))
    return out


def element_index(g: GroupElement, params: GroupParams) -> int:
    """Position of g in elements(params)."""
    return g.exponent + (2 * params.n if g.has_x else 0)


def format_element(g: GroupElement) -> str:
    """Text form used in JSON output and fixtures: "a^k" or "a^k*x"."""
    return f"a^{g.exponent}*x" if g.has_x else f"a^{g.exponent}"


_ELEMENT_RE = re.compile(r"^a\^(-?\d+)(\*x)?$")


def parse_element(text: str, params: GroupParams) -> GroupElement:
    m = _ELEMENT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse group element {text!r}")
    return element(params, int(m.group(1)), m.group(2) is not None)


def gcd_check(n: int) -> tuple[int, bool]:
    """gcd(2n, n+4) and whether it equals 1.

    For odd n the gcd is always 1, which is what makes the two-generator
    walk aperiodic (return words of lengths 2n and n+4 exist).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    g = math.gcd(2 * n, n + 4)
    return g, g == 1


def aperiodicity_certificate(
    params: GroupParams, walk_support: Iterable[GroupElement]
) -> int:
    """gcd of the lengths of all identity-valued words over the support.

    Runs a layered breadth-first search on the 4n-state word graph up to
    depth 4n+4 and returns the gcd of the word lengths at which the
    identity occurs.  A return value of 1 certifies aperiodicity.

    Raises NotIrreducibleError when the support does not reach every group
    element within the depth cap (the walk is then not irreducible).
    """
    support = list(walk_support)
    if not support:
        raise ValueError("walk_support must be non-empty")
    depth_cap = 4 * params.n + 4
    ident = identity(params)
    frontier = {ident}
    seen = {ident}
    return_gcd = 0
    for length in range(1, depth_cap + 1):
        frontier = {multiply(s, g, params) for s in frontier for g in support}
        seen.update(frontier)
        if ident in frontier:
            return_gcd = math.gcd(return_gcd, length)
    if len(seen) < params.order:
        raise NotIrreducibleError(
            f"support reaches only {len(seen)} of {params.order} elements "
            f"within {depth_cap} steps"
        )
    if return_gcd == 0:
        raise NotIrreducibleError(
            f"identity not reached by any word of length <= {depth_cap}"
        )
    return return_gcd
