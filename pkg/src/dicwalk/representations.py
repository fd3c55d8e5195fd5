"""Irreducible representations of the dicyclic group and Fourier analysis.

The group of order 4n has four degree-1 irreps (their values at x depend on
the parity of n) and n-1 degree-2 irreps built from omega = e^(i*pi/n):

    rho_r(a) = diag(omega^r, omega^-r),   rho_r(x) = [[0, (-1)^r], [1, 0]],

for 1 <= r <= n-1.  Fourier transforms of measures live at these irreps and
turn convolution into matrix multiplication, which is what makes exact
convolution powers cheap.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .group import (
    GroupElement,
    GroupParams,
    element_index,
    elements,
    inverse,
)
from .measures import Measure

#: residue ceiling for Fourier inversion; 4n double-precision terms of O(1)
#: magnitude stay far below this
INVERSION_TOLERANCE = 1e-9


class FourierInversionError(ValueError):
    """Inverting transforms left a residue incompatible with a probability."""


@dataclass(frozen=True)
class Irrep:
    """Descriptor of one irreducible representation.

    degree 1: index in 0..3 (the four linear characters).
    degree 2: index r in 1..n-1 (rotation frequency of the 2-D irrep).
    """

    degree: int
    index: int

    def __post_init__(self) -> None:
        if self.degree not in (1, 2):
            raise ValueError(f"degree must be 1 or 2, got {self.degree}")
        if self.degree == 1 and self.index not in (0, 1, 2, 3):
            raise ValueError(f"degree-1 index must be in 0..3, got {self.index}")
        if self.degree == 2 and self.index < 1:
            raise ValueError(f"degree-2 index must be >= 1, got {self.index}")

    @property
    def is_trivial(self) -> bool:
        return self.degree == 1 and self.index == 0

    @property
    def name(self) -> str:
        return f"{self.degree}d-{self.index}"


# values of the four linear characters at (a, x); the x-column flips from
# +-i to +-1 when n is even because then x^2 = a^n forces a real value
_ONE_DIM_ODD = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1j), (-1.0, -1j))
_ONE_DIM_EVEN = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))


def list_irreps(params: GroupParams) -> list[Irrep]:
    """The four degree-1 irreps followed by the n-1 degree-2 irreps.

    Degrees satisfy sum(d^2) = 4 + 4(n-1) = 4n, so the list is complete.
    """
    one = [Irrep(1, i) for i in range(4)]
    two = [Irrep(2, r) for r in range(1, params.n)]
    return one + two


def _one_dim_value(i: int, g: GroupElement, params: GroupParams) -> complex:
    table = _ONE_DIM_ODD if params.n % 2 else _ONE_DIM_EVEN
    val_a, val_x = table[i]
    # val_a is +-1, so val_a^e only depends on the parity of e (exact)
    out = complex(val_a) if g.exponent % 2 else complex(1.0)
    if g.has_x:
        out *= val_x
    return out


def _omega_power(m: int, n: int) -> complex:
    # e^(i*pi*m/n) from the exact angle; avoids compounding roundoff
    return cmath.rect(1.0, math.pi * m / n)


def evaluate(rep: Irrep, g: GroupElement, params: GroupParams) -> np.ndarray:
    """Unitary matrix of g under rep, as a (1,1) or (2,2) complex array."""
    if rep.degree == 1:
        return np.array([[_one_dim_value(rep.index, g, params)]], dtype=complex)
    n = params.n
    if rep.index > n - 1:
        raise ValueError(f"degree-2 index {rep.index} out of range for n={n}")
    w = _omega_power((rep.index * g.exponent) % (2 * n), n)
    sign = -1.0 if rep.index % 2 else 1.0
    if g.has_x:
        return np.array([[0.0, sign * w], [w.conjugate(), 0.0]], dtype=complex)
    return np.array([[w, 0.0], [0.0, w.conjugate()]], dtype=complex)


def character(rep: Irrep, g: GroupElement, params: GroupParams) -> complex:
    return complex(np.trace(evaluate(rep, g, params)))


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def conj_transpose(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def trace(m: np.ndarray) -> complex:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"trace needs a square matrix, got {m.shape}")
    return complex(np.trace(m))


def mat_power(m: np.ndarray, k: int) -> np.ndarray:
    """m^k by repeated squaring; k may reach ~10^6 in sweeps."""
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"power needs a square matrix, got {m.shape}")
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    result = np.eye(m.shape[0], dtype=complex)
    base = np.asarray(m, dtype=complex)
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def fourier_transform(P: Measure, rep: Irrep, params: GroupParams) -> np.ndarray:
    """sum_s P(s) * rep(s)."""
    if params != P.params:
        raise ValueError("params mismatch between measure and call")
    out = np.zeros((rep.degree, rep.degree), dtype=complex)
    for g, w in P.weights.items():
        out += w * evaluate(rep, g, params)
    return out


def fourier_inverse(
    transforms: Mapping[Irrep, np.ndarray], params: GroupParams
) -> Measure:
    """Reconstruct the measure from one transform per irrep.

    P(s) = (1/4n) * sum_rho d_rho * Tr(rho(s^-1) transform(rho)).  Each
    reconstructed value must be real and non-negative up to
    INVERSION_TOLERANCE; the imaginary residue is checked and discarded,
    and sub-roundoff negatives are clamped to zero.
    """
    expected = list_irreps(params)
    if set(transforms) != set(expected):
        raise ValueError("need exactly one transform per irrep of the group")
    tables = rep_tables(params.n)
    f1 = np.empty(4, dtype=complex)
    F2 = np.empty((params.n - 1, 2, 2), dtype=complex)
    for rep in expected:
        m = np.asarray(transforms[rep], dtype=complex)
        if m.shape != (rep.degree, rep.degree):
            raise ValueError(f"transform at {rep.name} has shape {m.shape}")
        if rep.degree == 1:
            f1[rep.index] = m[0, 0]
        else:
            F2[rep.index - 1] = m
    values = invert_transform_vectors(f1, F2, tables)
    weights = {
        g: max(float(v), 0.0) for g, v in zip(tables.element_list, values)
    }
    return Measure(params, weights)


@dataclass(frozen=True)
class RepTables:
    """All irrep matrices over the group enumeration, stacked for numpy.

    one_dim[i, s] is the i-th linear character at element s; two_dim[r-1, s]
    is rho_r at s.  The *_inv variants are the same thing at s^-1 and drive
    vectorized Fourier inversion.
    """

    params: GroupParams
    element_list: tuple[GroupElement, ...]
    one_dim: np.ndarray  # (4, 4n) complex
    two_dim: np.ndarray  # (n-1, 4n, 2, 2) complex
    one_dim_inv: np.ndarray
    two_dim_inv: np.ndarray


@lru_cache(maxsize=None)
def rep_tables(n: int) -> RepTables:
    params = GroupParams(n)
    els = elements(params)
    order = params.order
    inv_idx = [element_index(inverse(g, params), params) for g in els]
    one_dim = np.empty((4, order), dtype=complex)
    for i in range(4):
        for j, g in enumerate(els):
            one_dim[i, j] = _one_dim_value(i, g, params)
    two_dim = np.empty((n - 1, order, 2, 2), dtype=complex)
    for r in range(1, n):
        rep = Irrep(2, r)
        for j, g in enumerate(els):
            two_dim[r - 1, j] = evaluate(rep, g, params)
    return RepTables(
        params=params,
        element_list=tuple(els),
        one_dim=one_dim,
        two_dim=two_dim,
        one_dim_inv=one_dim[:, inv_idx].copy(),
        two_dim_inv=two_dim[:, inv_idx].copy(),
    )


def measure_transform_vectors(P: Measure) -> tuple[np.ndarray, np.ndarray]:
    """Transforms of P at every irrep: (4,) scalars and (n-1, 2, 2) matrices."""
    tables = rep_tables(P.params.n)
    w = np.zeros(P.params.order)
    for g, weight in P.weights.items():
        w[element_index(g, P.params)] = weight
    f1 = tables.one_dim @ w
    F2 = np.einsum("rsij,s->rij", tables.two_dim, w)
    return f1, F2


def invert_transform_vectors(
    f1: np.ndarray, F2: np.ndarray, tables: RepTables
) -> np.ndarray:
    """Measure values over the group enumeration, with residue checks."""
    values = (
        tables.one_dim_inv.T @ f1
        + 2.0 * np.einsum("rsij,rji->s", tables.two_dim_inv, F2)
    ) / tables.params.order
    worst_imag = float(np.abs(values.imag).max())
    if worst_imag >= INVERSION_TOLERANCE:
        raise FourierInversionError(
            f"imaginary residue {worst_imag:.3e} exceeds {INVERSION_TOLERANCE}"
        )
    real = values.real
    worst_neg = float(real.min())
    if worst_neg < -INVERSION_TOLERANCE:
        raise FourierInversionError(
            f"negative mass {worst_neg:.3e} below -{INVERSION_TOLERANCE}"
        )
    return real
