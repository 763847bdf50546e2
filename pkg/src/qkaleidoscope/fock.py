"""Truncated Fock-space numerics.

States are complex amplitude vectors over the number states ``|0> .. |D-1>``;
operators are dense ``D x D`` numpy arrays.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import gammainc

from .errors import DimensionMismatchError, DomainError, SeriesOverflowError

DEFAULT_TOL = 1e-12
COHERENT_GUARD = 300.0

# dense complex square matrix
OperatorMatrix = np.ndarray


@dataclass(frozen=True, eq=False)
class FockVector:
    """Amplitudes on the number states; ``amp[m]`` multiplies ``|m>``."""

    amp: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amp, dtype=complex)
        if amp.ndim != 1 or amp.size < 1:
            raise DomainError("a Fock vector needs a 1-d amplitude array of length >= 1")
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)

    @property
    def dim(self) -> int:
        return self.amp.size

    @classmethod
    def basis(cls, m: int, dim: int) -> "FockVector":
        """The number state ``|m>``."""
        if not 0 <= m < dim:
            raise DomainError(f"level {m} outside a {dim}-level truncation")
        amp = np.zeros(dim, dtype=complex)
        amp[m] = 1.0
        return cls(amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    def normalized(self) -> "FockVector":
        return FockVector(self.amp / self.norm())

    def __add__(self, other: "FockVector") -> "FockVector":
        _same_dim(self, other)
        return FockVector(self.amp + other.amp)

    def __sub__(self, other: "FockVector") -> "FockVector":
        _same_dim(self, other)
        return FockVector(self.amp - other.amp)

    def __mul__(self, scalar: complex) -> "FockVector":
        return FockVector(self.amp * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "FockVector":
        return FockVector(-self.amp)


def _same_dim(u: FockVector, v: FockVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"dimensions differ: {u.dim} vs {v.dim}")


def poisson_tail(alpha_sq: float, dim: int) -> float:
    """Probability that a coherent state with mean ``alpha_sq`` has ``>= dim`` photons."""
    if dim <= 0:
        return 1.0
    if alpha_sq == 0:
        return 0.0
    # P(X >= D) for X ~ Poisson(x) is the regularized lower gamma P(D, x)
    return float(gammainc(dim, alpha_sq))


def truncation_dim(alpha_abs: float, n: int = 1, tol: float = DEFAULT_TOL) -> int:
    """Smallest truncation ``D`` that keeps a coherent state of amplitude ``alpha_abs`` intact.

    ``D`` is a multiple of ``n``, at least ``4n``, and the Poisson weight
    beyond ``D`` is below ``tol**2``, so the truncated state has norm
    ``>= 1 - tol``.
    """
    if not 0 < tol < 1:
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    x = float(alpha_abs) ** 2
    dim = 4 * n
    while poisson_tail(x, dim) >= tol**2:
        dim += n
    return dim


def coherent_state(alpha: complex, dim: int) -> FockVector:
    """Glauber coherent state ``|alpha>`` truncated to ``dim`` levels.

    Amplitudes ``exp(-|a|^2/2) a^m / sqrt(m!)`` are built by recurrence and
    the result is renormalized so the truncation loss does not show up as a
    norm defect.
    """
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    if x > COHERENT_GUARD:
        raise SeriesOverflowError(f"|alpha|^2 = {x:g} exceeds {COHERENT_GUARD:g}")
    amp = np.empty(dim, dtype=complex)
    amp[0] = math.exp(-x / 2)
    for m in range(1, dim):
        amp[m] = amp[m - 1] * alpha / math.sqrt(m)
    return FockVector(amp / np.linalg.norm(amp))


def annihilation_matrix(dim: int) -> OperatorMatrix:
    return np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)


def creation_matrix(dim: int) -> OperatorMatrix:
    return np.diag(np.sqrt(np.arange(1, dim)), -1).astype(complex)


def number_matrix(dim: int) -> OperatorMatrix:
    return np.diag(np.arange(dim)).astype(complex)


def apply_annihilation(v: FockVector) -> FockVector:
    """``a|v>``: ``out[m] = sqrt(m+1) v[m+1]`` and the top level becomes 0."""
    out = np.zeros(v.dim, dtype=complex)
    out[:-1] = np.sqrt(np.arange(1, v.dim)) * v.amp[1:]
    return FockVector(out)


def apply_creation(v: FockVector) -> FockVector:
    """``a^dagger|v>``: ``out[m] = sqrt(m) v[m-1]``.

    Whatever would land on level ``dim`` is dropped; callers size the
    truncation so this leak stays negligible.
    """
    out = np.zeros(v.dim, dtype=complex)
    out[1:] = np.sqrt(np.arange(1, v.dim)) * v.amp[:-1]
    return FockVector(out)


def inner_product(u: FockVector, v: FockVector) -> complex:
    """``<u|v>``, conjugate-linear in ``u``."""
    _same_dim(u, v)
    return complex(np.vdot(u.amp, v.amp))


def number_expectation(v: FockVector) -> float:
    """Mean photon number ``<v|N|v>`` of a normalized state."""
    probs = np.abs(v.amp) ** 2
    total = probs.sum()
    if abs(total - 1.0) > 1e-6:
        warnings.warn(f"number_expectation on a state with norm^2 {total:.3g}", RuntimeWarning, stacklevel=2)
    return float(np.dot(np.arange(v.dim), probs))
