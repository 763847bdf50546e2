"""Kaleidoscope states: orthonormal superpositions of coherent states on a regular n-gon.

State ``|s>_alpha`` mixes the ``n`` rotated coherent states
``|q^{2j} alpha>`` with Fourier phases ``w^{js}`` and lives only on the
Fock levels ``m = s (mod n)``.  Two independent constructions are given:

* :func:`build_state_qft` sums rotated coherent states in Fock space.
* :func:`build_state_direct` writes the amplitudes of the mod-n
  generating function ``f_s(alpha a^dagger) |0> / sqrt(f_s(|alpha|^2))``.

Phase convention: the amplitude on level ``s`` carries the phase of
``alpha**s`` (real positive for real positive alpha).  This is the phase
the generating-function form produces, and with it the lowering relation
``a|s> = alpha N_s/N_{s-1} |s-1>`` holds for complex alpha as well.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .errors import DivergenceError, DomainError
from .fock import FockVector, OperatorMatrix
from .modexp import RootOfUnity, mod_exp_scaled

# unnormalized QFT sums below this are cancellation noise (alpha -> 0)
_DEGENERATE_NORM = 1e-8

MAX_ORDER = 12


def qft_matrix(n: int) -> OperatorMatrix:
    """``n x n`` Fourier matrix with entries ``w**(j*k) / sqrt(n)``, ``w = exp(-2 pi i/n)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    rou = RootOfUnity(n)
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return rou.q_powers(-2 * j * k) * math.sqrt(1.0 / n)


def _check(n: int, s: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= s < n:
        raise DomainError(f"state index s={s} outside [0, {n - 1}]")


def _align_phase(amp: np.ndarray, s: int, alpha: complex) -> np.ndarray:
    # rotate so that amp[s] has the phase of alpha**s
    target = cmath.exp(1j * s * cmath.phase(alpha)) if alpha != 0 else 1.0
    current = amp[s] / abs(amp[s])
    return amp * (target / current)


def build_state_qft(n: int, alpha: complex, s: int, dim: int) -> FockVector:
    """``|s>_alpha`` as the normalized sum ``sum_j w^{js} |q^{2j} alpha>``."""
    _check(n, s)
    if dim <= s:
        raise DomainError(f"dim={dim} cannot hold level {s}")
    alpha = complex(alpha)
    rou = RootOfUnity(n)
    total = np.zeros(dim, dtype=complex)
    for j in range(n):
        total += rou.q_power(-2 * j * s) * fock.coherent_state(rou.q_power(2 * j) * alpha, dim).amp
    norm = np.linalg.norm(total)
    if norm <= _DEGENERATE_NORM or abs(total[s]) == 0:
        # kitten limit: the state tends to the number state |s>
        return FockVector.basis(s, dim)
    return FockVector(_align_phase(total / norm, s, alpha))


def build_state_direct(n: int, alpha: complex, s: int, dim: int) -> FockVector:
    """``|s>_alpha`` from the mod-n generating function.

    ``amp[n*k + s] = alpha**(n*k+s) / sqrt((n*k+s)!) / sqrt(f_s(|alpha|^2))``;
    every other amplitude is exactly zero.  ``alpha == 0`` gives ``|s>``.
    """
    _check(n, s)
    if dim <= s:
        raise DomainError(f"dim={dim} cannot hold level {s}")
    alpha = complex(alpha)
    if alpha == 0:
        return FockVector.basis(s, dim)
    x = abs(alpha) ** 2
    # alpha^m / sqrt(m!) relative to exp(|alpha|^2/2), which keeps large |alpha| finite
    ladder = np.empty(dim, dtype=complex)
    ladder[0] = math.exp(-x / 2)
    for m in range(1, dim):
        ladder[m] = ladder[m - 1] * alpha / math.sqrt(m)
    amp = np.zeros(dim, dtype=complex)
    amp[s::n] = ladder[s::n]
    return FockVector(amp / math.sqrt(mod_exp_scaled(n, s, x)))


def normalization_constant(n: int, s: int, alpha_sq: float) -> float:
    """``N_s = exp(x/2) / sqrt(n**2 f_s(x))`` with ``x = |alpha|^2``.

    With this constant ``N_s * sum_j conj(q)^{2sj} |q^{2j} alpha>`` has unit
    norm, which fixes the overall factor independently of how the sum is
    split between a Fourier matrix and a diagonal.
    """
    _check(n, s)
    if alpha_sq <= 0:
        raise DivergenceError("N_s diverges at |alpha|^2 = 0 where f_s vanishes")
    return 1.0 / (n * math.sqrt(mod_exp_scaled(n, s, alpha_sq)))


def flip_coefficient(n: int, s: int, alpha: complex) -> complex:
    """Coefficient ``c`` in ``a|s>_alpha = c |s-1 mod n>_alpha``.

    Equals ``alpha * N_s / N_{s-1}``; at ``alpha == 0`` the limit is
    ``sqrt(s)`` (``a|s> = sqrt(s)|s-1>``, zero for ``s == 0``).
    """
    _check(n, s)
    alpha = complex(alpha)
    if alpha == 0:
        return complex(math.sqrt(s))
    x = abs(alpha) ** 2
    return alpha * math.sqrt(mod_exp_scaled(n, (s - 1) % n, x) / mod_exp_scaled(n, s, x))


@dataclass(frozen=True, eq=False)
class KaleidoscopeBasis:
    """The ``n`` states ``|s>_alpha`` for one ``(n, alpha)`` with their constants ``N_s``."""

    n: int
    alpha: complex
    dim: int
    states: tuple[FockVector, ...]
    norms: tuple[float, ...]

    def matrix(self) -> np.ndarray:
        """States as columns of a ``dim x n`` array."""
        return np.column_stack([v.amp for v in self.states])

    def superpose(self, coeffs) -> FockVector:
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (self.n,):
            raise DomainError(f"expected {self.n} coefficients")
        return FockVector(self.matrix() @ coeffs)


def basis_dim(alpha_abs: float, n: int, tol: float = fock.DEFAULT_TOL) -> int:
    """Default truncation for a basis: the coherent-state dimension plus one block of ``n``.

    ``a**n`` reads ``n`` levels above its output, so the extra block keeps
    the power-eigenstate and lowering checks free of truncation artefacts.
    """
    return fock.truncation_dim(alpha_abs, n, tol) + n


def build_basis(
    n: int, alpha: complex, dim: int | None = None, tol: float = fock.DEFAULT_TOL, route: str = "direct"
) -> KaleidoscopeBasis:
    """Build all ``n`` kaleidoscope states, choosing the truncation if ``dim`` is None."""
    if not 1 <= n <= MAX_ORDER:
        raise DomainError(f"n must lie in [1, {MAX_ORDER}], got {n}")
    alpha = complex(alpha)
    if dim is None:
        dim = basis_dim(abs(alpha), n, tol)
    build = {"direct": build_state_direct, "qft": build_state_qft}.get(route)
    if build is None:
        raise DomainError(f"unknown construction route {route!r}")
    states = tuple(build(n, alpha, s, dim) for s in range(n))
    x = abs(alpha) ** 2
    norms = tuple(normalization_constant(n, s, x) if x > 0 else math.inf for s in range(n))
    return KaleidoscopeBasis(n, alpha, dim, states, norms)


def gram_matrix(basis: KaleidoscopeBasis) -> OperatorMatrix:
    """``G[s, t] = <s|t>``."""
    m = basis.matrix()
    return m.conj().T @ m


def apply_parity(n: int, v: FockVector) -> FockVector:
    """Dilatation operator ``q^{2N}``: multiplies level ``m`` by ``q**(2m)``."""
    rou = RootOfUnity(n)
    return FockVector(rou.q_powers(2 * np.arange(v.dim)) * v.amp)


def apply_annihilation_power(v: FockVector, power: int) -> FockVector:
    for _ in range(power):
        v = fock.apply_annihilation(v)
    return v


def check_power_eigenstate(basis: KaleidoscopeBasis, s: int) -> float:
    """``|| a^n |s> - alpha^n |s> ||``."""
    v = basis.states[s]
    lhs = apply_annihilation_power(v, basis.n)
    return float(np.linalg.norm(lhs.amp - basis.alpha**basis.n * v.amp))


def check_flip(basis: KaleidoscopeBasis, s: int) -> float:
    """``|| a|s> - alpha (N_s/N_{s-1}) |s-1> ||``."""
    lowered = fock.apply_annihilation(basis.states[s])
    target = flip_coefficient(basis.n, s, basis.alpha) * basis.states[(s - 1) % basis.n].amp
    return float(np.linalg.norm(lowered.amp - target))


def off_lattice_amplitude(v: FockVector, n: int, s: int) -> float:
    """Largest ``|amp[m]|`` over levels ``m`` not congruent to ``s`` mod ``n``."""
    mask = (np.arange(v.dim) % n) != s
    return float(np.abs(v.amp[mask]).max()) if mask.any() else 0.0

