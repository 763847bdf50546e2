"""Mean photon number in kaleidoscope states.

``<s|N|s>_alpha = x f_{s-1}(x) / f_s(x)`` with ``x = |alpha|^2`` and the
index taken mod n.  The curve starts at ``s`` for ``x -> 0`` and approaches
the coherent-state value ``x`` for large ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .errors import DomainError, UnsupportedOrderError
from .kaleidoscope import basis_dim, build_state_direct
from .modexp import mod_exp_scaled


def photon_expectation(n: int, s: int, alpha_sq: float) -> float:
    """Mean photon number of ``|s>_alpha`` at ``|alpha|^2 = alpha_sq``.

    ``f_{s-1}/f_s`` is formed from ``exp(-x) f`` values, so the ratio stays
    finite where ``f`` itself would overflow.  Returns ``s`` at ``alpha_sq == 0``.
    """
    if not 0 <= s < n:
        raise DomainError(f"state index s={s} outside [0, {n - 1}]")
    if alpha_sq < 0:
        raise DomainError("alpha_sq must be >= 0")
    if alpha_sq == 0:
        return float(s)
    return alpha_sq * mod_exp_scaled(n, (s - 1) % n, alpha_sq) / mod_exp_scaled(n, s, alpha_sq)


def photon_closed(n: int, s: int, alpha_sq: float) -> float:
    """Hyperbolic/trigonometric photon-number formulas for ``n`` in {2, 3, 4}.

    n=2: ``x tanh x`` and ``x coth x``.
    n=3: ratios of ``1 + 2 exp(-3x/2) cos(sqrt(3) x/2 + phase)``.
    n=4: ratios of ``cosh x +- cos x`` and ``sinh x +- sin x``.
    """
    if not 0 <= s < n:
        raise DomainError(f"state index s={s} outside [0, {n - 1}]")
    x = float(alpha_sq)
    if x == 0:
        return float(s)
    if n == 2:
        return x * math.tanh(x) if s == 0 else x / math.tanh(x)
    if n == 3:
        def g(r):
            return 1 + 2 * math.exp(-1.5 * x) * math.cos(math.sqrt(3) / 2 * x - 2 * math.pi * r / 3)

        return x * g((s - 1) % 3) / g(s)
    if n == 4:
        if x > 350:
            return x * mod_exp_scaled(4, (s - 1) % 4, x) / mod_exp_scaled(4, s, x)
        forms = (
            math.cosh(x) + math.cos(x),
            math.sinh(x) + math.sin(x),
            math.cosh(x) - math.cos(x),
            math.sinh(x) - math.sin(x),
        )
        return x * forms[(s - 1) % 4] / forms[s]
    raise UnsupportedOrderError(f"no closed photon formula for n={n}")


def photon_fock(n: int, s: int, alpha_sq: float, tol: float = fock.DEFAULT_TOL) -> float:
    """Brute-force ``<s|N|s>`` from the Fock amplitudes of the state."""
    alpha = math.sqrt(alpha_sq)
    v = build_state_direct(n, alpha, s, basis_dim(alpha, n, tol))
    return fock.number_expectation(v)


@dataclass(frozen=True)
class PhotonCurve:
    n: int
    s: int
    alpha_sq: np.ndarray
    expectation: np.ndarray

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.alpha_sq.tolist(), self.expectation.tolist()))


def photon_curve(n: int, s: int, x_max: float, steps: int) -> PhotonCurve:
    """Sample ``photon_expectation`` at ``steps + 1`` evenly spaced points of ``[0, x_max]``."""
    if steps < 2:
        raise DomainError("steps must be >= 2")
    if x_max <= 0:
        raise DomainError("x_max must be positive")
    xs = np.array([x_max * i / steps for i in range(steps + 1)])
    ys = np.array([photon_expectation(n, s, x) for x in xs])
    return PhotonCurve(n, s, xs, ys)
