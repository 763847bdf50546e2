"""Mod-n exponential functions.

For a polygon order ``n`` the exponential series splits into ``n`` partial
sums over the powers congruent to ``s`` modulo ``n``::

    f_s(x) = sum_k x**(n*k + s) / (n*k + s)!      0 <= s < n

``f_0, f_1`` for ``n = 2`` are ``cosh`` and ``sinh``.  Three evaluation
routes are provided (power series, finite superposition of rotated
exponentials, and real closed forms for n <= 4) so each can be checked
against the others.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DomainError, SeriesOverflowError, UnsupportedOrderError

DEFAULT_PRECISION = 1e-16
OVERFLOW_GUARD = 700.0

# above this the superposition route is used for real positive arguments
_SERIES_CUTOFF = 50.0

_QUARTER_TURNS = (1.0 + 0.0j, 1j, -1.0 + 0.0j, -1j)


@dataclass(frozen=True)
class RootOfUnity:
    """The pair ``(n, q)`` with ``q = exp(i*pi/n)``, so that ``q**(2n) == 1``.

    ``w = conj(q**2) = exp(-2*pi*i/n)`` is the Fourier kernel.
    """

    n: int
    q: complex = field(init=False)
    w: complex = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"polygon order must be >= 1, got {self.n}")
        object.__setattr__(self, "q", self.q_power(1))
        object.__setattr__(self, "w", self.q_power(-2))

    def q_power(self, k: int) -> complex:
        """``q**k`` with the exponent reduced mod 2n.

        Angles on a quarter turn are returned exactly so that
        ``q_power(2n) == 1`` and ``q_power(n) == -1`` with no round-off.
        """
        r = k % (2 * self.n)
        if (2 * r) % self.n == 0:
            return _QUARTER_TURNS[(2 * r) // self.n]
        return cmath.exp(1j * math.pi * r / self.n)

    def q_powers(self, exponents) -> np.ndarray:
        return np.array([self.q_power(int(k)) for k in np.ravel(exponents)], dtype=complex).reshape(
            np.shape(exponents)
        )

    @property
    def q2(self) -> complex:
        return self.q_power(2)


def root_of_unity_sum(n: int, m: int) -> complex:
    """``sum_{k<n} q**(2mk)``; equals ``n`` when ``m % n == 0`` and 0 otherwise."""
    rou = RootOfUnity(n)
    return sum(rou.q_power(2 * m * k) for k in range(n))


def _check_indices(n: int, s: int) -> None:
    if n < 1:
        raise DomainError(f"polygon order must be >= 1, got {n}")
    if not 0 <= s < n:
        raise DomainError(f"residue s={s} outside [0, {n - 1}]")


def _check_guard(x: complex) -> None:
    if abs(x) > OVERFLOW_GUARD:
        raise SeriesOverflowError(f"|x| = {abs(x):g} exceeds the overflow guard {OVERFLOW_GUARD:g}")


def _series_from(n: int, p0: int, x: complex, precision: float) -> complex:
    # sum_{k>=0} x**(n*k + p0) / (n*k + p0)!  by multiplicative recurrence
    term = 1.0
    for j in range(1, p0 + 1):
        term = term * x / j
    total = term
    xn = x**n
    p = p0
    while True:
        denom = 1.0
        for j in range(1, n + 1):
            denom *= p + j
        ratio = abs(xn) / denom
        nxt = term * xn / denom
        p += n
        # stop only once the terms are shrinking
        if abs(nxt) < precision * (1.0 + abs(total)) and ratio < 1.0:
            break
        total += nxt
        term = nxt
    return total


def mod_exp_series(n: int, s: int, x: complex, precision: float = DEFAULT_PRECISION) -> complex:
    """Evaluate ``f_s(x)`` (mod n) from its power series.

    Terms follow ``t_{k+1} = t_k * x**n / prod_{j=1..n}(n*k + s + j)``; the
    sum stops when the next term falls below ``precision * (1 + |sum|)``.

    Raises
    ------
    DomainError
        If ``n < 1`` or ``s`` is not in ``[0, n-1]``.
    SeriesOverflowError
        If ``|x| > 700``.
    """
    _check_indices(n, s)
    _check_guard(x)
    return _series_from(n, s, x, precision)


def mod_exp_superposition(n: int, s: int, x: complex) -> complex:
    """Evaluate ``f_s(x) = (1/n) sum_k conj(q)**(2sk) exp(q**(2k) x)``.

    Loses relative accuracy to cancellation when ``f_s(x)`` is much smaller
    than ``exp(|x|)`` (small x with s > 0, or large negative x).
    """
    _check_indices(n, s)
    _check_guard(x)
    rou = RootOfUnity(n)
    total = 0.0 + 0.0j
    for k in range(n):
        total += rou.q_power(-2 * s * k) * cmath.exp(rou.q_power(2 * k) * x)
    return total / n


def mod_exp_closed(n: int, s: int, x: float) -> float:
    """Real closed form of ``f_s(x)`` for ``n`` in {2, 3, 4}."""
    _check_indices(n, s)
    x = float(x)
    if n == 2:
        return math.cosh(x) if s == 0 else math.sinh(x)
    if n == 3:
        return (math.exp(x) + 2.0 * math.exp(-x / 2) * math.cos(math.sqrt(3) * x / 2 - 2 * math.pi * s / 3)) / 3
    if n == 4:
        hyp = math.cosh(x) if s % 2 == 0 else math.sinh(x)
        trig = math.cos(x) if s % 2 == 0 else math.sin(x)
        sign = 1.0 if s < 2 else -1.0
        return (hyp + sign * trig) / 2
    raise UnsupportedOrderError(f"no closed form for n={n}; use the series or superposition route")


def mod_exp_scaled(n: int, s: int, x: float) -> float:
    """``exp(-x) * f_s(x)`` for real ``x >= 0``, safe for arbitrarily large x.

    Used for ratios ``f_a / f_b`` where both values may overflow.
    """
    _check_indices(n, s)
    x = float(x)
    if x <= 30.0:
        return float(np.real(mod_exp_series(n, s, x))) * math.exp(-x)
    if n == 1:
        return 1.0
    if n == 2:
        e2 = math.exp(-2 * x)
        return (1 + e2) / 2 if s == 0 else (1 - e2) / 2
    if n == 3:
        return (1 + 2 * math.exp(-1.5 * x) * math.cos(math.sqrt(3) * x / 2 - 2 * math.pi * s / 3)) / 3
    if n == 4:
        e2 = math.exp(-2 * x)
        hyp = (1 + e2) / 2 if s % 2 == 0 else (1 - e2) / 2
        trig = math.exp(-x) * (math.cos(x) if s % 2 == 0 else math.sin(x))
        return (hyp + (1.0 if s < 2 else -1.0) * trig) / 2
    # dominant exp(x) factored out of every term
    rou = RootOfUnity(n)
    total = 0.0 + 0.0j
    for k in range(n):
        total += rou.q_power(-2 * s * k) * cmath.exp((rou.q_power(2 * k) - 1.0) * x)
    return total.real / n


def mod_exp_derivative(n: int, s: int, x: complex, order: int, precision: float = DEFAULT_PRECISION) -> complex:
    """``order``-th derivative of ``f_s`` from the term-by-term differentiated series.

    Differentiating drops every term whose power would go negative, so the
    surviving powers start at the smallest ``n*k + s - order >= 0``.
    """
    _check_indices(n, s)
    _check_guard(x)
    if order < 0:
        raise DomainError("derivative order must be >= 0")
    k0 = max(0, -((s - order) // n))
    return _series_from(n, n * k0 + s - order, x, precision)


class OdeResidual(NamedTuple):
    cycling: float
    finite_difference: float


def ode_residual(n: int, s: int, x: float, h: float = 1e-5) -> OdeResidual:
    """Residuals of ``f_s^(n) = f_s`` and of ``f_s' = f_{s-1}``.

    ``cycling`` is ``|f_s^(n)(x) - f_s(x)|`` with the n-th derivative taken
    from the differentiated series; it vanishes identically.
    ``finite_difference`` compares ``f_{s-1 mod n}(x)`` with the central
    difference ``(f_s(x+h) - f_s(x-h)) / 2h``.
    """
    _check_indices(n, s)
    if h <= 0:
        raise DomainError("finite-difference step must be positive")
    nth = mod_exp_derivative(n, s, x, n)
    cycling = abs(nth - mod_exp_series(n, s, x))
    fd = (mod_exp_series(n, s, x + h) - mod_exp_series(n, s, x - h)) / (2 * h)
    return OdeResidual(float(cycling), float(abs(mod_exp_series(n, (s - 1) % n, x) - fd)))


@dataclass(frozen=True)
class ModExpFamily:
    """The ``n`` functions ``f_0 .. f_{n-1}`` for one polygon order."""

    n: int
    precision: float = DEFAULT_PRECISION

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"polygon order must be >= 1, got {self.n}")

    def __call__(self, s: int, x: complex) -> complex:
        # large real arguments: the exp(x) term dominates, no cancellation
        if isinstance(x, (int, float)) and x > _SERIES_CUTOFF:
            return mod_exp_superposition(self.n, s, x).real
        value = mod_exp_series(self.n, s, x, self.precision)
        return value.real if isinstance(x, (int, float)) else value

    def values(self, x: complex) -> np.ndarray:
        return np.array([self(s, x) for s in range(self.n)])

    def derivative(self, s: int, x: complex, order: int = 1) -> complex:
        return mod_exp_derivative(self.n, s, x, order, self.precision)
