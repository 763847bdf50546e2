"""Finite quantum algebra on one ``n x n`` block.

In the kaleidoscope basis ``q^{2N}`` is the clock matrix and the lowering
operator is proportional to the shift; q-numbers of ``N`` give the
deformed ladder operators ``B, B^+`` and the q-oscillator Hamiltonian.

The shift is the cyclic permutation with ``shift[j, j-1] = 1``, i.e. the
Fourier conjugate ``Q clock Q^dagger``.  With that orientation the
q-commutation reads ``clock @ shift == q**2 * shift @ clock``.

``B^+`` is the plain transpose of ``B``: for q-numbers that are negative
or complex only the transpose reproduces ``B^+ B = diag([k])``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NegativeRadicandError
from .fock import OperatorMatrix
from .kaleidoscope import qft_matrix
from .modexp import RootOfUnity


class QNumberKind(str, enum.Enum):
    NONSYMMETRIC = "nonsymmetric"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True, eq=False)
class SylvesterPair:
    n: int
    clock: OperatorMatrix
    shift: OperatorMatrix


def _check_order(n: int) -> None:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")


def clock_matrix(n: int) -> OperatorMatrix:
    """``diag(1, q^2, ..., q^{2(n-1)})``, the block of ``q^{2N}``."""
    return np.diag(RootOfUnity(n).q_powers(2 * np.arange(n)))


def shift_matrix(n: int) -> OperatorMatrix:
    out = np.zeros((n, n), dtype=complex)
    out[np.arange(n), (np.arange(n) - 1) % n] = 1.0
    return out


def sylvester_pair(n: int) -> SylvesterPair:
    _check_order(n)
    return SylvesterPair(n, clock_matrix(n), shift_matrix(n))


def q_number(k: int, n: int, kind: QNumberKind | str = QNumberKind.NONSYMMETRIC) -> complex:
    """q-number ``[k]`` at ``q = exp(i pi/n)``.

    nonsymmetric: ``(q^{2k} - 1) / (q^2 - 1)``
    symmetric:    ``(q^{2k} - q^{-2k}) / (q^2 - q^{-2}) = sin(2 pi k/n) / sin(2 pi/n)``

    For ``n == 2`` the symmetric ratio is 0/0; the polynomial continuation
    ``sum_j q^{2(k-1-2j)} = k (-1)**(k-1)`` is returned.
    """
    _check_order(n)
    kind = QNumberKind(kind)
    rou = RootOfUnity(n)
    if kind is QNumberKind.NONSYMMETRIC:
        return (rou.q_power(2 * k) - 1) / (rou.q2 - 1)
    if n == 2:
        return complex(k * (-1) ** (k - 1)) if k > 0 else 0j
    # reduce the angle first so sin sees an argument in [0, 2 pi)
    r = k % n
    if 4 * r % n == 0:
        numer = (0.0, 1.0, 0.0, -1.0)[4 * r // n]
    else:
        numer = math.sin(2 * math.pi * r / n)
    return complex(numer / math.sin(2 * math.pi / n))


def q_number_polar(k: int, n: int) -> complex:
    """Nonsymmetric ``[k] = exp(i pi (k-1)/n) sin(pi k/n) / sin(pi/n)``."""
    _check_order(n)
    return complex(np.exp(1j * math.pi * (k - 1) / n) * math.sin(math.pi * k / n) / math.sin(math.pi / n))


def q_number_matrix(n: int, kind: QNumberKind | str, shift: int = 0) -> OperatorMatrix:
    """``diag([shift], [shift + 1], ..., [shift + n - 1])``: ``[N + shift]`` on the block."""
    return np.diag([q_number(k + shift, n, kind) for k in range(n)]).astype(complex)


def b_operators(n: int, kind: QNumberKind | str = QNumberKind.SYMMETRIC) -> tuple[OperatorMatrix, OperatorMatrix]:
    """``(B, B^+)`` with ``B[k-1, k] = sqrt([k])`` and ``B^+ = B.T``.

    Square roots of negative or complex q-numbers take the principal branch.
    """
    _check_order(n)
    kind = QNumberKind(kind)
    b = np.zeros((n, n), dtype=complex)
    for k in range(1, n):
        qk = q_number(k, n, kind)
        if kind is QNumberKind.SYMMETRIC and abs(qk.imag) > 1e-12:
            raise NegativeRadicandError(f"symmetric [{k}] is not real: {qk}")
        b[k - 1, k] = np.sqrt(qk)
    return b, b.T.copy()


class AlgebraResiduals(NamedTuple):
    """Max-entry residuals on interior levels ``0..n-2``; ``top_*`` is level ``n-1``."""

    symmetric_q2: float
    symmetric_qm2: float
    nonsymmetric_q2: float
    nonsymmetric_commutator: float
    top_symmetric: float
    top_nonsymmetric: float


def relation_matrices(n: int) -> dict[str, OperatorMatrix]:
    """Left minus right side of each ladder relation as an ``n x n`` matrix.

    symmetric_q2:          B B^+ - q^2 B^+ B - q^{-2N}
    symmetric_qm2:         B B^+ - q^{-2} B^+ B - q^{2N}
    nonsymmetric_q2:       B B^+ - q^2 B^+ B - I
    nonsymmetric_commutator: B B^+ - B^+ B - q^{2N}
    """
    _check_order(n)
    rou = RootOfUnity(n)
    q2, qm2 = rou.q_power(2), rou.q_power(-2)
    clock = clock_matrix(n)
    eye = np.eye(n, dtype=complex)
    bs, bsd = b_operators(n, QNumberKind.SYMMETRIC)
    bn, bnd = b_operators(n, QNumberKind.NONSYMMETRIC)
    return {
        "symmetric_q2": bs @ bsd - q2 * bsd @ bs - clock.conj(),
        "symmetric_qm2": bs @ bsd - qm2 * bsd @ bs - clock,
        "nonsymmetric_q2": bn @ bnd - q2 * bnd @ bn - eye,
        "nonsymmetric_commutator": bn @ bnd - bnd @ bn - clock,
    }


def algebra_residuals(n: int) -> AlgebraResiduals:
    """Residuals of the symmetric and nonsymmetric ladder relations.

    The relations are statements about infinite matrices; on a single
    block the top level ``n-1`` sees ``B B^+ = 0`` instead of ``[n]``, so it
    is reported separately.  Its defect is ``|[n]|``: zero for ``n >= 3``
    where ``q^{2n} = 1`` makes ``[n]`` vanish, and 2 for the symmetric
    ``n = 2`` continuation.
    """
    rel = relation_matrices(n)

    def interior(m):
        return float(np.abs(m[: n - 1, : n - 1]).max()) if n > 1 else 0.0

    def top(*ms):
        return max(float(np.abs(m[n - 1, :]).max()) for m in ms)

    return AlgebraResiduals(
        interior(rel["symmetric_q2"]),
        interior(rel["symmetric_qm2"]),
        interior(rel["nonsymmetric_q2"]),
        interior(rel["nonsymmetric_commutator"]),
        top(rel["symmetric_q2"], rel["symmetric_qm2"]),
        top(rel["nonsymmetric_q2"], rel["nonsymmetric_commutator"]),
    )


def spectrum_closed(n: int, hbar_omega: float = 1.0) -> np.ndarray:
    """``E_k = (hw/2) sin(2 pi (k + 1/2)/n) / sin(pi/n)`` for ``k < n``."""
    _check_order(n)
    k = np.arange(n)
    return hbar_omega / 2 * np.sin(2 * np.pi * (k + 0.5) / n) / np.sin(np.pi / n)


def hamiltonian_matrix(n: int, hbar_omega: float = 1.0) -> OperatorMatrix:
    """``(hw/2)([N] + [N+1])`` with symmetric q-numbers, diagonal in the kaleidoscope basis."""
    _check_order(n)
    if hbar_omega <= 0:
        raise DomainError("hbar_omega must be positive")
    h = q_number_matrix(n, QNumberKind.SYMMETRIC) + q_number_matrix(n, QNumberKind.SYMMETRIC, shift=1)
    return (hbar_omega / 2 * h.real).astype(float)


def hamiltonian_spectrum(n: int, hbar_omega: float = 1.0) -> np.ndarray:
    """Levels ``E_0 .. E_{n-1}`` of the q-oscillator.

    The closed form is returned after checking it against the eigenvalues
    of :func:`hamiltonian_matrix`.
    """
    closed = spectrum_closed(n, hbar_omega)
    eig = np.linalg.eigvalsh(hamiltonian_matrix(n, hbar_omega))
    scale = np.abs(closed).max()
    if np.abs(np.sort(closed) - eig).max() > 1e-12 * scale:
        raise ArithmeticError(f"q-oscillator eigenvalues disagree with the closed form for n={n}")
    return closed


def conjugation_residual(n: int) -> float:
    """``max |shift - Q clock Q^dagger|``."""
    q = qft_matrix(n)
    return float(np.abs(shift_matrix(n) - q @ clock_matrix(n) @ q.conj().T).max())
