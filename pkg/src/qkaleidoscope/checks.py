"""Invariant suite for one ``(n, alpha)``, used by ``qkaleido verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import fock, kaleidoscope as kal, modexp, photon, qalgebra
from .qalgebra import QNumberKind


@dataclass(frozen=True)
class Check:
    module: str
    name: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.residual) and self.residual <= self.threshold)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.module:<12} {self.name:<38} residual={self.residual:.3e}  threshold={self.threshold:.1e}"


def route_grid(n: int) -> np.ndarray:
    """Arguments on which all evaluation routes of ``f_s`` keep 1e-10 relative agreement.

    The superposition route cancels for small x when ``f_s(x) << 1``; the
    lower end is raised for large n accordingly.
    """
    lo = 0.25 if n <= 7 else 2.0
    return np.arange(lo, 30.0 + 1e-9, 0.25)


def modexp_checks(n: int) -> Iterator[Check]:
    xs = np.linspace(-20, 20, 81)
    part = max(
        abs(sum(modexp.mod_exp_series(n, s, x) for s in range(n)) - math.exp(x)) / math.exp(abs(x)) for x in xs
    )
    yield Check("modexp", "partition sum_s f_s = e^x", part, 1e-12)

    worst = 0.0
    for x in route_grid(n):
        for s in range(n):
            ref = modexp.mod_exp_series(n, s, x)
            others = [modexp.mod_exp_superposition(n, s, x).real]
            if n <= 4:
                others.append(modexp.mod_exp_closed(n, s, x))
            worst = max(worst, max(abs(o - ref) / abs(ref) for o in others))
    yield Check("modexp", "series = superposition = closed", worst, 1e-10)

    cyc = max(modexp.ode_residual(n, s, x).cycling for s in range(n) for x in (0.0, 0.5, 1.0, 3.0))
    yield Check("modexp", "ODE f^(n) = f (re-indexed)", cyc, 0.0)
    fd = max(modexp.ode_residual(n, s, x).finite_difference for s in range(n) for x in (0.5, 1.0, 2.0))
    yield Check("modexp", "f_s' = f_(s-1) finite difference", fd, 1e-8)
    init = max(
        abs(modexp.mod_exp_derivative(n, s, 0.0, j) - (1.0 if j == s else 0.0)) for s in range(n) for j in range(n)
    )
    yield Check("modexp", "initial values f_s^(j)(0) = delta", init, 0.0)
    lemma = max(abs(modexp.root_of_unity_sum(n, m) - (n if m % n == 0 else 0)) for m in range(3 * n))
    yield Check("modexp", "root-of-unity sum lemma", lemma, 1e-12)


def fock_checks(alpha: complex, n: int, tol: float, dim: int | None) -> Iterator[Check]:
    d = dim or kal.basis_dim(abs(alpha), n, tol)
    coh = fock.coherent_state(alpha, d)
    eig = np.linalg.norm(fock.apply_annihilation(coh).amp - alpha * coh.amp)
    yield Check("fock", "a|alpha> = alpha|alpha>", float(eig), 10 * tol)
    yield Check("fock", "<alpha|N|alpha> = |alpha|^2", abs(fock.number_expectation(coh) - abs(alpha) ** 2), 10 * tol)
    v = fock.FockVector(np.exp(1j * np.arange(d)) / np.sqrt(d + np.arange(d)))
    interior = (fock.apply_annihilation(fock.apply_creation(v)) - fock.apply_creation(fock.apply_annihilation(v)) - v)
    yield Check("fock", "[a, a^dagger] = 1 (interior)", float(np.abs(interior.amp[: d - 1]).max()), 1e-12)


def kaleidoscope_checks(n: int, alpha: complex, tol: float, dim: int | None) -> Iterator[Check]:
    direct = kal.build_basis(n, alpha, dim=dim, tol=tol)
    qft = kal.build_basis(n, alpha, dim=dim, tol=tol, route="qft")
    eye = np.eye(n)
    gram = max(np.abs(kal.gram_matrix(b) - eye).max() for b in (direct, qft))
    yield Check("kaleidoscope", "Gram matrix = I", float(gram), 1e-9)
    yield Check("kaleidoscope", "QFT route = direct route", float(np.abs(direct.matrix() - qft.matrix()).max()), 1e-10)
    support = max(kal.off_lattice_amplitude(b.states[s], n, s) for b in (direct, qft) for s in range(n))
    yield Check("kaleidoscope", "support on levels = s (mod n)", support, 1e-12)
    rou = modexp.RootOfUnity(n)
    parity = max(
        np.abs(kal.apply_parity(n, direct.states[s]).amp - rou.q_power(2 * s) * direct.states[s].amp).max()
        for s in range(n)
    )
    yield Check("kaleidoscope", "q^2N |s> = q^2s |s>", float(parity), 1e-10)
    flip = max(kal.check_flip(b, s) for b in (direct, qft) for s in range(n))
    yield Check("kaleidoscope", "a|s> = alpha N_s/N_(s-1) |s-1>", flip, 1e-8)
    power = max(kal.check_power_eigenstate(b, s) for b in (direct, qft) for s in range(n))
    yield Check("kaleidoscope", "a^n |s> = alpha^n |s>", power, 1e-7)

    rng = np.random.default_rng(12345)
    c = rng.normal(size=n) + 1j * rng.normal(size=n)
    c /= np.linalg.norm(c)
    psi = direct.superpose(c)
    yield Check("kaleidoscope", "qudit superposition unit norm", abs(psi.norm() - 1), 1e-9)
    qres = np.linalg.norm(kal.apply_annihilation_power(psi, n).amp - alpha**n * psi.amp)
    yield Check("kaleidoscope", "qudit a^n eigenvalue", float(qres), 1e-7)
    q = kal.qft_matrix(n)
    yield Check("kaleidoscope", "QFT unitary", float(np.abs(q @ q.conj().T - np.eye(n)).max()), 1e-13)


def photon_checks(n: int, alpha: complex, tol: float) -> Iterator[Check]:
    xs = np.linspace(0, 6, 25)
    brute = max(abs(photon.photon_expectation(n, s, x) - photon.photon_fock(n, s, x, tol)) for s in range(n) for x in xs)
    yield Check("photon", "x f_(s-1)/f_s = Fock <N>", brute, 1e-8)
    if n <= 4:
        closed = max(abs(photon.photon_closed(n, s, x) - photon.photon_fock(n, s, x, tol)) for s in range(n) for x in xs)
        yield Check("photon", "closed forms = Fock <N>", closed, 1e-8)
        large = max(abs(photon.photon_expectation(n, s, 50.0) / 50.0 - 1) for s in range(n))
        yield Check("photon", "<N>/|alpha|^2 -> 1 at 50", large, 0.02)
    small = max(abs(photon.photon_expectation(n, s, 1e-6) - s) for s in range(n))
    yield Check("photon", "<N> -> s as |alpha| -> 0", small, 1e-5)
    x = abs(alpha) ** 2
    basis = kal.build_basis(n, alpha, tol=tol)
    coh = fock.coherent_state(alpha, basis.dim)
    mean = sum(
        abs(fock.inner_product(basis.states[s], coh)) ** 2 * photon.photon_expectation(n, s, x) for s in range(n)
    )
    yield Check("photon", "sum_s |<s|alpha>|^2 <s|N|s> = |alpha|^2", abs(mean - x), 1e-8)


def qalgebra_checks(n: int) -> Iterator[Check]:
    pair = qalgebra.sylvester_pair(n)
    clock, shift = pair.clock, pair.shift
    q2 = modexp.RootOfUnity(n).q2
    eye = np.eye(n)
    yield Check("qalgebra", "clock shift = q^2 shift clock", float(np.abs(clock @ shift - q2 * shift @ clock).max()), 1e-12)
    order = max(np.abs(np.linalg.matrix_power(m, n) - eye).max() for m in (clock, shift))
    yield Check("qalgebra", "clock^n = shift^n = I", float(order), 1e-11)
    yield Check("qalgebra", "shift = Q clock Q^dagger", qalgebra.conjugation_residual(n), 1e-12)
    worst_bb, worst_pow = 0.0, 0.0
    for kind in QNumberKind:
        b, bd = qalgebra.b_operators(n, kind)
        worst_bb = max(worst_bb, np.abs(bd @ b - qalgebra.q_number_matrix(n, kind)).max())
        worst_pow = max(worst_pow, np.abs(np.linalg.matrix_power(b, n)).max(), np.abs(np.linalg.matrix_power(bd, n)).max())
    yield Check("qalgebra", "B^+ B = diag([k])", float(worst_bb), 1e-13)
    yield Check("qalgebra", "B^n = (B^+)^n = 0", float(worst_pow), 1e-13)
    res = qalgebra.algebra_residuals(n)
    yield Check("qalgebra", "symmetric algebra (interior)", max(res.symmetric_q2, res.symmetric_qm2), 1e-12)
    yield Check("qalgebra", "nonsymmetric algebra (interior)", max(res.nonsymmetric_q2, res.nonsymmetric_commutator), 1e-12)
    top = abs(res.top_symmetric - abs(qalgebra.q_number(n, n, QNumberKind.SYMMETRIC)))
    yield Check("qalgebra", "top-level defect = |[n]|", top, 1e-12)
    h_eig = np.linalg.eigvalsh(qalgebra.hamiltonian_matrix(n))
    closed = np.sort(qalgebra.spectrum_closed(n))
    yield Check("qalgebra", "spectrum E_k", float(np.abs(h_eig - closed).max() / np.abs(closed).max()), 1e-12)
    sym_imag = max(abs(qalgebra.q_number(k, n, QNumberKind.SYMMETRIC).imag) for k in range(2 * n))
    yield Check("qalgebra", "symmetric q-numbers real", sym_imag, 1e-14)
    polar = max(abs(qalgebra.q_number(k, n) - qalgebra.q_number_polar(k, n)) for k in range(2 * n + 1))
    yield Check("qalgebra", "nonsymmetric polar form", polar, 1e-13)
    period = max(abs(qalgebra.q_number(k + n, n) - qalgebra.q_number(k, n)) for k in range(2 * n + 1))
    yield Check("qalgebra", "[k+n] = [k]", period, 1e-13)


def run_suite(n: int, alpha: complex, tol: float = fock.DEFAULT_TOL, dim: int | None = None) -> list[Check]:
    """Every invariant check for one ``(n, alpha)``."""
    groups: list[Callable[[], Iterator[Check]]] = [
        lambda: modexp_checks(n),
        lambda: fock_checks(alpha, n, tol, dim),
        lambda: kaleidoscope_checks(n, alpha, tol, dim),
        lambda: photon_checks(n, alpha, tol),
        lambda: qalgebra_checks(n),
    ]
    return [c for g in groups for c in g()]
