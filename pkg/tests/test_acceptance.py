"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run ``python3 tests/test_acceptance.py`` for the PASS/FAIL table alone; under
pytest the same table is printed in the terminal summary.
"""

from __future__ import annotations

import io
import math
import sys
import time
from contextlib import redirect_stdout
from dataclasses import dataclass

import numpy as np
import pytest

from qkaleidoscope import checks, cli, kaleidoscope as kal, modexp, photon, qalgebra
from qkaleidoscope.qalgebra import QNumberKind

GRID_N = range(2, 9)
GRID_ALPHA = (0.5, 1.0, 2.0, 1 + 1j)
ALL_N = range(2, 13)


@dataclass
class Outcome:
    number: int
    title: str
    residual: float
    threshold: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.residual) and self.residual <= self.threshold)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{tag}  [{self.number:>2}] {self.title:<34} residual={self.residual:.3e} threshold={self.threshold:.0e}{extra}"


RESULTS: dict[int, Outcome] = {}


def _bases():
    for n in GRID_N:
        for a in GRID_ALPHA:
            yield n, a, kal.build_basis(n, a), kal.build_basis(n, a, route="qft")


def c1_orthonormality() -> Outcome:
    t0 = time.perf_counter()
    worst = 0.0
    for n in GRID_N:
        for a in GRID_ALPHA:
            worst = max(worst, np.abs(kal.gram_matrix(kal.build_basis(n, a)) - np.eye(n)).max())
    elapsed = time.perf_counter() - t0
    # the runtime budget is part of the criterion
    return Outcome(1, "orthonormality", worst if elapsed < 5 else math.inf, 1e-9, f"{elapsed:.2f}s")


def c2_routes() -> Outcome:
    worst = max(np.abs(d.matrix() - q.matrix()).max() for _, _, d, q in _bases())
    return Outcome(2, "QFT route = direct route", worst, 1e-10)


def c3_power_eigenstate() -> Outcome:
    worst = max(kal.check_power_eigenstate(d, s) for n, _, d, _ in _bases() for s in range(n))
    return Outcome(3, "a^n |s> = alpha^n |s>", worst, 1e-7)


def _closed_vs_fock(n: int) -> float:
    xs = np.linspace(0, 6, 61)
    return max(abs(photon.photon_closed(n, s, x) - photon.photon_fock(n, s, x)) for s in range(n) for x in xs)


def c4_cat_photons() -> Outcome:
    closed = _closed_vs_fock(2)
    tiny = 1e-9
    kittens = max(abs(photon.photon_expectation(2, 0, tiny)), abs(photon.photon_expectation(2, 1, tiny) - 1))
    large = max(abs(photon.photon_expectation(2, s, 50.0) / 50.0 - 1) for s in range(2))
    # each sub-check scaled to its own tolerance
    score = max(closed / 1e-8, kittens / 1e-8, large / 0.02) * 1e-8
    return Outcome(4, "cat photon numbers", score, 1e-8, f"closed={closed:.1e} kitten={kittens:.1e} large={large:.1e}")


def _curve_csv_error(n: int, s: int) -> float:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(["curve", "--n", str(n), "--s", str(s), "--xmax", "6", "--steps", "120"])
    if code != 0:
        return math.inf
    rows = [tuple(map(float, r.split(","))) for r in buf.getvalue().splitlines()[1:]]
    if len(rows) != 121:
        return math.inf
    return max(abs(y - photon.photon_closed(n, s, x)) for x, y in rows)


def c5_trinity_quartet() -> Outcome:
    closed = max(_closed_vs_fock(3), _closed_vs_fock(4))
    csv = max(_curve_csv_error(n, s) for n in (3, 4) for s in range(n))
    return Outcome(5, "trinity/quartet photon formulas", max(closed, csv), 1e-8, f"closed={closed:.1e} csv={csv:.1e}")


def c6_mod_exp() -> Outcome:
    routes = 0.0
    for n in ALL_N:
        for x in checks.route_grid(n):
            for s in range(n):
                ref = modexp.mod_exp_series(n, s, x)
                others = [modexp.mod_exp_superposition(n, s, x).real]
                if n <= 4:
                    others.append(modexp.mod_exp_closed(n, s, x))
                routes = max(routes, max(abs(o - ref) / ref for o in others))
    part = max(
        abs(sum(modexp.mod_exp_series(n, s, x) for s in range(n)) - math.exp(x)) / math.exp(x)
        for n in ALL_N
        for x in np.linspace(0, 30, 121)
    )
    cycling = max(modexp.ode_residual(n, s, x).cycling for n in ALL_N for s in range(n) for x in (0.0, 0.7, 3.0))
    fd = max(modexp.ode_residual(n, s, x).finite_difference for n in ALL_N for s in range(n) for x in (0.5, 1.0, 2.0))
    # cycling is exact by construction, so any nonzero value fails outright
    score = max(routes / 1e-10, part / 1e-12, fd / 1e-8) * 1e-10 if cycling == 0 else math.inf
    return Outcome(
        6, "mod-n exponential identities", score, 1e-10,
        f"routes={routes:.1e} partition={part:.1e} cycling={cycling:.0e} fd={fd:.1e}",
    )


def c7_lemma() -> Outcome:
    worst = max(
        abs(modexp.root_of_unity_sum(n, m) - (n if m % n == 0 else 0)) for n in range(1, 13) for m in range(3 * n)
    )
    return Outcome(7, "root-of-unity lemma", worst, 1e-12)


def c8_qft_unitary() -> Outcome:
    worst = 0.0
    for n in range(1, 13):
        q = kal.qft_matrix(n)
        worst = max(worst, np.abs(q @ q.conj().T - np.eye(n)).max(), np.abs(q.conj().T @ q - np.eye(n)).max())
    return Outcome(8, "QFT unitarity", worst, 1e-13)


def c9_sylvester() -> Outcome:
    commute = order = conj = 0.0
    for n in ALL_N:
        p = qalgebra.sylvester_pair(n)
        sigma1, sigma3 = p.shift, p.clock
        q2 = modexp.RootOfUnity(n).q2
        commute = max(commute, np.abs(sigma1 @ sigma3 - q2 * sigma3 @ sigma1).max())
        order = max(order, *(np.abs(np.linalg.matrix_power(m, n) - np.eye(n)).max() for m in (sigma1, sigma3)))
        conj = max(conj, qalgebra.conjugation_residual(n))
    return Outcome(
        9, "Sylvester algebra", max(commute, order, conj), 1e-11,
        f"s1 s3 = q^2 s3 s1: {commute:.1e}  order: {order:.1e}  conjugation: {conj:.1e}",
    )


def c10_quantum_algebra() -> Outcome:
    interior = factor = 0.0
    for n in ALL_N:
        interior = max(interior, *qalgebra.algebra_residuals(n)[:4])
        for kind in QNumberKind:
            b, bd = qalgebra.b_operators(n, kind)
            factor = max(
                factor,
                np.abs(bd @ b - qalgebra.q_number_matrix(n, kind)).max(),
                np.abs(np.linalg.matrix_power(b, n)).max(),
            )
    score = max(interior / 1e-12, factor / 1e-13) * 1e-12
    return Outcome(10, "quantum algebra relations", score, 1e-12, f"interior={interior:.1e} factor={factor:.1e}")


def c11_spectrum() -> Outcome:
    worst = 0.0
    for n in ALL_N:
        e = qalgebra.hamiltonian_spectrum(n)
        eig = np.linalg.eigvalsh(qalgebra.hamiltonian_matrix(n))
        worst = max(worst, np.abs(np.sort(e) - eig).max() / np.abs(e).max())
    values = max(
        np.abs(qalgebra.hamiltonian_spectrum(2) - [0.5, -0.5]).max(),
        np.abs(qalgebra.hamiltonian_spectrum(3) - [0.5, 0.0, -0.5]).max(),
    )
    return Outcome(11, "q-oscillator spectrum", max(worst, values), 1e-12, f"relative={worst:.1e} values={values:.1e}")


def c12_parity_flip() -> Outcome:
    parity = flip = 0.0
    for n, a, d, q in _bases():
        q2s = modexp.RootOfUnity(n)
        for s in range(n):
            v = d.states[s]
            parity = max(parity, np.abs(kal.apply_parity(n, v).amp - q2s.q_power(2 * s) * v.amp).max())
            flip = max(flip, kal.check_flip(d, s), kal.check_flip(q, s))
    score = max(parity / 1e-10, flip / 1e-8) * 1e-10
    return Outcome(12, "parity and flip structure", score, 1e-10, f"parity={parity:.1e} flip={flip:.1e}")


CRITERIA = [
    c1_orthonormality, c2_routes, c3_power_eigenstate, c4_cat_photons, c5_trinity_quartet, c6_mod_exp,
    c7_lemma, c8_qft_unitary, c9_sylvester, c10_quantum_algebra, c11_spectrum, c12_parity_flip,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    outcome = criterion()
    RESULTS[outcome.number] = outcome
    print(outcome.line())
    assert outcome.passed, outcome.line()


def main() -> int:
    outcomes = [c() for c in CRITERIA]
    for o in outcomes:
        print(o.line())
    failed = sum(not o.passed for o in outcomes)
    print(f"{len(outcomes) - failed}/{len(outcomes)} acceptance criteria passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
