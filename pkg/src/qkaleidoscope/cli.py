"""Command-line front end: ``verify``, ``curve`` and ``matrix``.

Exit codes: 0 success, 1 failed invariant, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import checks, kaleidoscope, photon, qalgebra
from .errors import KaleidoscopeError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MIN_N, MAX_N = 2, 12
MATRICES = ("qft", "clock", "shift", "b", "bdag", "hamiltonian")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` with either part optional; ``j`` is accepted for ``i``.

    >>> parse_complex("1+0.5i")
    (1+0.5j)
    >>> parse_complex("-i")
    -1j
    """
    s = text.strip().replace(" ", "").replace("i", "j")
    # complex() needs an explicit coefficient on a bare j
    s = re.sub(r"(^|[+-])j", r"\g<1>1j", s)
    try:
        value = complex(s)
    except ValueError:
        raise ValueError(f"--alpha: cannot parse {text!r}; expected a+bi") from None
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ValueError(f"--alpha: must be finite, got {text!r}")
    return value


@dataclass(frozen=True)
class RunConfig:
    n: int
    alpha: complex
    tol: float = 1e-12
    dim_override: int | None = None
    output_path: Path | None = None
    format: str = "csv"

    def validate(self) -> None:
        if not MIN_N <= self.n <= MAX_N:
            raise ValueError(f"--n: must lie in [{MIN_N}, {MAX_N}], got {self.n}")
        if not 0 < self.tol < 1e-3:
            raise ValueError(f"--tol: must lie in (0, 1e-3), got {self.tol}")
        if self.dim_override is not None and self.dim_override < 4 * self.n:
            raise ValueError(f"--dim: must be at least 4n = {4 * self.n}, got {self.dim_override}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"--format: must be csv or json, got {self.format!r}")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def curve_csv(curve: photon.PhotonCurve) -> str:
    lines = [f"alpha_sq,expectation_s{curve.s}"]
    lines += [f"{_fmt(x)},{_fmt(y)}" for x, y in curve.points]
    return "\n".join(lines) + "\n"


def curve_json(curve: photon.PhotonCurve) -> str:
    return json.dumps(
        {"n": curve.n, "s": curve.s, "alpha_sq": curve.alpha_sq.tolist(), "expectation": curve.expectation.tolist()}
    ) + "\n"


def build_matrix(n: int, which: str, kind: str = "symmetric") -> np.ndarray:
    if which == "qft":
        return kaleidoscope.qft_matrix(n)
    if which == "clock":
        return qalgebra.clock_matrix(n)
    if which == "shift":
        return qalgebra.shift_matrix(n)
    if which in ("b", "bdag"):
        b, bd = qalgebra.b_operators(n, kind)
        return b if which == "b" else bd
    if which == "hamiltonian":
        return qalgebra.hamiltonian_matrix(n)
    raise ValueError(f"--which: unknown matrix {which!r}; choose from {', '.join(MATRICES)}")


def matrix_json(n: int, which: str, m: np.ndarray) -> str:
    m = np.asarray(m, dtype=complex)
    payload = {"n": n, "which": which, "re": m.real.tolist(), "im": m.imag.tolist()}
    return json.dumps(payload) + "\n"


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_verify(config: RunConfig) -> int:
    results = checks.run_suite(config.n, config.alpha, config.tol, config.dim_override)
    failed = sum(not c.passed for c in results)
    if config.format == "json":
        text = json.dumps(
            {
                "n": config.n,
                "alpha": [config.alpha.real, config.alpha.imag],
                "passed": failed == 0,
                "checks": [
                    {"module": c.module, "name": c.name, "residual": c.residual, "threshold": c.threshold, "passed": c.passed}
                    for c in results
                ],
            },
            indent=1,
        ) + "\n"
    else:
        lines = [c.line() for c in results]
        lines.append(f"{len(results) - failed}/{len(results)} checks passed (n={config.n}, alpha={config.alpha})")
        text = "\n".join(lines) + "\n"
    _emit(text, config.output_path)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_curve(config: RunConfig, s: int, x_max: float, steps: int) -> int:
    curve = photon.photon_curve(config.n, s, x_max, steps)
    _emit(curve_csv(curve) if config.format == "csv" else curve_json(curve), config.output_path)
    return EXIT_OK


def cmd_matrix(config: RunConfig, which: str, kind: str = "symmetric") -> int:
    _emit(matrix_json(config.n, which, build_matrix(config.n, which, kind)), config.output_path)
    return EXIT_OK


def _common(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--n", type=int, required=True, help="polygon order, 2..12")
    p.add_argument("--alpha", default="1.0", help="coherent amplitude as a+bi (default 1.0)")
    p.add_argument("--tol", type=float, default=1e-12, help="truncation tolerance (default 1e-12)")
    p.add_argument("--dim", type=int, default=None, help="override the Fock truncation")
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=default_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qkaleido", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the invariant suite for one (n, alpha)")
    _common(p, "csv")

    p = sub.add_parser("curve", help="photon-number curve <s|N|s> against |alpha|^2")
    _common(p, "csv")
    p.add_argument("--s", type=int, required=True, help="state index 0..n-1")
    p.add_argument("--xmax", type=float, default=6.0)
    p.add_argument("--steps", type=int, default=120)

    p = sub.add_parser("matrix", help="export an n x n matrix as JSON")
    _common(p, "json")
    p.add_argument("--which", required=True, choices=MATRICES)
    p.add_argument("--kind", choices=("symmetric", "nonsymmetric"), default="symmetric", help="q-number convention for b/bdag")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            n=args.n,
            alpha=parse_complex(args.alpha),
            tol=args.tol,
            dim_override=args.dim,
            output_path=args.out,
            format=args.format,
        )
        config.validate()
        if args.command == "curve":
            if not 0 <= args.s < config.n:
                raise ValueError(f"--s: must lie in [0, {config.n - 1}], got {args.s}")
            if args.steps < 2:
                raise ValueError(f"--steps: must be >= 2, got {args.steps}")
            if args.xmax <= 0:
                raise ValueError(f"--xmax: must be positive, got {args.xmax}")
        if args.command == "matrix" and config.format != "json":
            raise ValueError("--format: matrix export is JSON only")
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"qkaleido {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "verify":
            return cmd_verify(config)
        if args.command == "curve":
            return cmd_curve(config, args.s, args.xmax, args.steps)
        return cmd_matrix(config, args.which, args.kind)
    except OSError as exc:
        print(f"qkaleido {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except KaleidoscopeError as exc:
        print(f"qkaleido {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
