"""Command-line harness: construction, evaluation, and verification suites.

Subcommands
-----------
verify     run named check suites, print a JSON report, exit 0 iff all pass
rmatrix    print R-matrix entries and residuals of its defining checks
partition  evaluate one lattice partition function in both modes
minor      apply a quantum minor to a standard basis vector
gtbasis    build a Gelfand-Tsetlin vector and report its eigenvalue checks
weightfn   evaluate weight functions / the change-of-basis matrix

All randomness is driven by --seed; identical configuration and seed give
an identical report up to the timing fields.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from .basis import PartitionI, TensorVector, all_words, word_to_index
from .errors import (DegenerateParametersError, DomainError,
                     EnumerationLimitError)
from .gt import (apply_operator, build_xi_minor, build_xi_prime,
                 build_xi_tilde, eigenvalue_a, normalization_n,
                 xtilde_diagonal)
from .minors import a_operator, apply_minor
from .rmatrix import DynExponents, check_dybe, check_unitarity, rbar_matrix
from .sampling import default_lambda, sample_w
from .special import EllipticParams
from .suites import SUITES, Check
from .tensor import get_lattice
from .weights import TriangularVars, change_of_basis, w_tilde

SUITE_NAMES = ("special", "rmatrix", "minors", "gtbasis", "weightfn", "gl2")


@dataclass
class RunConfig:
    N: int = 2
    n: int = 3
    q: float = 0.3
    p: float = 0.1
    lam: tuple = None  # None -> branch-safe defaults for N colors
    w: tuple = None    # None -> sampled
    seed: int = 0
    tol: float = 1e-9
    truncation: int = 0  # 0 -> auto
    suites: tuple = ("all",)
    l_values: tuple = (1, 2, 3)  # rank-2 module orders for the gl2 suite

    def __post_init__(self):
        if self.N > 4 or self.n > 6:
            raise DomainError("desk-scale guard: need N <= 4 and n <= 6")
        if self.lam is not None:
            self.lam = tuple(float(x) for x in self.lam)
        if self.w is not None:
            self.w = tuple(float(x) for x in self.w)
        names = []
        for s in self.suites:
            names.extend(SUITE_NAMES if s == "all" else (s,))
        for s in names:
            if s not in SUITE_NAMES:
                raise DomainError(f"unknown suite {s!r}")
        self.suites = tuple(dict.fromkeys(names))

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        d = dict(d)
        for key in ("lam", "w", "suites", "l_values"):
            if d.get(key) is not None:
                d[key] = tuple(d[key])
        return cls(**d)


def make_params(cfg: RunConfig) -> EllipticParams:
    return EllipticParams(q=cfg.q, p=cfg.p, truncation_order=cfg.truncation,
                          tol=min(1e-11, cfg.tol))


def resolve_parameters(cfg: RunConfig, params: EllipticParams, rng):
    """(lam, w) for the configuration, resampling degenerate draws."""
    lam = cfg.lam if cfg.lam is not None else default_lambda(cfg.N)
    if cfg.w is not None:
        return tuple(lam), tuple(cfg.w)
    for _ in range(10):
        try:
            w = sample_w(rng, cfg.n, abs(cfg.q), abs(cfg.p))
            return tuple(lam), w
        except DegenerateParametersError:
            continue
    raise DegenerateParametersError("could not sample generic parameters")


def run_suite(cfg: RunConfig) -> dict:
    """Execute the configured suites and assemble the report."""
    params = make_params(cfg)
    rng = np.random.default_rng(cfg.seed)
    checks: list[Check] = []
    t0 = time.perf_counter()
    for name in cfg.suites:
        kwargs = {}
        if name in ("minors", "gtbasis", "weightfn", "gl2"):
            kwargs["tol"] = cfg.tol
        if name == "gl2":
            kwargs["l_values"] = cfg.l_values
        for chk in SUITES[name](params, rng, **kwargs):
            chk.name = f"{name}.{chk.name}"
            checks.append(chk)
    total = time.perf_counter() - t0
    return {
        "config": cfg.to_dict(),
        "checks": [asdict(c) for c in checks],
        "summary": {
            "total": len(checks),
            "passed": sum(c.passed for c in checks),
            "failed": sum(not c.passed for c in checks),
            "seconds": total,
        },
    }


def _json_default(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")


def emit_report(report: dict) -> str:
    """Deterministic JSON rendering of a report."""
    return json.dumps(report, indent=2, default=_json_default)


# -- subcommand implementations ----------------------------------------------


def _cmd_verify(args) -> int:
    tol = float(os.environ.get("ELLGT_TOL", args.tol))
    cfg = RunConfig(N=args.N, n=args.n, q=args.q, p=args.p,
                    lam=args.lam, w=args.w, seed=args.seed, tol=tol,
                    truncation=args.truncation,
                    suites=tuple(args.suite),
                    l_values=tuple(args.l))
    report = run_suite(cfg)
    print(emit_report(report))
    return 0 if report["summary"]["failed"] == 0 else 1


def _cmd_rmatrix(args) -> int:
    params = EllipticParams(q=args.q, p=args.p)
    rng = np.random.default_rng(args.seed)
    lam = tuple(args.lam) if args.lam else default_lambda(args.N)
    dyn = DynExponents(lam)
    R = rbar_matrix(args.z, dyn, params, args.N)
    zs = sample_w(rng, 3, abs(args.q), abs(args.p))
    out = {
        "N": args.N, "z": args.z, "lam": lam,
        "entries": R.entries,
        "checks": {
            "dybe_residual": check_dybe(zs[0], zs[1], zs[2], dyn, params,
                                        args.N),
            "unitarity_residual": check_unitarity(args.z, dyn, params, args.N),
        },
    }
    print(emit_report(out))
    return 0


def _parse_word(s: str) -> tuple:
    return tuple(int(ch) for ch in s)


def _cmd_partition(args) -> int:
    params = EllipticParams(q=args.q, p=args.p)
    rng = np.random.default_rng(args.seed)
    lam = tuple(args.lam) if args.lam else default_lambda(args.N)
    dyn = DynExponents(lam)
    alpha, beta = _parse_word(args.alpha), _parse_word(args.beta)
    n = len(alpha)
    w = tuple(args.w) if args.w else sample_w(rng, n, abs(args.q), abs(args.p))
    K = tuple(int(x) for x in args.K.split(","))
    L = tuple(int(x) for x in args.L.split(","))
    zs = tuple(float(x) for x in args.zs.split(","))
    lat = get_lattice(dyn, w, params)
    seq = lat.partition_z(K, L, zs, alpha, beta, dyn.shift, mode="sequential")
    out = {"K": K, "L": L, "zs": zs, "alpha": alpha, "beta": beta, "w": w,
           "sequential": seq}
    if args.mode in ("enumerate", "both"):
        try:
            enum = lat.partition_z(K, L, zs, alpha, beta, dyn.shift,
                                   mode="enumerate")
            out["enumerate"] = enum
            out["mode_agreement"] = abs(seq - enum) / max(abs(seq), abs(enum),
                                                          1e-30)
        except EnumerationLimitError:
            # beyond the state cap only the sequential mode runs
            out["enumerate"] = None
    print(emit_report(out))
    return 0


def _cmd_minor(args) -> int:
    params = EllipticParams(q=args.q, p=args.p)
    rng = np.random.default_rng(args.seed)
    lam = tuple(args.lam) if args.lam else default_lambda(args.N)
    dyn = DynExponents(lam)
    mu = _parse_word(args.state)
    w = tuple(args.w) if args.w else sample_w(rng, len(mu), abs(args.q),
                                              abs(args.p))
    rows = tuple(int(x) for x in args.rows.split(","))
    cols = tuple(int(x) for x in args.cols.split(","))
    vec = TensorVector.basis(mu, args.N)
    res = apply_minor(rows, cols, args.z, vec, dyn, w, params)
    out = {"rows": rows, "cols": cols, "z": args.z, "state": mu, "w": w,
           "coefficients": {
               "".join(map(str, nu)): res.coeffs[word_to_index(nu, args.N)]
               for nu in all_words(args.N, len(mu))
               if abs(res.coeffs[word_to_index(nu, args.N)]) > 1e-14}}
    print(emit_report(out))
    return 0


def _cmd_gtbasis(args) -> int:
    params = EllipticParams(q=args.q, p=args.p)
    rng = np.random.default_rng(args.seed)
    mu = _parse_word(args.I)
    N = args.N or max(mu)
    I = PartitionI.from_word(mu, N)
    lam = tuple(args.lam) if args.lam else default_lambda(N)
    dyn = DynExponents(lam)
    w = tuple(args.w) if args.w else sample_w(rng, I.n, abs(args.q),
                                              abs(args.p))
    builders = {"tilde": build_xi_tilde, "minor": build_xi_minor,
                "prime": build_xi_prime}
    build = builders[args.variant]
    vec = build(I, dyn, w, params)
    z = 0.77
    eig_checks = {}
    for l in range(1, N + 1):
        got = apply_operator(a_operator(l, z, N, params),
                             lambda d, I=I: build(I, d, w, params),
                             dyn, w, params)
        ev = eigenvalue_a(l, z, I, w, params)
        eig_checks[f"A_{l}"] = float(
            np.linalg.norm(got.coeffs - ev * vec.coeffs)
            / max(np.linalg.norm(got.coeffs), 1e-30))
    out = {
        "I": mu, "variant": args.variant, "w": w, "lam": lam,
        "coefficients": {
            "".join(map(str, nu)): vec.coeffs[word_to_index(nu, N)]
            for nu in all_words(N, I.n)
            if abs(vec.coeffs[word_to_index(nu, N)]) > 1e-14},
        "eigenvalue_residuals": eig_checks,
        "normalization_n": normalization_n(I, w, params),
        "xtilde_diagonal": xtilde_diagonal(I, w, params),
    }
    print(emit_report(out))
    return 0


def _cmd_weightfn(args) -> int:
    params = EllipticParams(q=args.q, p=args.p)
    rng = np.random.default_rng(args.seed)
    mu = _parse_word(args.I)
    N = args.N or max(mu)
    I = PartitionI.from_word(mu, N)
    lam = tuple(args.lam) if args.lam else default_lambda(N)
    dyn = DynExponents(lam)
    w = tuple(args.w) if args.w else sample_w(rng, I.n, abs(args.q),
                                              abs(args.p))
    vars_ = TriangularVars.specialize(I, w)
    out = {"I": mu, "w": w, "lam": lam}
    if args.J:
        J = PartitionI.from_word(_parse_word(args.J), N)
        out["wtilde"] = w_tilde(J, vars_, dyn, params)
    else:
        mat, parts = change_of_basis(I.content(), dyn, w, params)
        out["order"] = ["".join(map(str, P.to_word())) for P in parts]
        out["matrix"] = mat
    print(emit_report(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ellgt",
        description="elliptic R-matrix / Gelfand-Tsetlin verification toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, n_default=3):
        sp.add_argument("--N", type=int, default=2)
        sp.add_argument("--n", type=int, default=n_default)
        sp.add_argument("--q", type=float, default=0.3)
        sp.add_argument("--p", type=float, default=0.1)
        sp.add_argument("--lam", type=float, nargs="*", default=None)
        sp.add_argument("--w", type=float, nargs="*", default=None)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", action="append", default=None,
                    help="suite name or 'all' (repeatable)")
    sp.add_argument("--tol", type=float, default=1e-9,
                    help="residual tolerance (env ELLGT_TOL overrides)")
    sp.add_argument("--truncation", type=int, default=0)
    sp.add_argument("--l", type=int, nargs="*", default=[1, 2, 3],
                    help="rank-2 module orders for the gl2 suite")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("rmatrix", help="R-matrix entries and checks")
    common(sp)
    sp.add_argument("--z", type=float, default=0.77)
    sp.set_defaults(fn=_cmd_rmatrix)

    sp = sub.add_parser("partition", help="lattice partition function")
    common(sp)
    sp.add_argument("--K", required=True, help="rows, comma separated")
    sp.add_argument("--L", required=True, help="columns, comma separated")
    sp.add_argument("--zs", required=True, help="spectral points")
    sp.add_argument("--alpha", required=True, help="input word, e.g. 111")
    sp.add_argument("--beta", required=True, help="output word")
    sp.add_argument("--mode", choices=("sequential", "both", "enumerate"),
                    default="both")
    sp.set_defaults(fn=_cmd_partition)

    sp = sub.add_parser("minor", help="apply a quantum minor")
    common(sp)
    sp.add_argument("--rows", required=True)
    sp.add_argument("--cols", required=True)
    sp.add_argument("--z", type=float, default=0.77)
    sp.add_argument("--state", required=True, help="basis word, e.g. 112")
    sp.set_defaults(fn=_cmd_minor)

    sp = sub.add_parser("gtbasis", help="build a Gelfand-Tsetlin vector")
    common(sp)
    sp.add_argument("--I", required=True, help="partition as index word")
    sp.add_argument("--variant", choices=("tilde", "minor", "prime"),
                    default="tilde")
    sp.set_defaults(fn=_cmd_gtbasis)

    sp = sub.add_parser("weightfn", help="weight functions / basis matrix")
    common(sp)
    sp.add_argument("--I", required=True, help="specialization partition word")
    sp.add_argument("--J", default=None, help="label partition word")
    sp.set_defaults(fn=_cmd_weightfn)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "verify" and args.suite is None:
        args.suite = ["all"]
    try:
        return args.fn(args)
    except (DomainError, DegenerateParametersError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
