"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Output is a pure function of the flags, so reruns are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io as hio
from . import reference
from .frames import FiducialError, bargmann, build_frame, validate_fiducial
from .group import (ClosureError, derived_series, dihedral_group, hw_group, hwp_group,
                    lower_central_series, semidirect_checks)
from .noise import NOISE_KINDS, NoiseConfig, run_experiment, summary
from .operators import (displaced_parity, dp_operator, fourier, is_hermitian, is_unitary, parity,
                        principal_log_hamiltonian, clock_z, shift_x)
from .dihedral import DihedralRep
from .ring import DimensionError, check_dim
from .verify import FAULTABLE, SUITES, run_suite
from .wigner import unified_ww

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _dim(text: str) -> int:
    try:
        return check_dim(int(text))
    except (ValueError, DimensionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ket(text: str) -> np.ndarray:
    """Comma-separated complex entries, e.g. ``0.5,0.4j,0.77``."""
    try:
        return np.array([complex(x.strip().replace(" ", "")) for x in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse ket {text!r}") from None


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit_operator(M, args) -> int:
    if args.format != "json":
        raise UsageError("operators are written as JSON only")
    if args.round is not None:
        M = np.round(M.real, args.round) + 1j * np.round(M.imag, args.round)
    _emit(json.dumps(hio.operator_to_dict(M)) + "\n", args.out)
    return 0


_OPS = ("Z", "X", "F", "P", "D", "DP")


def _operator(args) -> np.ndarray:
    d = args.d
    name = args.name
    if name == "Z":
        M = clock_z(d, args.alpha if args.alpha is not None else 1)
    elif name == "X":
        M = shift_x(d, args.beta if args.beta is not None else 1)
    elif name == "F":
        M = fourier(d)
    elif name == "P":
        M = parity(d)
    elif name == "D":
        M = dp_operator(d, args.alpha or 0, args.beta or 0, args.gamma, args.nu)
    else:
        M = displaced_parity(d, args.alpha or 0, args.beta or 0)
    if args.hamiltonian:
        M = principal_log_hamiltonian(M)
    return M


def cmd_ops(args) -> int:
    return _emit_operator(_operator(args), args)


def cmd_load(args) -> int:
    try:
        M = hio.load_operator(args.file)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except hio.FormatError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    _emit(_json({"d": M.shape[0], "unitary": is_unitary(M), "hermitian": is_hermitian(M),
                 "trace": [float(np.trace(M).real), float(np.trace(M).imag)]}), args.out)
    return 0


_GROUPS = {"HWP": hwp_group, "HW": hw_group,
           "DZ": lambda d: dihedral_group(d, "Z"), "DX": lambda d: dihedral_group(d, "X")}


def cmd_group(args) -> int:
    G = _GROUPS[args.name](args.d)
    lcs, nilpotent = lower_central_series(G)
    checks = semidirect_checks(args.d)
    _emit(_json({"group": args.name, "d": args.d, "order": G.order,
                 "derived_series_sizes": [g.order for g in derived_series(G)],
                 "lower_central_series_sizes": [g.order for g in lcs],
                 "nilpotent": nilpotent, "checks": checks}), args.out)
    return 0 if checks["passed"] else 1


def cmd_dihedral(args) -> int:
    M = DihedralRep(args.axis, args.d)(args.a, args.nu)
    if args.hamiltonian:
        M = principal_log_hamiltonian(M)
    return _emit_operator(M, args)


def _vectors(args):
    if args.ket is not None and args.fiducial is not None:
        return args.ket, args.fiducial
    if args.ket is not None or args.fiducial is not None:
        raise UsageError("give both --ket and --fiducial, or neither")
    try:
        return reference.vectors(args.d)
    except ValueError:
        raise UsageError(f"no reference vectors for d={args.d}; pass --ket and --fiducial") from None


def _table_text(rows, args) -> str:
    if args.format not in ("csv", "json"):
        raise UsageError(f"unknown format {args.format!r}")
    return hio.format_table(rows, args.format)


def _frame_rows(f, s, kind: str, with_ww: bool, decimals):
    if len(f) != len(s):
        raise UsageError("ket and fiducial lengths differ")
    try:
        fid = validate_fiducial(s, normalize=True)
    except FiducialError as exc:
        raise UsageError(f"invalid fiducial ({exc.reason}): {exc}") from None
    table = bargmann(build_frame(kind, fid), f)
    W = unified_ww(np.outer(f, np.conj(f))) if with_ww else None
    return hio.table_rows(table, W, decimals)


def cmd_frame(args) -> int:
    f, s = _vectors(args)
    if args.normalize_ket:
        f = f / np.linalg.norm(f)
    rows = _frame_rows(f, s, args.kind, args.ww and args.kind == "HWP", args.round)
    _emit(_table_text(rows, args), args.out)
    return 0


def cmd_table1(args) -> int:
    # the reference ket is used unnormalised; the fiducial is normalised
    rows = _frame_rows(reference.KET_3, reference.FIDUCIAL_3, "HWP", True, args.round)
    _emit(_table_text(rows, args), args.out)
    return 0


def cmd_ww(args) -> int:
    if args.operator is not None:
        try:
            theta = hio.load_operator(args.operator)
        except OSError as exc:
            raise UsageError(str(exc)) from None
        except hio.FormatError as exc:
            raise UsageError(f"{args.operator}: {exc}") from None
    else:
        f, _ = _vectors(args)
        theta = np.outer(f, np.conj(f))
    _emit(_table_text(hio.ww_rows(unified_ww(theta), args.round), args), args.out)
    return 0


def cmd_noise(args) -> int:
    f, s = _vectors(args)
    try:
        cfg = NoiseConfig(args.amplitude, args.trials, args.seed, args.kind)
        hw, hwp = run_experiment(f, s, cfg)
    except FiducialError as exc:
        raise UsageError(f"invalid fiducial ({exc.reason}): {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = summary(hw, hwp)
    if args.round is not None:
        out = {k: (round(v, args.round) if isinstance(v, float) else v) for k, v in out.items()}
    out = {"d": len(f), "amplitude": cfg.amplitude, "trials": cfg.trials, "seed": cfg.seed,
           "kind": cfg.kind, **out}
    _emit(_json(out), args.out)
    return 0


def cmd_verify(args) -> int:
    dims = tuple(args.dims) if args.dims else None
    report = run_suite(args.suite, dims=dims, seed=args.seed, faults=tuple(args.inject_fault))
    _emit(_json(report), args.out)
    if not report["passed"]:
        print("FAILED: " + ", ".join(report["failures"]), file=sys.stderr)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=_dim, default=3, help="odd dimension >= 3 (default 3)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--round", type=int, default=None, metavar="N",
                        help="round values to N decimals (presentation only)")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")

    vectors = argparse.ArgumentParser(add_help=False)
    vectors.add_argument("--ket", type=_ket, default=None, help="comma-separated complex entries")
    vectors.add_argument("--fiducial", type=_ket, default=None)
    vectors.add_argument("--reference-vectors", "--paper-vectors", action="store_true",
                         help="use the built-in reference kets (the default when none are given)")

    p = argparse.ArgumentParser(prog="hwpkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def operator_flags(sp):
        sp.add_argument("--hamiltonian", action="store_true",
                        help="emit h = (d/2 pi i) log U (principal branch) instead")

    sp = sub.add_parser("ops", parents=[common], help="emit an operator matrix as JSON")
    sp.add_argument("--name", choices=_OPS, default="D")
    sp.add_argument("--alpha", type=int, default=None)
    sp.add_argument("--beta", type=int, default=None)
    sp.add_argument("--gamma", type=int, default=0)
    sp.add_argument("--nu", type=int, default=0, choices=(0, 1))
    operator_flags(sp)
    sp.set_defaults(func=cmd_ops, fmt="json")

    sp = sub.add_parser("dump", parents=[common], help="alias of ops")
    sp.add_argument("--name", choices=_OPS, default="D")
    sp.add_argument("--alpha", type=int, default=None)
    sp.add_argument("--beta", type=int, default=None)
    sp.add_argument("--gamma", type=int, default=0)
    sp.add_argument("--nu", type=int, default=0, choices=(0, 1))
    operator_flags(sp)
    sp.set_defaults(func=cmd_ops, fmt="json")

    sp = sub.add_parser("load", parents=[common], help="validate an operator JSON file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_load, fmt="json")

    sp = sub.add_parser("group", parents=[common], help="group-structure report")
    sp.add_argument("--name", choices=tuple(_GROUPS), default="HWP")
    sp.set_defaults(func=cmd_group, fmt="json")

    sp = sub.add_parser("dihedral", parents=[common], help="dihedral representation element")
    sp.add_argument("--axis", choices=("Z", "X"), default="Z")
    sp.add_argument("--a", type=int, default=1)
    sp.add_argument("--nu", type=int, default=0, choices=(0, 1))
    operator_flags(sp)
    sp.set_defaults(func=cmd_dihedral, fmt="json")

    sp = sub.add_parser("frame", parents=[common, vectors], help="Bargmann coefficient table")
    sp.add_argument("--kind", choices=("HW", "HWP"), default="HWP")
    sp.add_argument("--ww", action="store_true", help="join the Wigner-Weyl columns of |f><f|")
    sp.add_argument("--normalize-ket", action="store_true")
    sp.set_defaults(func=cmd_frame, fmt="csv")

    sp = sub.add_parser("ww", parents=[common, vectors], help="unified Wigner-Weyl table")
    sp.add_argument("--operator", default=None, help="operator JSON file (default |f><f|)")
    sp.set_defaults(func=cmd_ww, fmt="csv")

    sp = sub.add_parser("noise", parents=[common, vectors], help="noisy-reconstruction experiment")
    sp.add_argument("--amplitude", type=float, default=0.1)
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--kind", choices=NOISE_KINDS, default="real-uniform")
    sp.set_defaults(func=cmd_noise, fmt="json")

    sp = sub.add_parser("verify", parents=[common], help="run identity suites")
    sp.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)
    sp.add_argument("--dims", type=_dim, nargs="+", default=None,
                    help="restrict to these dimensions (default: each check's own set)")
    sp.add_argument("--inject-fault", action="append", default=[], choices=FAULTABLE,
                    help="sabotage a named check (harness self-test)")
    sp.set_defaults(func=cmd_verify, fmt="json")

    sp = sub.add_parser("table1", parents=[common], help="d = 3 reference coefficient table")
    sp.set_defaults(func=cmd_table1, fmt="csv")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.fmt
    if args.command == "table1" and args.d != 3:
        parser.error("table1 is defined for d = 3 only")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hwpkit: error: {exc}", file=sys.stderr)
        return 2
    except ClosureError as exc:
        print(f"hwpkit: error: {exc}", file=sys.stderr)
        return 2
