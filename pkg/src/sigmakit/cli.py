"""Command-line front end.

Every subcommand prints exactly one JSON document to standard output and
exits with 0 on success, 1 on a domain error (bad arguments, malformed
input, precondition violations), or 2 on a numeric error (non-convergent
series, failed root searches).  Output is deterministic: identical
arguments and seed produce byte-identical documents.

Conventions: complex numbers are written "re,im" on the command line (a
bare "re" means re,0) and as two-element arrays [re, im] in JSON.  Every
document carries a "schema_version" field and echoes the effective
configuration.  The reported beta parameters are principal values,
determined only modulo 2*pi*i.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import TRIG_TOLERANCE, VALIDATION_TOLERANCE, classify
from .errors import DomainError, NumericError
from .identity import (
    OddFunctionHandle,
    duplication_report,
    extend_series,
    identity_report,
    psi,
)
from .invariants import pq_of_series
from .lattice import (
    J_TOLERANCE,
    invert_j,
    lattice_from_rho_tau,
    normalize_lattice,
    reduce_tau,
    sigma_eval,
)
from .modular import (
    TERM_CAP,
    dedekind_eta,
    j_invariant,
    theta1_eval,
    weierstrass_g,
)
from .series import TruncatedOddSeries

SCHEMA_VERSION = 1
DEFAULT_SEED = 1729

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_NUMERIC = 2


def parse_complex(text: str) -> complex:
    """Parse 're,im' (or bare 're') into a complex number."""
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise DomainError(f"cannot parse complex number from {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise DomainError(f"cannot parse complex number from {text!r}") from exc
    return complex(re, im)


def cpair(z: complex) -> list[float]:
    return [z.real, z.imag]


def load_series(path: str) -> TruncatedOddSeries:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read series file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON in {path}: {exc}") from exc
    return TruncatedOddSeries.from_json_dict(doc)


def emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _lattice_from_args(args) -> "Lattice":
    if args.omega1 is not None or args.omega2 is not None:
        if args.omega1 is None or args.omega2 is None:
            raise DomainError("--omega1 and --omega2 must be given together")
        return normalize_lattice(parse_complex(args.omega1), parse_complex(args.omega2))
    tau = parse_complex(args.tau) if args.tau else 1j
    rho = parse_complex(args.rho) if args.rho else 1.0 + 0.0j
    return lattice_from_rho_tau(rho, tau)


def _cmd_eval(args) -> dict:
    name = args.function
    cap = args.term_cap
    config = {"function": name, "term_cap": cap}
    if name == "theta1":
        if args.z is None or args.tau is None:
            raise DomainError("eval theta1 requires --z and --tau")
        z = parse_complex(args.z)
        tau = parse_complex(args.tau)
        value = theta1_eval(z, tau, term_cap=cap)
        config.update({"z": cpair(z), "tau": cpair(tau)})
    elif name in ("eta", "g2", "g3", "j"):
        if args.tau is None:
            raise DomainError(f"eval {name} requires --tau")
        tau = parse_complex(args.tau)
        config["tau"] = cpair(tau)
        if name == "eta":
            value = dedekind_eta(tau, term_cap=cap)
        elif name == "j":
            value = j_invariant(tau, term_cap=cap)
        else:
            g2, g3 = weierstrass_g(tau, term_cap=cap)
            value = g2 if name == "g2" else g3
    elif name == "sigma":
        if args.z is None:
            raise DomainError("eval sigma requires --z")
        z = parse_complex(args.z)
        lat = _lattice_from_args(args)
        value = sigma_eval(z, lat, term_cap=cap)
        config.update(
            {
                "z": cpair(z),
                "rho": cpair(lat.rho),
                "tau": cpair(lat.tau.value),
            }
        )
    else:
        raise DomainError(f"unknown function {name!r}")
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "eval",
        "config": config,
        "value": cpair(value),
    }


def _cmd_invariants(args) -> dict:
    s = load_series(args.series)
    inv = pq_of_series(s)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "invariants",
        "config": {"series": args.series, "max_degree": s.max_degree},
    }
    doc.update(inv.to_json_dict())
    return doc


def _require_positive(**tolerances) -> None:
    for name, value in tolerances.items():
        if not value > 0:
            raise DomainError(f"--{name} must be positive, got {value}")


def _cmd_classify(args) -> dict:
    _require_positive(**{"trig-tol": args.trig_tol,
                         "validation-tol": args.validation_tol})
    s = load_series(args.series)
    c = classify(
        s,
        trig_tolerance=args.trig_tol,
        validation_tolerance=args.validation_tol,
    )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "config": {
            "series": args.series,
            "max_degree": s.max_degree,
            "trig_tol": args.trig_tol,
            "validation_tol": args.validation_tol,
        },
    }
    doc.update(c.to_json_dict())
    return doc


def _cmd_verify_identity(args) -> dict:
    if args.series is not None:
        handle = OddFunctionHandle.from_series(load_series(args.series))
    elif args.function == "z":
        handle = OddFunctionHandle.identity()
    elif args.function == "sin":
        handle = OddFunctionHandle.sine()
    elif args.function == "sigma":
        handle = OddFunctionHandle.from_sigma(_lattice_from_args(args))
    else:
        raise DomainError("choose --function {z,sin,sigma} or --series FILE")
    report = identity_report(
        handle, num_samples=args.samples, seed=args.seed, box_radius=args.box
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify-identity",
        **report,
    }


def _cmd_verify_duplication(args) -> dict:
    s = load_series(args.series)
    report = duplication_report(s)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify-duplication",
        "config": {"series": args.series, "max_degree": s.max_degree},
        **report,
    }


def _cmd_extend(args) -> dict:
    s = load_series(args.series)
    extended = extend_series(s, args.target)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "extend",
        "config": {"series": args.series, "target_degree": args.target},
        **extended.to_json_dict(),
    }


def _cmd_reduce_tau(args) -> dict:
    tau = parse_complex(args.tau)
    reduced, unimap = reduce_tau(tau)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "reduce-tau",
        "config": {"tau": cpair(tau)},
        "tau": cpair(reduced.value),
        "map": unimap.to_json_dict(),
    }


def _cmd_invert_j(args) -> dict:
    _require_positive(tolerance=args.tolerance)
    jval = parse_complex(args.value)
    tau = invert_j(jval, tolerance=args.tolerance)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "invert-j",
        "config": {"value": cpair(jval), "tolerance": args.tolerance},
        "tau": cpair(tau.value),
    }


def _cmd_psi(args) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "psi",
        "config": {"n": args.n},
        "psi": psi(args.n),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmakit",
        description=(
            "Weierstrass sigma / Jacobi theta toolkit. Complex arguments are "
            "written re,im (bare re means imaginary part 0); JSON output uses "
            "[re, im] pairs. Exit codes: 0 ok, 1 domain error, 2 numeric error."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lattice_options(p):
        p.add_argument("--tau", help="upper-half-plane point re,im")
        p.add_argument("--rho", help="lattice scale re,im (default 1)")
        p.add_argument("--omega1", help="first generator re,im")
        p.add_argument("--omega2", help="second generator re,im")

    p = sub.add_parser("eval", help="evaluate theta1, eta, g2, g3, j, or sigma")
    p.add_argument("function", choices=["theta1", "eta", "g2", "g3", "j", "sigma"])
    p.add_argument("--z", help="argument re,im (theta1 and sigma)")
    add_lattice_options(p)
    p.add_argument("--term-cap", type=int, default=TERM_CAP,
                   help="series/product term cap (default %(default)s)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("invariants", help="p, q, mu of an odd series file")
    p.add_argument("series", help="JSON file with max_degree and odd_coefficients")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="classify an odd series file")
    p.add_argument("series")
    p.add_argument("--trig-tol", type=float, default=TRIG_TOLERANCE,
                   help="relative mu-window routed to the sine family "
                        "(default %(default)s)")
    p.add_argument("--validation-tol", type=float, default=VALIDATION_TOLERANCE,
                   help="relative tolerance for coefficients beyond degree 7 "
                        "(default %(default)s)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify-identity",
                       help="four-point identity residuals on random quadruples")
    p.add_argument("--function", choices=["z", "sin", "sigma"])
    p.add_argument("--series", help="odd series JSON file (overrides --function)")
    add_lattice_options(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="RNG seed (default %(default)s)")
    p.add_argument("--box", type=float, default=1.0,
                   help="quadruple radius bound (default %(default)s)")
    p.set_defaults(func=_cmd_verify_identity)

    p = sub.add_parser("verify-duplication",
                       help="duplication-equation residual coefficients")
    p.add_argument("series")
    p.set_defaults(func=_cmd_verify_duplication)

    p = sub.add_parser("extend", help="extend odd Taylor data by the recurrence")
    p.add_argument("series")
    p.add_argument("--target", type=int, required=True, help="target odd degree")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("reduce-tau", help="fundamental-domain reduction")
    p.add_argument("--tau", required=True)
    p.set_defaults(func=_cmd_reduce_tau)

    p = sub.add_parser("invert-j", help="tau with j(tau) equal to a given value")
    p.add_argument("--value", required=True, help="target j as re,im")
    p.add_argument("--tolerance", type=float, default=J_TOLERANCE,
                   help="relative residual target (default %(default)s)")
    p.set_defaults(func=_cmd_invert_j)

    p = sub.add_parser("psi", help="(n-1)(n-2)(n-3) + 8 - 2^n for odd n >= 5")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_psi)

    return parser


def _error_doc(kind: str, exc: Exception) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "error": {"type": kind, "message": str(exc)},
    }
    diagnostics = getattr(exc, "diagnostics", None)
    if diagnostics:
        doc["error"]["diagnostics"] = diagnostics
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage/help; keep its success exits and
        # map its failures to the domain-error exit code.
        return EXIT_OK if exc.code in (0, None) else EXIT_DOMAIN
    try:
        emit(args.func(args))
        return EXIT_OK
    except NumericError as exc:
        emit(_error_doc("numeric", exc))
        return EXIT_NUMERIC
    except DomainError as exc:
        emit(_error_doc("domain", exc))
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
