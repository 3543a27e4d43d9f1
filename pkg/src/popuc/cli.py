"""Command line interface.

Subcommands: generate (emit a system as JSON), check (run identity
verifications, exit 1 on failure), reconstruct (persymmetric recovery from
a spectrum file), export (JSON or CSV to a path).

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 reconstruction failure, 4 I/O failure.

JSON output is canonical: keys sorted, floats printed with 17 significant
digits (enough to round-trip doubles bit-exactly), complex numbers as
[real, imag] pairs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import cmv as cmv_mod
from . import families as fam_mod
from .complex_poly import UnitCirclePoint
from .errors import (
    NotPersymmetricError,
    PopucError,
    SpectrumInconsistencyError,
    SzegoClassError,
)
from .inverse_spectral import reconstruct_persymmetric
from .mirror import (
    is_persymmetric,
    persymmetry_defect,
    verify_persymmetry_characterizations,
)
from .opuc_core import (
    VerblunskySequence,
    build_system,
    orthogonality_residual,
    paraorthogonality_residual,
    spectrum,
    weights,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_RECONSTRUCTION = 3
EXIT_IO = 4


def _format_float(x: float) -> str:
    return f"{x:.17g}"


def _canonical(value: Any) -> str:
    """Render a JSON document with sorted keys and fixed float formatting."""
    if isinstance(value, dict):
        items = sorted(value.items())
        inner = ",".join(f"{json.dumps(k)}:{_canonical(v)}" for k, v in items)
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_canonical(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _format_float(float(value))
    if value is None:
        return "null"
    return json.dumps(value)


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _load_json_arg(text: str) -> Any:
    """Accept either inline JSON or a path to a JSON file."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    return json.loads(Path(text).read_text())


def _verblunsky_from_json(doc: Any) -> VerblunskySequence:
    if not isinstance(doc, dict) or "a" not in doc or "omega" not in doc:
        raise ValueError('expected an object with keys "a" and "omega"')
    a = np.array([complex(re, im) for re, im in doc["a"]], dtype=np.complex128)
    om = complex(doc["omega"][0], doc["omega"][1])
    return VerblunskySequence(a, om)


def _system_from_args(args: argparse.Namespace) -> VerblunskySequence:
    if args.verblunsky is not None:
        return _verblunsky_from_json(_load_json_arg(args.verblunsky))
    if args.family is None:
        raise ValueError("provide either --verblunsky or --family")
    if args.n is None:
        raise ValueError("--family needs --n")
    name = args.family
    if name == "free":
        return fam_mod.free_family(args.n, args.nu).v
    if name == "single_moment":
        return fam_mod.single_moment(args.n).v
    if name == "single_moment_dual":
        return fam_mod.single_moment_dual(args.n).v
    if name == "single_moment_persymmetric":
        return fam_mod.single_moment_persymmetric(args.n).v
    if name == "krawtchouk":
        return fam_mod.krawtchouk_family(args.n, complex(np.exp(1j * args.omega_arg))).v
    raise ValueError(f"unknown family {name!r}")


def _payload(v: VerblunskySequence, emit: str) -> dict[str, Any]:
    sys_ = build_system(v)
    out: dict[str, Any] = {
        "n": v.n,
        "verblunsky": {"a": [_pair(z) for z in v.a], "omega": _pair(v.omega)},
    }
    if emit in ("phis", "all"):
        out["phis"] = [[_pair(c) for c in p.coeffs] for p in sys_.phis]
        out["h"] = [float(x) for x in sys_.h]
    if emit in ("spectrum", "weights", "all"):
        nodes = spectrum(sys_)
        out["spectrum"] = {
            "theta": [p.theta for p in nodes],
            "z": [_pair(p.value) for p in nodes],
        }
        if emit in ("weights", "all"):
            data = weights(sys_, nodes)
            out["weights"] = [float(x) for x in data.weights]
    if emit in ("cmv", "all"):
        m1, m2 = cmv_mod.factors(v)
        u = m2 @ m1
        out["cmv"] = {
            "m1": [[_pair(x) for x in row] for row in m1],
            "m2": [[_pair(x) for x in row] for row in m2],
            "u": [[_pair(x) for x in row] for row in u],
        }
    return out


def _document(command: str, payload: dict[str, Any]) -> str:
    return _canonical(
        {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
    )


def cmd_generate(args: argparse.Namespace) -> int:
    v = _system_from_args(args)
    print(_document("generate", _payload(v, args.emit)))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    v = _system_from_args(args)
    run_all = args.all or not (args.persymmetric or args.mirror_relations or args.orthogonality)
    checks: dict[str, Any] = {}
    passed = True
    if args.orthogonality or run_all:
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        data = weights(sys_, nodes)
        ortho = orthogonality_residual(sys_, data)
        para = paraorthogonality_residual(sys_)
        checks["orthogonality_residual"] = ortho
        checks["paraorthogonality_residual"] = para
        passed = passed and ortho <= 1e-8 and para <= 1e-10
    if args.mirror_relations or run_all:
        report = cmv_mod.verify_mirror_relations(v)
        checks["mirror_relations"] = {
            "m1_residual": report.m1_residual,
            "m2_residual": report.m2_residual,
            "u_residual": report.u_residual,
            "parity": report.parity,
        }
        passed = passed and report.max_residual <= 1e-10
    persym = is_persymmetric(v)
    checks["persymmetric"] = persym
    checks["persymmetry_defect"] = persymmetry_defect(v)
    if args.persymmetric:
        if persym:
            chars = verify_persymmetry_characterizations(v)
            checks["persymmetry_characterizations"] = {
                "weight_residual": chars.weight_residual,
                "modulus_residual": chars.modulus_residual,
                "phase_residual": chars.phase_residual,
                "epsilon": chars.epsilon,
            }
            passed = passed and chars.max_residual <= 1e-8
        else:
            passed = False
    elif run_all and persym:
        chars = verify_persymmetry_characterizations(v)
        checks["persymmetry_characterizations"] = {
            "weight_residual": chars.weight_residual,
            "modulus_residual": chars.modulus_residual,
            "phase_residual": chars.phase_residual,
            "epsilon": chars.epsilon,
        }
        passed = passed and chars.max_residual <= 1e-8
    checks["passed"] = passed
    print(_document("check", {"n": v.n, "checks": checks}))
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_reconstruct(args: argparse.Namespace) -> int:
    doc = _load_json_arg(args.spectrum)
    if isinstance(doc, dict) and "theta" in doc:
        doc = doc["theta"]
    if not isinstance(doc, list):
        raise ValueError("spectrum input must be a JSON list of angles")
    nodes = sorted(UnitCirclePoint(float(t)) for t in doc)
    omega = complex(np.exp(1j * args.omega_arg))
    result = reconstruct_persymmetric(nodes, omega)
    payload = {
        "a": [_pair(z) for z in result.v.a],
        "omega": _pair(result.v.omega),
        "n": result.v.n,
        "epsilon": result.epsilon,
        "h_final": result.h_final,
        "division_residuals": [float(x) for x in result.division_residuals],
        "spectrum_residual": result.spectrum_residual,
    }
    print(_document("reconstruct", payload))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    v = _system_from_args(args)
    path = Path(args.out)
    if args.format == "json":
        text = _document("export", _payload(v, args.emit)) + "\n"
        path.write_text(text)
    else:
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        data = weights(sys_, nodes)
        lines = ["s,theta,weight"]
        for s, (node, wgt) in enumerate(zip(data.nodes, data.weights)):
            lines.append(f"{s},{_format_float(node.theta)},{_format_float(float(wgt))}")
        path.write_text("\n".join(lines) + "\n")
    return EXIT_OK


def _add_system_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--verblunsky", help="inline JSON or path: {\"a\": [[re,im],..], \"omega\": [re,im]}")
    p.add_argument(
        "--family",
        choices=[
            "free",
            "single_moment",
            "single_moment_dual",
            "single_moment_persymmetric",
            "krawtchouk",
        ],
    )
    p.add_argument("--n", type=int, help="number of coefficients below the closure")
    p.add_argument("--nu", type=float, default=0.0, help="free family rotation (turns)")
    p.add_argument("--omega-arg", type=float, default=0.0, help="arg(omega) in radians")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="popuc",
        description="Finite paraorthogonal polynomials on the unit circle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a system and print it as JSON")
    _add_system_arguments(g)
    g.add_argument("--emit", choices=["phis", "spectrum", "weights", "cmv", "all"], default="all")
    g.set_defaults(fn=cmd_generate)

    c = sub.add_parser("check", help="verify identities; exit 1 when any fails")
    _add_system_arguments(c)
    c.add_argument("--persymmetric", action="store_true")
    c.add_argument("--mirror-relations", action="store_true")
    c.add_argument("--orthogonality", action="store_true")
    c.add_argument("--all", action="store_true")
    c.set_defaults(fn=cmd_check)

    r = sub.add_parser("reconstruct", help="recover persymmetric data from node angles")
    r.add_argument("--spectrum", required=True, help="JSON list of angles, inline or a path")
    r.add_argument("--omega-arg", type=float, required=True, help="arg(omega) in radians")
    r.set_defaults(fn=cmd_reconstruct)

    e = sub.add_parser("export", help="write JSON or CSV output to a file")
    _add_system_arguments(e)
    e.add_argument("--emit", choices=["phis", "spectrum", "weights", "cmv", "all"], default="all")
    e.add_argument("--format", choices=["json", "csv"], required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(fn=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.fn(args))
    except (SpectrumInconsistencyError, NotPersymmetricError, SzegoClassError) as exc:
        if args.command == "reconstruct":
            print(f"reconstruction failed: {exc}", file=sys.stderr)
            return EXIT_RECONSTRUCTION
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, KeyError, TypeError, json.JSONDecodeError, PopucError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
