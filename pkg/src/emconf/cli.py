"""Command-line front end for conformal field transformations.

Three subcommands: `transform` sweeps an analytic field over a spacetime
grid and writes input and transformed components per event, `invariants`
reports the Lorentz invariants and their predicted scaling at one event,
and `verify` runs the seeded self-check suite.

Numbers are emitted at 17 significant digits and rows in grid order, so
identical jobs produce byte-identical files.  CSV and JSON are written by
hand: the stdlib serializers do not honor a fixed digit count.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

import numpy as np

from .cl13 import FourVector
from .cl3 import Paravector3
from .conformal13 import (
    ConformalParams,
    CoordinateFrame,
    Dilation,
    Inversion,
    Lorentz,
    LorentzClass,
    Sct,
    Translation,
)
from .conformal3 import inverse_position3, scale_of, transform_faraday3
from .errors import ConformalDomainError, OriginSingularityError
from .fields import (
    Coulomb,
    FieldSpec,
    PlaneWave,
    UniformField,
    eval_field,
    invariant_scaling_report,
)
from .verify import run_suite

DEFAULT_SEED = 42
DEFAULT_TRIALS = 500
DEFAULT_TOL = 1e-10

_AXES = ("t", "x", "y", "z")
_FIELD_KEYS = (
    "Ex", "Ey", "Ez", "Bx", "By", "Bz",
    "Exp", "Eyp", "Ezp", "Bxp", "Byp", "Bzp",
)
CSV_HEADER = "t,x,y,z," + ",".join(_FIELD_KEYS) + ",scale,skipped"


class JobError(Exception):
    """Malformed job file or inconsistent flag set."""


def _num(v: float) -> str:
    return f"{float(v):.17g}"


# -- flag and job parsing ---------------------------------------------------------


def _vec(text: str, n: int) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vec3(text: str) -> tuple[float, ...]:
    return _vec(text, 3)


def _vec4(text: str) -> tuple[float, ...]:
    return _vec(text, 4)


def _grid_flag(text: str) -> dict:
    """Parse t=0:2:5,x=-1:1:3 into per-axis (min, max, count) entries."""
    grid = {}
    for item in text.split(","):
        name, sep, spec = item.partition("=")
        if not sep or name not in _AXES:
            raise argparse.ArgumentTypeError(f"bad grid axis: {item!r}")
        if name in grid:
            raise argparse.ArgumentTypeError(f"duplicate grid axis: {name}")
        parts = spec.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"axis {name}: expected min:max:count")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"axis {name}: {exc}") from None
        grid[name] = {"min": lo, "max": hi, "count": count}
    return grid


def _load_job(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            job = json.load(fh)
    except OSError as exc:
        raise JobError(f"cannot read job file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise JobError(f"job file is not valid JSON: {exc}") from None
    if not isinstance(job, dict):
        raise JobError("job file must hold a JSON object")
    return job


def _require_numbers(seq, n: int, what: str) -> tuple[float, ...]:
    if not isinstance(seq, (list, tuple)) or len(seq) != n:
        raise JobError(f"{what} must be a list of {n} numbers")
    try:
        return tuple(float(v) for v in seq)
    except (TypeError, ValueError):
        raise JobError(f"{what} must be a list of {n} numbers") from None


def build_field(spec: dict) -> FieldSpec:
    kind = spec.get("kind")
    try:
        if kind == "uniform":
            return UniformField(
                E0=_require_numbers(spec.get("E0", (0, 0, 0)), 3, "E0"),
                B0=_require_numbers(spec.get("B0", (0, 0, 0)), 3, "B0"),
            )
        if kind == "planewave":
            if "E0" not in spec or "khat" not in spec:
                raise JobError("planewave needs E0 and khat")
            return PlaneWave(
                E0=_require_numbers(spec["E0"], 3, "E0"),
                khat=_require_numbers(spec["khat"], 3, "khat"),
                phase=float(spec.get("phase", 0.0)),
            )
        if kind == "coulomb":
            return Coulomb(q=float(spec.get("q", 1.0)))
    except JobError:
        raise
    except (TypeError, ValueError) as exc:
        raise JobError(f"bad {kind} field: {exc}") from None
    raise JobError(f"unknown field kind: {kind!r}")


def build_xform(spec: dict) -> ConformalParams:
    kind = spec.get("kind")
    try:
        if kind == "dilation":
            return Dilation(factor=float(spec.get("factor", 1.0)))
        if kind == "translation":
            if "offset" not in spec:
                raise JobError("translation needs an offset")
            return Translation(
                offset=FourVector(*_require_numbers(spec["offset"], 4, "offset"))
            )
        if kind == "lorentz":
            cls_name = spec.get("class", LorentzClass.PROPER_ORTHOCHRONOUS.value)
            try:
                cls = LorentzClass(cls_name)
            except ValueError:
                raise JobError(f"unknown lorentz class: {cls_name!r}") from None
            return Lorentz(
                boost=_require_numbers(spec.get("boost", (0, 0, 0)), 3, "boost"),
                rotation=_require_numbers(
                    spec.get("rotation", (0, 0, 0)), 3, "rotation"
                ),
                lorentz_class=cls,
            )
        if kind == "inversion":
            return Inversion(eps=int(spec.get("eps", 1)))
        if kind == "sct":
            if "a" not in spec:
                raise JobError("sct needs the vector a")
            return Sct(a=FourVector(*_require_numbers(spec["a"], 4, "a")))
    except JobError:
        raise
    except (TypeError, ValueError) as exc:
        raise JobError(f"bad {kind} parameters: {exc}") from None
    raise JobError(f"unknown transformation kind: {kind!r}")


def _field_spec_from_args(args) -> dict | None:
    if args.field is None:
        return None
    spec = {"kind": args.field}
    for key, value in (
        ("E0", args.E0), ("B0", args.B0), ("khat", args.khat),
        ("phase", args.phase), ("q", args.q),
    ):
        if value is not None:
            spec[key] = list(value) if isinstance(value, tuple) else value
    return spec


def _xform_spec_from_args(args) -> dict | None:
    if args.xform is None:
        return None
    spec = {"kind": args.xform}
    for key, value in (
        ("eps", args.eps), ("a", args.a), ("factor", args.dilation_factor),
        ("offset", args.b), ("boost", args.boost), ("rotation", args.rotation),
        ("class", args.lorentz_class),
    ):
        if value is not None:
            spec[key] = list(value) if isinstance(value, tuple) else value
    return spec


def _merge_spec(from_job, from_args, what: str) -> dict:
    """Flags override the job file; either source alone is fine."""
    if from_job is not None and not isinstance(from_job, dict):
        raise JobError(f"job {what} entry must be an object")
    if from_args is not None:
        if from_job is not None and from_job.get("kind") == from_args["kind"]:
            return {**from_job, **from_args}
        return from_args
    if from_job is None:
        raise JobError(f"no {what} given (use flags or a job file)")
    return from_job


def _resolve_grid(job_grid, flag_grid) -> dict:
    grid = {}
    if job_grid is not None:
        if not isinstance(job_grid, dict):
            raise JobError("job grid must be an object keyed by axis")
        for name, axis in job_grid.items():
            if name not in _AXES:
                raise JobError(f"unknown grid axis: {name!r}")
            if not isinstance(axis, dict):
                raise JobError(f"grid axis {name} must be a min/max/count object")
            grid[name] = axis
    if flag_grid:
        grid.update(flag_grid)
    axes = {}
    for name in _AXES:
        axis = grid.get(name, {"min": 0.0, "max": 0.0, "count": 1})
        try:
            lo = float(axis["min"])
            hi = float(axis["max"])
            count = int(axis["count"])
        except (KeyError, TypeError, ValueError):
            raise JobError(f"grid axis {name} needs numeric min, max, count") from None
        if count < 1:
            raise JobError(f"grid axis {name}: count must be at least 1")
        if lo > hi:
            raise JobError(f"grid axis {name}: min exceeds max")
        axes[name] = np.linspace(lo, hi, count) if count > 1 else np.array([lo])
    return axes


# -- transform --------------------------------------------------------------------


def _event_row(
    field: FieldSpec,
    params: ConformalParams,
    frame: CoordinateFrame,
    coords: tuple[float, float, float, float],
) -> dict:
    row = dict(zip(_AXES, coords))
    try:
        grid_pv = Paravector3.from_event(coords[0], coords[1:])
        if frame is CoordinateFrame.TRANSFORMED:
            src_pv = inverse_position3(params, grid_pv)
            src = FourVector(src_pv.s.real, *src_pv.v.real)
        else:
            src = FourVector(*coords)
        F_in = eval_field(field, src)
        F_out = transform_faraday3(params, F_in, grid_pv, frame)
        scale = scale_of(params, grid_pv, frame)
    except (ConformalDomainError, OriginSingularityError):
        row.update({key: None for key in _FIELD_KEYS})
        row["scale"] = None
        row["skipped"] = True
        return row
    for key, value in zip(_FIELD_KEYS, (*F_in.E, *F_in.B, *F_out.E, *F_out.B)):
        row[key] = float(value)
    row["scale"] = scale
    row["skipped"] = False
    return row


def _rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        cells = [_num(row[a]) for a in _AXES]
        cells += ["" if row[k] is None else _num(row[k]) for k in _FIELD_KEYS]
        cells.append("" if row["scale"] is None else _num(row["scale"]))
        cells.append("1" if row["skipped"] else "0")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _num(value)
    return json.dumps(value)


def _json_object(items) -> str:
    body = ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}" for k, v in items)
    return "{" + body + "}"


def _rows_to_json(rows) -> str:
    lines = [_json_object(row.items()) for row in rows]
    return "[\n" + ",\n".join(lines) + "\n]\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_transform(args) -> int:
    job = _load_job(args.job) if args.job else {}
    field = build_field(_merge_spec(job.get("field"), _field_spec_from_args(args), "field"))
    params = build_xform(_merge_spec(job.get("xform"), _xform_spec_from_args(args), "transformation"))
    axes = _resolve_grid(job.get("grid"), args.grid)
    frame_name = args.frame or job.get("frame", "original")
    try:
        frame = CoordinateFrame(frame_name)
    except ValueError:
        raise JobError(f"unknown frame: {frame_name!r}") from None
    fmt = args.format or job.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise JobError(f"unknown format: {fmt!r}")
    out = args.out or job.get("out")

    rows = [
        _event_row(field, params, frame, coords)
        for coords in itertools.product(*(axes[a] for a in _AXES))
    ]
    text = _rows_to_csv(rows) if fmt == "csv" else _rows_to_json(rows)
    _emit(text, out)
    if all(row["skipped"] for row in rows):
        print("error: every grid point was skipped", file=sys.stderr)
        return 1
    return 0


# -- invariants -------------------------------------------------------------------

_REPORT_KEYS = (
    "i1", "i2", "i1_transformed", "i2_transformed",
    "factor_i1", "factor_i2", "rel_dev_i1", "rel_dev_i2", "scale",
)


def cmd_invariants(args) -> int:
    job = _load_job(args.job) if args.job else {}
    field = build_field(_merge_spec(job.get("field"), _field_spec_from_args(args), "field"))
    params = build_xform(_merge_spec(job.get("xform"), _xform_spec_from_args(args), "transformation"))
    point = args.point if args.point is not None else job.get("point")
    if point is None:
        raise JobError("no point given (use --point or a job file)")
    coords = _require_numbers(point, 4, "point")
    try:
        report = invariant_scaling_report(field, params, FourVector(*coords))
    except (ConformalDomainError, OriginSingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = [f"  {json.dumps(k)}: {_num(getattr(report, k))}" for k in _REPORT_KEYS]
    _emit("{\n" + ",\n".join(lines) + "\n}\n", args.out)
    return 0


# -- verify -----------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get("EMCONF_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise JobError(f"EMCONF_SEED must be an integer, got {raw!r}") from None


def _report_to_json(report) -> str:
    check_lines = [
        "  " + _json_object((
            ("check_id", c.check_id),
            ("trials", c.trials),
            ("max_abs_dev", c.max_dev),
            ("tolerance", c.tolerance),
            ("pass", c.passed),
        ))
        for c in report.checks
    ]
    head = (
        f'  "seed": {report.seed},\n'
        f'  "trials": {report.trials},\n'
        f'  "tolerance": {_num(report.tolerance)},\n'
        f'  "pass": {_json_scalar(report.passed)},\n'
        f'  "checks": [\n'
    )
    return "{\n" + head + ",\n".join("  " + ln for ln in check_lines) + "\n  ]\n}\n"


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.trials < 1:
        raise JobError("trials must be at least 1")
    if args.tol < 0.0:
        raise JobError("tol must be nonnegative")
    report = run_suite(seed=seed, trials=args.trials, tol=args.tol)
    _emit(_report_to_json(report), args.out)
    npass = sum(1 for c in report.checks if c.passed)
    status = "passed" if report.passed else "FAILED"
    print(f"verification {status}: {npass}/{len(report.checks)} checks", file=sys.stderr)
    return 0 if report.passed else 1


# -- entry point ------------------------------------------------------------------


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("field")
    g.add_argument("--field", choices=["uniform", "planewave", "coulomb"])
    g.add_argument("--E0", type=_vec3, metavar="Ex,Ey,Ez")
    g.add_argument("--B0", type=_vec3, metavar="Bx,By,Bz")
    g.add_argument("--khat", type=_vec3, metavar="kx,ky,kz")
    g.add_argument("--phase", type=float)
    g.add_argument("--q", type=float)


def _add_xform_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("transformation")
    g.add_argument(
        "--xform",
        choices=["dilation", "translation", "lorentz", "inversion", "sct"],
    )
    g.add_argument("--eps", type=int, choices=[-1, 1])
    g.add_argument("--a", type=_vec4, metavar="t,x,y,z")
    g.add_argument("--lambda", dest="dilation_factor", type=float, metavar="FACTOR")
    g.add_argument("--b", type=_vec4, metavar="t,x,y,z")
    g.add_argument("--boost", type=_vec3, metavar="bx,by,bz")
    g.add_argument("--rotation", type=_vec3, metavar="rx,ry,rz")
    g.add_argument(
        "--lorentz-class",
        dest="lorentz_class",
        choices=[c.value for c in LorentzClass],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emconf",
        description="Conformal transformations of electromagnetic fields, "
        "with a seeded self-verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tp = sub.add_parser(
        "transform", help="sweep a field over a spacetime grid and transform it"
    )
    tp.add_argument("--job", metavar="JOB.json", help="job file; flags override it")
    _add_field_flags(tp)
    _add_xform_flags(tp)
    tp.add_argument("--grid", type=_grid_flag, metavar="t=0:2:5,x=...")
    tp.add_argument("--frame", choices=["original", "transformed"])
    tp.add_argument("--out", metavar="PATH")
    tp.add_argument("--format", choices=["csv", "json"])

    ip = sub.add_parser(
        "invariants", help="invariant scaling report at one event"
    )
    ip.add_argument("--job", metavar="JOB.json", help="job file; flags override it")
    _add_field_flags(ip)
    _add_xform_flags(ip)
    ip.add_argument("--point", type=_vec4, metavar="t,x,y,z")
    ip.add_argument("--out", metavar="PATH")

    vp = sub.add_parser("verify", help="run the seeded self-check suite")
    vp.add_argument("--seed", type=int, help="default: EMCONF_SEED or 42")
    vp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    vp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    vp.add_argument("--out", metavar="PATH")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "transform": cmd_transform,
        "invariants": cmd_invariants,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
