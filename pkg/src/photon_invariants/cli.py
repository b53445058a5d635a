"""Command-line interface.

States are given either as expressions (``"1/sqrt(2)*|2,0> - 1/sqrt(2)*|0,2>"``)
or as catalog entries written ``@name(arg, ...)``, e.g. ``@singlet_lr(1, 0.5)``.

Exit codes: 0 success, 2 parse or argument error, 3 capacity exceeded,
4 numeric failure.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import jsonio
from .analysis import Verdict, equiv, invariants_report, jacobian_rank
from .catalog import builtin_state
from .errors import ArgumentError, CapacityError, DimensionError, NumericError, OpticsError, ParseError
from .expr import format_state, parse_state
from .fock import PureState
from .interferometer import fuse, sample_shots, simulate_copies
from .majorana import constellation
from .moments import moment_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_NUMERIC = 4

_BUILTIN = re.compile(r"^\s*@(\w+)\s*(?:\((.*)\))?\s*$", re.S)


def read_state(text: str, normalize: bool = False) -> PureState:
    """Parse an expression or an ``@name(args)`` catalog reference."""
    m = _BUILTIN.match(text)
    if m:
        args = [a for a in (m.group(2) or "").split(",") if a.strip()]
        params = []
        for a in args:
            try:
                params.append(float(a))
            except ValueError:
                raise ArgumentError(f"builtin parameter {a.strip()!r} is not a number") from None
        s = builtin_state(m.group(1), params)
        return s.normalized() if normalize else s
    return parse_state(text, normalize=normalize)


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, (CapacityError, MemoryError)):
        return EXIT_CAPACITY
    if isinstance(exc, (ParseError, ArgumentError, DimensionError)):
        return EXIT_PARSE
    return EXIT_NUMERIC


def _error_record(exc: BaseException) -> dict:
    kind = {EXIT_CAPACITY: "capacity", EXIT_PARSE: "parse", EXIT_NUMERIC: "numeric"}[_exit_code(exc)]
    record = {"kind": kind, "type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        record.update(line=exc.line, column=exc.column)
    if isinstance(exc, NumericError):
        record["residual"] = exc.residual
    return record


def _spectrum_text(values) -> str:
    return "[" + ", ".join(f"{v:.12g}" for v in values) + "]"


# each command returns (json payload, text)

def cmd_invariants(args, text):
    s = read_state(text, args.normalize)
    report = invariants_report(s, args.kmax_block, args.kmax_moment)
    lines = [f"state: {format_state(s)}", f"n = {s.n}, d = {s.d}, norm = {report['norm']:.12g}"]
    for b in report["blocks"]:
        lines.append(f"block k={b['k']} (dim {b['dim']}): {_spectrum_text(b['eigenvalues'])}")
    for m in report["moments"]:
        lines.append(f"moment k={m['k']}: {m['value']:.12g}")
    return report, "\n".join(lines)


def cmd_moments(args, text):
    s = read_state(text, args.normalize)
    rows = moment_report(s, args.kmax_moment)
    payload = {"n": s.n, "d": s.d,
               "moments": [{"k": r.k, "value": r.moment, "projection": r.projection,
                            "projection_bound": r.bound} for r in rows]}
    lines = []
    for r in rows:
        extra = "" if r.projection is None else f", projection {r.projection:.12g}"
        lines.append(f"k={r.k}: {r.moment:.12g} (bound {r.bound:.12g}{extra})")
    return payload, "\n".join(lines)


def cmd_majorana(args, text):
    s = read_state(text, args.normalize)
    angles = constellation(s).angles()
    payload = {"n": s.n, "points": [{"theta": t, "phi": p} for t, p in angles]}
    return payload, "\n".join(f"({t:.12g}, {p:.12g})" for t, p in angles)


def _outcome_payload(outcome):
    return {"output": jsonio.state_to_json(outcome.output),
            "success_probability": outcome.success_probability}


def cmd_simulate(args, text):
    s = read_state(text, args.normalize)
    outcome = simulate_copies(s, args.k)
    payload = _outcome_payload(outcome)
    lines = [f"output: {format_state(outcome.output.normalized())}",
             f"success probability: {outcome.success_probability:.12g}"]
    if args.shots:
        hits = sample_shots(outcome.success_probability, args.shots, args.seed)
        rate = float(hits.mean())
        payload.update(shots=args.shots, seed=args.seed, successes=int(hits.sum()), empirical_rate=rate)
        lines.append(f"shots: {args.shots}, successes: {int(hits.sum())}, rate: {rate:.12g}")
        if args.records:
            records = "\n".join(jsonio.dumps({"shot": i, "success": bool(h)}) for i, h in enumerate(hits))
            payload["_records"] = records
    return payload, "\n".join(lines)


def cmd_fuse(args, texts):
    outcome = fuse([read_state(t, args.normalize) for t in texts])
    return _outcome_payload(outcome), (f"output: {format_state(outcome.output.normalized())}\n"
                                       f"success probability: {outcome.success_probability:.12g}")


def cmd_equiv(args, texts):
    s1, s2 = (read_state(t, args.normalize) for t in texts)
    v = equiv(s1, s2, kmax=args.kmax, tol=args.tol)
    payload = {"verdict": v.verdict.value, "kmax": v.kmax}
    text = v.verdict.value
    if v.verdict is Verdict.DISTINGUISHED:
        payload["witness"] = v.witness
        w = v.witness
        where = f" k={w['k']}" if "k" in w else ""
        text += f": {w['invariant']}{where} differs"
        if w["invariant"] == "block_spectrum":
            text += f" ({_spectrum_text(w['values'][0])} vs {_spectrum_text(w['values'][1])})"
        else:
            text += f" ({w['values'][0]} vs {w['values'][1]})"
    elif v.verdict is Verdict.CERTIFIED_EQUIVALENT:
        payload["unitary"] = jsonio.unitary_to_json(v.unitary)
        text += "\nunitary:\n" + np.array2string(v.unitary.matrix, precision=12)
    else:
        payload["notes"] = v.notes
        text += f" up to k={v.kmax}" + "".join(f"\n{n}" for n in v.notes)
    return payload, text


def cmd_jacobian(args, _):
    res = jacobian_rank(args.kmax_moments, args.kmax_blocks)
    payload = {"rank": res.rank, "singular_values": res.singular_values,
               "kmax_moments": args.kmax_moments, "kmax_blocks": args.kmax_blocks}
    return payload, f"rank {res.rank}\nsingular values: {_spectrum_text(res.singular_values)}"


def cmd_builtin(args, _):
    s = builtin_state(args.name, args.params)
    s = s.normalized() if args.normalize else s
    return jsonio.state_to_json(s), format_state(s)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (schema 1)")
    common.add_argument("--normalize", action="store_true", help="rescale inputs to unit norm")

    batchable = argparse.ArgumentParser(add_help=False)
    batchable.add_argument("state", nargs="?", help="state expression or @builtin(args)")
    batchable.add_argument("--batch", metavar="FILE",
                           help="read one state per line ('-' for stdin); lines run in parallel")

    parser = argparse.ArgumentParser(prog="photon-invariants",
                                     description="Linear-optics invariants of multi-photon states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common, batchable], help="block spectra and moments")
    p.add_argument("--kmax-block", type=int, default=2)
    p.add_argument("--kmax-moment", type=int, default=3)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("moments", parents=[common, batchable], help="moments and projection bounds")
    p.add_argument("--kmax-moment", type=int, default=3)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("majorana", parents=[common, batchable], help="stellar constellation (d=2)")
    p.set_defaults(func=cmd_majorana)

    p = sub.add_parser("simulate", parents=[common, batchable], help="k-copy interferometer")
    p.add_argument("-k", type=int, default=2, help="number of copies")
    p.add_argument("--shots", type=int, default=0, help="sample this many post-selection trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--records", action="store_true", help="print one NDJSON record per shot")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fuse", parents=[common], help="interfere several different states")
    p.add_argument("states", nargs="+")
    p.set_defaults(func=cmd_fuse, multi="states")

    p = sub.add_parser("equiv", parents=[common], help="compare two states")
    p.add_argument("states", nargs=2, metavar="STATE")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_equiv, multi="states")

    p = sub.add_parser("jacobian-rank", parents=[common], help="three-qubit invariant rank test")
    p.add_argument("--kmax-moments", type=int, default=5)
    p.add_argument("--kmax-blocks", type=int, default=2)
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("builtin", parents=[common], help="print a catalog state")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=float)
    p.set_defaults(func=cmd_builtin)
    return parser


def _run_one(args, arg):
    try:
        payload, text = args.func(args, arg)
        return EXIT_OK, payload, text
    except OpticsError as exc:
        return _exit_code(exc), {"error": _error_record(exc)}, f"error: {exc}"
    except (ValueError, ArithmeticError, MemoryError) as exc:
        return _exit_code(exc), {"error": _error_record(exc)}, f"error: {exc}"


def _emit(args, code, payload, text, out, err):
    if args.json:
        records = payload.pop("_records", None) if isinstance(payload, dict) else None
        if records:
            out.write(records + "\n")
        out.write(jsonio.dumps({"schema": jsonio.SCHEMA_VERSION, **payload}) + "\n")
    elif code == EXIT_OK:
        if isinstance(payload, dict) and payload.get("_records"):
            out.write(payload["_records"] + "\n")
        out.write(text + "\n")
    else:
        err.write(text + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=err)
    args = build_parser().parse_args(argv)

    if getattr(args, "multi", None):
        inputs = [getattr(args, args.multi)]
    elif hasattr(args, "batch"):
        if args.batch and args.state:
            build_parser().error("give either a state or --batch, not both")
        if args.batch:
            handle = (contextlib.nullcontext(sys.stdin) if args.batch == "-"
                      else open(args.batch, encoding="utf-8"))
            with handle as fh:
                inputs = [line.strip() for line in fh if line.strip() and not line.lstrip().startswith("#")]
        elif args.state is None:
            build_parser().error("a state expression is required")
        else:
            inputs = [args.state]
    else:
        inputs = [None]

    if len(inputs) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda x: _run_one(args, x), inputs))
    else:
        results = [_run_one(args, inputs[0])]

    worst = EXIT_OK
    for code, payload, text in results:
        _emit(args, code, payload, text, out, err)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
