"""Batch command line front end.

    periodic-rt run JOB.json [--out CERT.json] [--workers N] [--p P] [--r R]
                             [--strict-vacuous] [--negative-control]
    periodic-rt category R [--p P]

Exit status: 0 success (membership holds, or a plain computation finished),
1 membership fails, 2 input error, 3 indeterminate verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from . import invariants
from .category import MAX_DOUBLINGS, ModularDatum, make_tl_datum
from .errors import ArtifactError, Indeterminate, InputError
from .ring import jp_generator
from .tangle import SlicedTangle, parse_tangle
from .topology import linking_matrix, signature, total_signature, trace_components, tristram_levine

JOB_VERSION = 1
TASKS = ("bracket", "invariant", "verify-periodic", "verify-trace", "signature", "tristram")
PERIODIC_KINDS = ("bracket-lemma", "main-theorem", "tau-corollary")

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3


def _require(job: dict, key: str, task: str):
    if key not in job:
        raise InputError(f"task {task!r} requires field {key!r}", "cli.run")
    return job[key]


def _int_matrix(value, name: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise InputError(f"{name} must be a list of integer rows", "cli.run")
    for row in value:
        if len(row) != len(value) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError(f"{name} must be a square matrix of integers", "cli.run")
    return value


def _datum(job: dict, r_override: int | None) -> ModularDatum:
    datum_cfg = job.get("datum") or {}
    r = r_override if r_override is not None else datum_cfg.get("r")
    if not isinstance(r, int) or r < 3:
        raise InputError("datum.r must be an integer >= 3", "cli.run")
    doublings = datum_cfg.get("max_doublings", MAX_DOUBLINGS)
    if not isinstance(doublings, int) or doublings < 0:
        raise InputError("datum.max_doublings must be a non-negative integer", "cli.run")
    return make_tl_datum(r, doublings)


def _tangle(job: dict, task: str) -> SlicedTangle:
    text = _require(job, "tangle", task)
    if not isinstance(text, str):
        raise InputError("tangle must be a string in the tangle text format", "cli.run")
    return parse_tangle(text)


def _p(job: dict, p_override: int | None, task: str) -> int:
    p = p_override if p_override is not None else _require(job, "p", task)
    if not isinstance(p, int):
        raise InputError("p must be an integer", "cli.run")
    return p


def load_job(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", "cli.run") from None
    try:
        job = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}", "cli.run") from None
    if not isinstance(job, dict):
        raise InputError("job file must contain a JSON object", "cli.run")
    if job.get("version") != JOB_VERSION:
        raise InputError(f"unsupported job version {job.get('version')!r} (expected {JOB_VERSION})", "cli.run")
    if job.get("task") not in TASKS:
        raise InputError(f"unknown task {job.get('task')!r}; expected one of {', '.join(TASKS)}", "cli.run")
    return job


def _write(out: str | None, text: str) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")


def _fixed(job: dict) -> dict[int, int] | None:
    fixed = job.get("fixed")
    if fixed is None:
        return None
    try:
        return {int(k): int(v) for k, v in fixed.items()}
    except (AttributeError, ValueError):
        raise InputError("fixed must map component indices to colors", "cli.run") from None


def run_job(job: dict, args) -> int:
    task = job["task"]
    started = time.perf_counter()
    if task == "signature":
        B = _int_matrix(_require(job, "matrix", task), "matrix")
        sig = signature(B)
        print(f"signature = {sig}")
        _write(args.out, json.dumps({"version": JOB_VERSION, "task": task, "signature": sig}, indent=2, sort_keys=True) + "\n")
        return EXIT_OK

    if task == "tristram":
        V = _int_matrix(_require(job, "seifert", task), "seifert")
        p = _p(job, args.p, task)
        ks = [job["k"]] if "k" in job else list(range(1, p))
        values = {str(k): tristram_levine(V, p, k) for k in ks}
        for k, v in values.items():
            print(f"sigma(exp(2 pi i {k}/{p})) = {v}")
        result: dict[str, Any] = {"version": JOB_VERSION, "task": task, "p": p, "signatures": values}
        if "k" not in job:
            result["total_signature"] = total_signature(V, p)
            print(f"total signature = {result['total_signature']}")
        _write(args.out, json.dumps(result, indent=2, sort_keys=True) + "\n")
        return EXIT_OK

    datum = _datum(job, args.r)
    tangle = _tangle(job, task)

    if task in ("bracket", "invariant"):
        if not tangle.is_closed:
            raise InputError("bracket/invariant tasks need a closed diagram (strands: 0)", "cli.run")
        link = trace_components(tangle)
        fixed = _fixed(job)
        bracket = invariants.multi_bracket(link, datum, fixed, workers=args.workers)
        sigma, m, B = invariants.surgery_signature(link, fixed)
        result = {
            "version": JOB_VERSION,
            "task": task,
            "datum": datum.ident,
            "m": m,
            "sigma": sigma,
            "linking_matrix": B,
            "bracket": bracket.to_json(),
        }
        print(f"{{L}} = {bracket.to_text()}")
        if task == "invariant":
            t = invariants.tau(link, datum, fixed, workers=args.workers)
            i = datum.rank_D * t
            result["tau"] = t.to_json()
            result["I"] = i.to_json()
            print(f"tau = {t.to_text()}")
            print(f"I = {i.to_text()}")
        print(f"m = {m}, sigma = {sigma}  ({time.perf_counter() - started:.3f}s)")
        _write(args.out, json.dumps(result, indent=2, sort_keys=True) + "\n")
        return EXIT_OK

    p = _p(job, args.p, task)
    if task == "verify-periodic":
        kind = job.get("kind", "main-theorem")
        if kind not in PERIODIC_KINDS:
            raise InputError(f"kind must be one of {', '.join(PERIODIC_KINDS)}", "cli.run")
        verifier = {
            "bracket-lemma": invariants.verify_periodic_bracket,
            "main-theorem": invariants.verify_main_theorem,
            "tau-corollary": invariants.verify_tau_corollary,
        }[kind]
        cert = verifier(tangle, p, datum, negative_control=args.negative_control, workers=args.workers)
        if "seifert" in job and kind == "main-theorem":
            V = _int_matrix(job["seifert"], "seifert")
            cert.extra["branched_cover_check"] = invariants.check_branched_cover_exponent(cert, V, p)
    else:  # verify-trace
        coloring = _require(job, "coloring", task)
        if not isinstance(coloring, list) or not all(isinstance(c, int) for c in coloring):
            raise InputError("coloring must be a list of integers", "cli.run")
        cert = invariants.verify_trace_congruence(tangle, coloring, p, datum, negative_control=args.negative_control)

    for line in cert.summary():
        print(line)
    if "branched_cover_check" in cert.extra:
        print(f"  branched-cover exponent check: {cert.extra['branched_cover_check']}")
    print(f"  wall time: {cert.wall_time:.3f}s")
    _write(args.out, cert.to_json())
    if cert.member is None:
        return EXIT_INDETERMINATE
    if cert.vacuous and args.strict_vacuous:
        print("  vacuous ideal treated as indeterminate (--strict-vacuous)")
        return EXIT_INDETERMINATE
    return EXIT_OK if cert.member else EXIT_FALSE


def category_info(r: int, p: int | None = None) -> dict:
    datum = make_tl_datum(r)
    info = datum.describe()
    if p is not None:
        ideal = jp_generator(p, datum.dims, datum.field)
        info["J_p"] = ideal.to_json()
        info["J_p"]["is_p_only"] = list(ideal.g) == [c % p for c in _monic_phibar(datum, p)]
    return info


def _monic_phibar(datum: ModularDatum, p: int) -> list[int]:
    from .ring import fp_monic, fp_trim

    return fp_monic(fp_trim(list(datum.field.phi), p), p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="periodic-rt", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a JSON job file")
    run.add_argument("job")
    run.add_argument("--out", help="write the certificate / result JSON here")
    run.add_argument("--workers", type=int, default=1, help="processes for the coloring sum (output unchanged)")
    run.add_argument("--p", type=int, help="override the job's prime")
    run.add_argument("--r", type=int, help="override the job's datum r")
    run.add_argument("--strict-vacuous", action="store_true", help="exit 3 when J_p is the unit ideal")
    run.add_argument("--negative-control", action="store_true", help="perturb the difference by +1")

    cat = sub.add_parser("category", help="describe the Temperley-Lieb datum at r")
    cat.add_argument("r", type=int)
    cat.add_argument("--p", type=int, help="also report the J_p generator")
    cat.add_argument("--json", action="store_true", help="print JSON instead of text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "category":
            if args.r < 3:
                raise InputError("r must be >= 3", "cli.category_info")
            info = category_info(args.r, args.p)
            if args.json:
                print(json.dumps(info, indent=2, sort_keys=True))
            else:
                print(f"r = {info['r']}, field Q(zeta_{info['n']}), {info['colors']} colors")
                print(f"dims   = {info['dims']}")
                print(f"twists = {info['twists']}")
                print(f"D = {info['D']}  (D^2 = {info['D_squared']})")
                print(f"Delta = {info['Delta']}, kappa = {info['kappa']}")
                if "J_p" in info:
                    J = info["J_p"]
                    note = "vacuous (unit ideal)" if J["vacuous"] else ("J_p = (p)" if J["is_p_only"] else "proper")
                    print(f"J_{J['p']} generator over F_{J['p']}: {J['g']}  [{note}]")
            return EXIT_OK
        if args.workers < 1:
            raise InputError("--workers must be >= 1", "cli.run")
        job = load_job(args.job)
        return run_job(job, args)
    except Indeterminate as exc:
        print(f"indeterminate {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except ArtifactError as exc:
        print(f"error {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error [cli.run] {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
