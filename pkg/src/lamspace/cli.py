"""Command-line front end.

Every subcommand prints one report on standard output (JSON by default) and
sets the exit status: 0 when every verdict is Holds (or, for ``gallery``,
matches its claim), 2 when any verdict Fails, 3 when any is Inconclusive and
1 for usage or input errors.

Descriptors
-----------
weights (``--lambda``)
    ``cesaro``, ``power(2)``, ``geometric(2)``, ``riesz(<expr in k>)``,
    ``custom(1,3,4,8;arithmetic)``, ``rule(<expr in k>)``, ``builtin:<i>``;
    ``gallery`` also accepts ``all`` for every builtin family.
sequences (``--seq``)
    ``e``, ``theta``, ``constant(c)``, ``unit(n)``, ``harmonic``,
    ``alternating``, ``gallery(<id>)``, ``list(1,2,3;<tail>)``,
    ``expr(<expr in k>)``.
matrices (``--matrix``)
    ``zero``, ``identity``, ``summation``, ``lambda``, ``rule(<expr in n,k>)``,
    ``rows([[1],[1,1]];<tail>)``, ``one-row(<sequence>)``; general matrices
    need ``--structure general --width W``.

A job file (``lamspace run job.json``) is a JSON object with a ``command``
key and the long option names as keys, e.g.
``{"command": "gallery", "id": "cs-not-cs0", "lambda": "cesaro", "depth": 1024}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

import numpy as np

from . import matrix as mx
from . import sequences as seqs
from .basis import basis_expansion
from .classes import DEFAULT_CLASS_DEPTH, classical_class_check, lambda_class_check, verify_regularity
from .duals import dual_membership
from .errors import LamspaceError
from .expr import Expression, ExpressionError
from .spaces import WITNESS_IDS, SpaceTag, classify, gallery, verify_gallery
from .transform import inverse_lambda_transform, lambda_transform, s_operator
from .verdict import DEFAULT_DEPTH, DEFAULT_TOL, Conclusion, _jsonable
from .weights import LambdaWeights, builtin_families

EXIT_OK, EXIT_USAGE, EXIT_FAILS, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# descriptors ---------------------------------------------------------------------

_CALL = re.compile(r"^([A-Za-z][\w-]*)\((.*)\)$", re.S)


def _split_call(text: str) -> tuple[str, str | None]:
    text = text.strip()
    m = _CALL.match(text)
    if m:
        return m.group(1), m.group(2).strip()
    return text, None


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _list_and_tail(arg: str, what: str) -> tuple[str, str]:
    if ";" not in arg:
        raise UsageError(f"{what} needs an explicit tail rule after ';', e.g. {what}(1,2,3;zero)")
    body, tail = arg.rsplit(";", 1)
    return body, tail.strip()


def parse_lambda(text) -> LambdaWeights:
    if isinstance(text, str) and text.lstrip().startswith("{"):
        try:
            text = json.loads(text)
        except json.JSONDecodeError:
            raise UsageError(f"weights descriptor {text!r} is not valid JSON") from None
    if isinstance(text, dict):
        return _lambda_from_dict(text)
    name, arg = _split_call(str(text))
    if name.startswith("builtin:"):
        fams = builtin_families()
        try:
            return fams[int(name.split(":", 1)[1])]
        except (ValueError, IndexError):
            raise UsageError(f"builtin weights are numbered 0..{len(fams) - 1}") from None
    if name == "cesaro" and arg is None:
        return LambdaWeights.cesaro()
    if name in ("power", "geometric") and arg:
        value = _floats(arg.split("=")[-1])
        if len(value) != 1:
            raise UsageError(f"{name} takes one parameter")
        return LambdaWeights.power(value[0]) if name == "power" else LambdaWeights.geometric(value[0])
    if name == "riesz" and arg:
        expr = Expression(arg)
        return LambdaWeights.riesz(seqs.LazySequence(block=lambda m: expr.evaluate(k=np.arange(m)) *
                                                     np.ones(m), label=arg), label=arg)
    if name == "custom" and arg:
        body, tail = _list_and_tail(arg, "custom")
        return LambdaWeights.custom(_floats(body), tail)
    if name == "rule" and arg:
        expr = Expression(arg)
        if expr.uses_weights or "n" in expr.variables:
            raise UsageError("a weight rule may only use k")
        lam = LambdaWeights("custom", {"rule": arg}, lambda m: expr.evaluate(k=np.arange(m)) * np.ones(m))
        return lam
    raise UsageError(f"unknown weights {text!r}; try cesaro, power(2), geometric(2), riesz(1+k%3), "
                     "custom(1,3,4,8;arithmetic), rule(<expr>) or builtin:<i>")


def _lambda_from_dict(d: dict) -> LambdaWeights:
    fam = d.get("family")
    if fam == "cesaro":
        return LambdaWeights.cesaro()
    if fam == "power":
        return LambdaWeights.power(d["alpha"])
    if fam == "geometric":
        return LambdaWeights.geometric(d["r"])
    if fam == "custom" and "values" in d:
        return LambdaWeights.custom(d["values"], d.get("tail", ""))
    if fam == "custom" and "rule" in d:
        return parse_lambda(f"rule({d['rule']})")
    if fam == "riesz":
        return parse_lambda(f"riesz({d['q']})")
    raise UsageError(f"cannot build weights from {d!r}")


def parse_sequence(text: str, lam: LambdaWeights | None) -> seqs.LazySequence:
    name, arg = _split_call(str(text))
    if arg is None:
        simple = {"e": lambda: seqs.constant(1.0), "one": lambda: seqs.constant(1.0),
                  "theta": seqs.zero, "zero": seqs.zero, "harmonic": seqs.harmonic,
                  "alternating": seqs.alternating}
        if name in simple:
            return simple[name]()
        if name in WITNESS_IDS:
            name, arg = "gallery", name
        else:
            raise UsageError(f"unknown sequence {text!r}")
    if name == "constant":
        return seqs.constant(_floats(arg)[0])
    if name == "unit":
        return seqs.unit(int(arg))
    if name == "gallery":
        if lam is None:
            raise UsageError("gallery sequences need --lambda")
        return gallery(arg, lam).sequence
    if name == "list":
        body, tail = _list_and_tail(arg, "list")
        return seqs.from_list(_floats(body), tail, label=f"list({arg})")
    if name == "expr":
        expr = Expression(arg)
        if "n" in expr.variables:
            raise UsageError("a sequence expression may only use k")
        return seqs.LazySequence(block=lambda m: expr.evaluate(lam, k=np.arange(m)) * np.ones(m), label=arg)
    raise UsageError(f"unknown sequence {text!r}")


def parse_matrix(text: str, lam: LambdaWeights | None, structure: str, width: int | None) -> mx.TriangleMatrix:
    name, arg = _split_call(str(text))
    if arg is None:
        if name == "zero":
            return mx.zero_matrix()
        if name == "identity":
            return mx.identity_matrix()
        if name == "summation":
            return mx.summation_matrix()
        if name == "lambda":
            if lam is None:
                raise UsageError("the lambda matrix needs --lambda")
            return mx.weighted_mean_matrix(lam)
        raise UsageError(f"unknown matrix {text!r}")
    if name == "rule":
        expr = Expression(arg)
        return mx.from_entry_rule(lambda n, k: expr.evaluate(lam, n=n, k=k), structure=structure,
                                  width=width, label=arg)
    if name == "rows":
        body, tail = _list_and_tail(arg, "rows")
        try:
            rows = json.loads(body)
        except json.JSONDecodeError:
            raise UsageError("rows(...) takes a JSON list of lists before ';'") from None
        return mx.from_rows(rows, tail=tail, structure=structure, width=width, label=f"rows({arg})")
    if name == "one-row":
        if width is None:
            raise UsageError("one-row matrices need --width")
        return mx.one_row_matrix(parse_sequence(arg, lam), width)
    raise UsageError(f"unknown matrix {text!r}")


# report helpers ---------------------------------------------------------------

def _exit_for(conclusions) -> int:
    conclusions = list(conclusions)
    if any(c is Conclusion.FAILS for c in conclusions):
        return EXIT_FAILS
    if any(c is Conclusion.INCONCLUSIVE for c in conclusions):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _job(args, keys) -> dict:
    job = {"command": args.command}
    for k in keys:
        attr = "lambda_" if k == "lambda" else k.replace("-", "_")
        v = getattr(args, attr, None)
        if v is not None:
            job[k] = v
    return job


def _lam_or_none(args):
    return parse_lambda(args.lambda_) if getattr(args, "lambda_", None) else None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _no_csv(args):
    if getattr(args, "format", "json") == "csv":
        raise UsageError(f"csv output is only available for transform and basis, not {args.command}")


# subcommands ------------------------------------------------------------------

def cmd_transform(args):
    lam = parse_lambda(args.lambda_)
    x = parse_sequence(args.seq, lam)
    op = {"forward": lambda_transform, "inverse": inverse_lambda_transform, "s": s_operator}[args.op]
    values = op(lam, x).take(args.depth)
    if args.format == "csv":
        return _csv(["n", "value"], [[i, repr(float(v))] for i, v in enumerate(values)]), EXIT_OK
    report = {"job": _job(args, ["lambda", "seq", "op", "depth", "format"]),
              "weights": lam.descriptor(), "values": values.tolist()}
    return report, EXIT_OK


def cmd_classify(args):
    _no_csv(args)
    lam = _lam_or_none(args)
    x = parse_sequence(args.seq, lam)
    verdicts = []
    for space in args.space:
        tag = SpaceTag.parse(space)
        verdicts.append(classify(x, tag, lam if tag.is_lambda else None, args.depth, args.tol))
    report = {"job": _job(args, ["lambda", "seq", "space", "depth", "tol"]),
              "verdicts": [v.to_dict() for v in verdicts]}
    return report, _exit_for(v.conclusion for v in verdicts)


def cmd_gallery(args):
    _no_csv(args)
    lams = builtin_families() if args.lambda_ == "all" else [parse_lambda(args.lambda_)]
    ids = WITNESS_IDS if args.id == "all" else [args.id]
    reports = [verify_gallery(gallery(w, lam), lam, args.depth, args.tol) for lam in lams for w in ids]
    ok = all(r["ok"] for r in reports)
    report = {"job": _job(args, ["id", "lambda", "depth", "tol"]), "ok": ok, "witnesses": reports}
    return report, EXIT_OK if ok else EXIT_FAILS


def cmd_basis(args):
    lam = parse_lambda(args.lambda_)
    x = parse_sequence(args.seq, lam)
    rows = []
    membership = None
    for m in args.m:
        exp = basis_expansion(lam, x, m, probe_depth=args.probe_depth, check_membership=membership is None,
                              tol=args.tol)
        if membership is None:
            membership = exp.in_space
        rows.append({"m": m, "residual_norm": exp.residual_norm, "probe_depth": exp.probe_depth})
    if args.format == "csv":
        return _csv(["m", "residual_norm", "probe_depth"],
                    [[r["m"], repr(r["residual_norm"]), r["probe_depth"]] for r in rows]), EXIT_OK
    report = {"job": _job(args, ["lambda", "seq", "m", "probe-depth", "tol"]),
              "in_space": membership.to_dict(), "residual_meaningful": membership.holds, "residuals": rows}
    return report, _exit_for([membership.conclusion])


def cmd_dual(args):
    _no_csv(args)
    lam = parse_lambda(args.lambda_)
    a = parse_sequence(args.seq, lam)
    v = dual_membership(lam, a, args.dual, args.depth, args.subset_depth, args.tol)
    report = {"job": _job(args, ["lambda", "seq", "dual", "depth", "subset-depth", "tol"]),
              "weights": lam.descriptor(), "verdict": v.to_dict()}
    return report, _exit_for([v.conclusion])


def cmd_matclass(args):
    _no_csv(args)
    lam = _lam_or_none(args)
    A = parse_matrix(args.matrix, lam, args.structure, args.width)
    source = SpaceTag.parse(args.source)
    if source.is_lambda:
        if lam is None:
            raise UsageError(f"{source} needs --lambda")
        cert = lambda_class_check(lam, A, source, args.target, args.depth, args.tol, args.subset_depth,
                                  args.row_quantity)
    else:
        cert = classical_class_check(A, source, args.target, args.depth, args.tol, args.subset_depth)
    report = {"job": _job(args, ["lambda", "matrix", "structure", "width", "source", "target", "depth",
                                 "subset-depth", "tol", "row-quantity"]),
              "certificate": cert.to_dict()}
    return report, _exit_for([cert.overall])


def cmd_regularity(args):
    _no_csv(args)
    lam = parse_lambda(args.lambda_)
    cert = verify_regularity(lam, args.depth, args.tol)
    report = {"job": _job(args, ["lambda", "depth", "tol"]), "certificate": cert.to_dict()}
    return report, _exit_for([cert.overall])


# argument parsing ----------------------------------------------------------------

def _depth(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("depth must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lamspace", description="Weighted-mean series spaces toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, lam_required=True):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--lambda", dest="lambda_", required=lam_required, help="weights descriptor")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        return sp

    sp = add("transform", cmd_transform, "emit Lambda(x), its inverse or S(x)")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--op", choices=("forward", "inverse", "s"), default="forward")
    sp.add_argument("--depth", type=_depth, default=16)

    sp = add("classify", cmd_classify, "space membership verdicts", lam_required=False)
    sp.add_argument("--seq", required=True)
    sp.add_argument("--space", action="append", required=True)
    sp.add_argument("--depth", type=_depth, default=DEFAULT_DEPTH)

    sp = add("gallery", cmd_gallery, "build and verify separating witnesses")
    sp.add_argument("--id", required=True, choices=(*WITNESS_IDS, "all"))
    sp.add_argument("--depth", type=_depth, default=1024)

    sp = add("basis", cmd_basis, "truncated basis expansion residuals")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--m", type=int, nargs="+", default=[8, 16, 32, 64])
    sp.add_argument("--probe-depth", type=_depth, default=None)

    sp = add("dual", cmd_dual, "alpha/beta/gamma dual membership")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--dual", required=True, help="m1..m5 or alpha|beta|gamma(cs|cs0|bs)")
    sp.add_argument("--depth", type=_depth, default=DEFAULT_DEPTH)
    sp.add_argument("--subset-depth", type=int, default=10)

    sp = add("matclass", cmd_matclass, "matrix class certificate", lam_required=False)
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--structure", choices=mx.STRUCTURES, default="lower-triangular")
    sp.add_argument("--width", type=int, default=None)
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--depth", type=_depth, default=DEFAULT_CLASS_DEPTH)
    sp.add_argument("--subset-depth", type=int, default=10)
    sp.add_argument("--row-quantity", choices=("row-limit", "row-sum"), default="row-limit")

    sp = add("regularity", cmd_regularity, "Silverman-Toeplitz check of the weighted-mean matrix")
    sp.add_argument("--depth", type=_depth, default=DEFAULT_CLASS_DEPTH)

    sp = sub.add_parser("run", help="run a JSON job file")
    sp.add_argument("job")
    return p


def job_to_argv(job: dict) -> list[str]:
    """Translate a job object into command-line arguments."""
    if not isinstance(job, dict) or "command" not in job:
        raise UsageError("a job file must hold a JSON object with a 'command' key")
    argv = [str(job["command"])]
    for key, value in job.items():
        if key == "command":
            continue
        flag = "--" + key.replace("_", "-")
        if isinstance(value, list) and key in ("space", "m"):
            if key == "space":
                for v in value:
                    argv += [flag, str(v)]
            else:
                argv += [flag, *map(str, value)]
        elif isinstance(value, dict):
            argv += [flag, json.dumps(value, sort_keys=True)]
        else:
            argv += [flag, str(value)]
    return argv


def render(report) -> str:
    if isinstance(report, str):
        return report
    return json.dumps(_jsonable(report), sort_keys=True, indent=2, allow_nan=False) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "run":
            try:
                with open(args.job, encoding="utf-8") as fh:
                    job = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read job file {args.job!r}: {exc}") from None
            inner = job_to_argv(job)
            if inner[0] == "run":
                raise UsageError("job files cannot nest 'run'")
            return main(inner)
        report, code = args.func(args)
    except (UsageError, ExpressionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LamspaceError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
