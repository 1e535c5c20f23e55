"""Command-line front end: ``gpst classify|simulate|search|spectrum|verify|cyclo|automorphism``.

Every command writes JSON lines (or CSV where noted) to stdout or ``--output``.
Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import spectral, walk_sim
from .classifier import ClassificationRefused, classify, nonintegrality_witness
from .cyclotomic import bosma_basis, crt_decompose, delta_report, negation_reduction
from .graph_core import CirculantSpec, GraphError, build_circulant, build_walk_matrices, vertex_type_state
from .pst_engine import InconsistencyError, search_min_pst
from .serialize import dumps
from .suites import SUITES, run_suite
from .symmetry import NotAnAutomorphismError, automorphism, parse_permutation, verify_intertwining

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INCONSISTENT = 0, 1, 2, 3

ENV_PREFIX = "GPST_"
DEFAULTS: dict[str, Any] = {
    "pst_tol": walk_sim.PST_TOL,
    "group_tol": spectral.GROUP_TOL,
    "support_tol": spectral.SUPPORT_TOL,
    "tau_max": None,
    "jobs": 1,
    "seed": 0,
}
_TYPES = {"pst_tol": float, "group_tol": float, "support_tol": float, "tau_max": int, "jobs": int, "seed": int}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    pst_tol: float = walk_sim.PST_TOL
    group_tol: float = spectral.GROUP_TOL
    support_tol: float = spectral.SUPPORT_TOL
    tau_max: int | None = None
    output: str | None = None
    fmt: str = "json"
    jobs: int = 1
    seed: int = 0

    def __post_init__(self):
        for name in ("pst_tol", "group_tol", "support_tol"):
            if not getattr(self, name) > 0:
                raise UsageError(f"{name} must be positive")
        if self.tau_max is not None and self.tau_max < 1:
            raise UsageError("tau-max must be at least 1")
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1")
        if self.fmt not in ("json", "csv"):
            raise UsageError("format must be json or csv")


def resolve_config(args: argparse.Namespace, env: dict[str, str] | None = None) -> RunConfig:
    """Flags beat ``GPST_*`` environment variables, which beat the defaults."""
    env = os.environ if env is None else env
    values = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
            continue
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None and raw != "":
            try:
                values[key] = _TYPES[key](raw)
            except ValueError:
                raise UsageError(f"{ENV_PREFIX}{key.upper()}={raw!r} is not a valid {_TYPES[key].__name__}")
        else:
            values[key] = default
    params = {k: v for k, v in vars(args).items() if k not in DEFAULTS and k not in ("output", "format", "command", "handler")}
    return RunConfig(command=args.command, params=params, output=args.output,
                     fmt=getattr(args, "format", None) or "json", **values)


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _choice(text: str) -> tuple[int, list[int]]:
    p, _, rest = text.partition("=")
    try:
        return int(p), _int_list(rest)
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"{text!r} should look like P=I,J,...")


def _spec(cfg: RunConfig) -> CirculantSpec:
    try:
        return CirculantSpec.from_generators(cfg.params["n"], cfg.params["s"])
    except GraphError as exc:
        raise UsageError(str(exc))


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _jsonl(records: Sequence[Any]) -> str:
    return "".join(dumps(r) + "\n" for r in records)


def cmd_classify(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    try:
        verdict = classify(spec, cfg.params["x"] % spec.n)
    except ClassificationRefused as exc:
        raise UsageError(str(exc))
    _emit(cfg, _jsonl([{"n": spec.n, "s": sorted(spec.s), **verdict.to_dict()}]))
    return EXIT_OK


def cmd_search(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    tau_max = cfg.tau_max or 4 * spec.n
    verdict = search_min_pst(build_circulant(spec), cfg.params["x"] % spec.n, tau_max, spec,
                             prune=not cfg.params["all_targets"], pst_tol=cfg.pst_tol)
    _emit(cfg, _jsonl([{"n": spec.n, "s": sorted(spec.s), "tau_max": tau_max, **verdict.to_dict()}]))
    return EXIT_OK


def cmd_simulate(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    if cfg.tau_max is None:
        raise UsageError("--tau-max is required")
    src, dst = cfg.params["source"], cfg.params["target"]
    if not (0 <= src < spec.n and 0 <= dst < spec.n):
        raise UsageError("--from/--to must be vertices of the graph")
    g = build_circulant(spec)
    wm = build_walk_matrices(g)
    trace = walk_sim.fidelity_trace(wm.U, vertex_type_state(g, src), vertex_type_state(g, dst),
                                    cfg.tau_max, cfg.pst_tol)
    if cfg.fmt == "csv":
        _emit(cfg, trace.to_csv())
    else:
        rows = [{"tau": t, "fidelity": f, "phase": trace.phases.get(t)}
                for t, f in zip(trace.times, trace.fidelities)]
        _emit(cfg, _jsonl(rows))
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    _emit(cfg, spectral.eigen_table_csv(spec))
    return EXIT_OK


def _summary_csv(records: list[dict[str, Any]]) -> str:
    counts: dict[tuple[str, str], list[int]] = {}
    for r in records:
        if r["suite"] == "summary":
            continue
        c = counts.setdefault((r["suite"], r["kind"]), [0, 0])
        c[0] += 1
        c[1] += not r["pass"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "kind", "records", "failed"])
    for (suite, kind), (total, failed) in sorted(counts.items()):
        w.writerow([suite, kind, total, failed])
    return buf.getvalue()


def cmd_verify(cfg: RunConfig) -> int:
    records = run_suite(cfg.params["suite"], cfg.params["n_max"], cfg.seed, cfg.jobs)
    _emit(cfg, _jsonl(records))
    if cfg.params.get("csv"):
        with open(cfg.params["csv"], "w", encoding="utf-8", newline="") as fh:
            fh.write(_summary_csv(records))
    return EXIT_OK if records[-1]["pass"] else EXIT_MISMATCH


def cmd_cyclo(cfg: RunConfig) -> int:
    p = cfg.params
    op = p["op"]
    try:
        if op == "basis":
            choices = {2: p["a2"], 3: p["a3"]}
            choices.update(dict(p["choice"] or []))
            choices = {q: tuple(v) for q, v in choices.items() if v is not None}
            basis = bosma_basis(p["n"], choices)
            rec = {"n": basis.n, "choices": {str(q): list(c) for q, c in basis.choices},
                   "exponents": sorted(basis.exponents), "size": len(basis.exponents)}
        elif op == "decompose":
            dec = crt_decompose(p["n"], p["x"])
            rec = {"n": dec.n, "x": dec.x, "parts": list(dec.parts),
                   "pi_theta": {str(q): list(v) for q, v in dec.pi_theta().items()}}
            if p["n"] % 4 == 0 or p["n"] % 3 == 0:
                neg = negation_reduction(p["n"], p["x"])
                rec["negation"] = {"negated": {str(q): list(v) for q, v in neg["negated"].items()},
                                   "inverse_pi3": neg["inverse_pi3"]}
        else:
            rep = delta_report(p["l"], p["a"], p["b"])
            rec = {"l": rep.l, "a": rep.a, "b": rep.b, "delta": str(rep.value), "integral": rep.integral,
                   "conductor": rep.conductor, "branch": rep.branch,
                   "basis_exponents": list(rep.basis.exponents),
                   "coordinates": list(rep.coordinates)}
            if not rep.integral and rep.a + rep.b != rep.l:
                rec["witness"] = nonintegrality_witness(rep.l, rep.a, rep.b)["non_integer"]
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(cfg, _jsonl([rec]))
    return EXIT_OK


def cmd_automorphism(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    g = build_circulant(spec)
    try:
        aut = automorphism(g, parse_permutation(cfg.params["perm"]))
    except (ValueError, NotAnAutomorphismError) as exc:
        raise UsageError(str(exc))
    dev = verify_intertwining(g, aut)
    _emit(cfg, _jsonl([{"n": spec.n, "s": sorted(spec.s), "mapping": list(aut.mapping),
                        "arc_mapping": list(aut.arc_map.mapping), "intertwining_dev": dev}]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpst", description="Perfect state transfer for Grover walks on circulants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, graph=True):
        if graph:
            p.add_argument("--n", type=int, required=True, help="order of the cyclic group")
            p.add_argument("--s", type=_int_list, required=True, help="connection set generators, e.g. 1,5")
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--pst-tol", dest="pst_tol", type=float)
        p.add_argument("--tol", dest="pst_tol", type=float, help="alias of --pst-tol")
        p.add_argument("--group-tol", dest="group_tol", type=float)
        p.add_argument("--support-tol", dest="support_tol", type=float)
        return p

    p = common(sub.add_parser("classify", help="theorem-based verdict"))
    p.add_argument("--x", type=int, default=0)
    p.set_defaults(handler=cmd_classify)

    p = common(sub.add_parser("search", help="brute-force minimum PST time"))
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--tau-max", dest="tau_max", type=int)
    p.add_argument("--all-targets", action="store_true", help="do not restrict to the antipodal vertex")
    p.set_defaults(handler=cmd_search)

    p = common(sub.add_parser("simulate", help="fidelity trace between two vertex states"))
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--tau-max", dest="tau_max", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(handler=cmd_simulate)

    p = common(sub.add_parser("spectrum", help="eigenvalue table as CSV"))
    p.set_defaults(handler=cmd_spectrum)

    p = common(sub.add_parser("verify", help="run a verification suite"), graph=False)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=16)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--csv", help="also write a CSV summary here")
    p.set_defaults(handler=cmd_verify)

    p = common(sub.add_parser("cyclo", help="cyclotomic utilities"), graph=False)
    p.add_argument("op", choices=("basis", "decompose", "delta"))
    p.add_argument("--n", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--a2", type=_int_list)
    p.add_argument("--a3", type=_int_list)
    p.add_argument("--choice", type=_choice, action="append", help="P=I,J,... for another prime")
    p.add_argument("--l", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(handler=cmd_cyclo)

    p = common(sub.add_parser("automorphism", help="check a vertex permutation against the walk"))
    p.add_argument("--perm", required=True, help="images in one-line notation, e.g. 1,2,0")
    p.set_defaults(handler=cmd_automorphism)
    return parser


_REQUIRED = {"basis": ("n",), "decompose": ("n", "x"), "delta": ("l", "a", "b")}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "cyclo":
            missing = [k for k in _REQUIRED[args.op] if getattr(args, k) is None]
            if missing:
                parser.error(f"cyclo {args.op} needs " + ", ".join("--" + k for k in missing))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return args.handler(cfg)
    except UsageError as exc:
        print(f"gpst: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"gpst: inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
