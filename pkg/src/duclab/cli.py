"""Command-line front end: ``duclab {table,spacetime,verify,mbqc-run,schedule-check}``."""
from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Callable, Iterable

import numpy as np

from . import clifford, lie, mbqc, polyqca, universality
from .errors import CapExhausted, DomainError, ResourceGuardError
from .pauli import PauliWord
from .schedules import PRESETS, LambdaSchedule, explain, preset
from .universality import CheckResult

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
SUITES = (
    "lemma1", "lemma2", "lemma3", "theorem1", "recurrence", "dual-unitarity",
    "byproduct", "symmetry", "injectivity", "entropy", "matchgate", "stabilizers",
)


class UsageError(Exception):
    pass


def parse_range(text: str | None, default: Iterable[int] = ()) -> list[int]:
    """``"3"``, ``"2..7"`` or ``"3,7,11"``."""
    if text is None:
        return list(default)
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out += list(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _ks(args, default: Iterable[int]) -> list[int]:
    if args.k is not None and args.k_range is not None:
        raise UsageError("give --k or --k-range, not both")
    if args.k is not None:
        return [args.k]
    return parse_range(args.k_range, default)


def _schedule_for(args, k: int) -> LambdaSchedule:
    if args.schedule_file:
        sch = LambdaSchedule.load(args.schedule_file)
        if sch.k != k:
            raise UsageError(f"schedule file is for k={sch.k}, requested k={k}")
        return sch
    return preset(args.preset, k)


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit_explain(args, out) -> None:
    if getattr(args, "explain", False) and not args.schedule_file:
        out.write(f"# {explain(args.preset)}\n")


# table ------------------------------------------------------------------------
def cmd_table(args) -> int:
    ks = _ks(args, range(2, 8))
    rows, status = [], EXIT_OK
    for k in ks:
        try:
            res = lie.closure_dim(k, _schedule_for(args, k), args.period_cap, args.closure_cap)
            rows.append([str(k), str(res.period), str(res.dimension), res.label.name])
        except CapExhausted as exc:
            rows.append([str(k), "exhausted", exc.what, f"cap={exc.cap}"])
            status = EXIT_CAP
    header = ["k", "p_k", "dim", "label"]
    with _output(args.out) as out:
        _emit_explain(args, out)
        if args.pretty:
            widths = [max(len(r[c]) for r in rows + [header]) for c in range(4)]
            for r in [header] + rows:
                out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")
        else:
            for r in [header] + rows:
                out.write("\t".join(r) + "\n")
    return status


# spacetime ----------------------------------------------------------------------
def _write_pgm(path: str, diagram: clifford.SpacetimeDiagram) -> None:
    shade = {"I": 255, "X": 170, "Z": 85, "Y": 0}
    with open(path, "w") as fh:
        fh.write(f"P2\n{diagram.period} {diagram.k}\n255\n")
        for i in range(1, diagram.k + 1):
            fh.write(" ".join(str(shade[diagram.cell(ell, i)]) for ell in range(diagram.period)) + "\n")


def cmd_spacetime(args) -> int:
    if args.k is None:
        raise UsageError("spacetime needs --k")
    diagram = clifford.spacetime(args.k, _schedule_for(args, args.k), args.period_cap)
    with _output(args.out) as out:
        _emit_explain(args, out)
        if args.symmetry:
            out.write(clifford.symmetry_row(diagram) + "\n")
        out.write(clifford.render(diagram) + "\n")
    if args.pgm:
        _write_pgm(args.pgm, diagram)
    return EXIT_OK


# verify -------------------------------------------------------------------------
def _suite_lemma1(args) -> list[CheckResult]:
    return [
        CheckResult("lemma1", k, universality.check_lemma1(universality.lemma2_instance(k)))
        for k in _ks(args, (7, 11, 15))
    ]


def _suite_lemma2(args) -> list[CheckResult]:
    out = []
    for k in _ks(args, (3, 7, 11, 15)):
        m = (k + 1) // 4
        idx = universality.lemma2_index_set(k)
        d = universality.all_ones_diagram(k)
        nonzero = all(not universality.tilde(d, ell).is_zero for ell in idx)
        out.append(CheckResult("lemma2-index-set", k, len(idx) == 6 * m + 1 and nonzero, {"size": len(idx)}))
        out.append(CheckResult("frozen-pattern", k, universality.frozen_pattern_check(k)))
        if k >= 7:
            out.append(CheckResult("lemma1", k, universality.check_lemma1(universality.lemma2_instance(k))))
    return out


def _suite_lemma3(args) -> list[CheckResult]:
    out = []
    for r in parse_range(args.r, range(2, 6)):
        rep = polyqca.verify_lemma3(r, args.period_cap)
        modulus = 2 ** (r + 1)
        extra = polyqca.cayley_hamilton_check(modulus) and polyqca.gamma_matches_trace(modulus)
        out.append(CheckResult("lemma3", rep.k, rep.passed and extra, {"r": r, "period": rep.period}))
    return out


def _suite_theorem1(args) -> list[CheckResult]:
    out = []
    for k in _ks(args, (3, 4, 7, 8, 11, 15)):
        m, ok, _ = universality.verify_theorem1(k)
        out.append(CheckResult("theorem1", k, ok, {"m": m, "qubits": 3 * m}))
    return out


def _suite_recurrence(args) -> list[CheckResult]:
    out = []
    for k in _ks(args, range(3, 32)):
        for r in range(0, k.bit_length() + 1):
            if 2**r < k:
                out.append(CheckResult("recurrence", k, universality.check_recurrence(k, r), {"r": r}))
        if k >= 7 and (k + 1) % 4 == 0:
            out.append(CheckResult("block-repetition", k, universality.block_repetition_check(k)))
    return out


def _suite_dual(args) -> list[CheckResult]:
    n, k = args.N or 4, _ks(args, (4,))[0]
    rng = np.random.default_rng(args.seed)
    sch = _schedule_for(args, k)
    worst = 0.0
    for _ in range(args.trials or 100):
        th = rng.uniform(0, 2 * np.pi, n)
        s = rng.integers(0, 2, n)
        a = mbqc.sideways_amplitude(n, k, sch, th, s)
        b = mbqc.physical_amplitude(n, k, sch, th, s)
        worst = max(worst, abs(a - b))
    return [CheckResult("dual-unitarity", k, worst < 1e-10, {"N": n, "max_err": f"{worst:.2e}"})]


def _suite_byproduct(args) -> list[CheckResult]:
    n, k = args.N or 9, _ks(args, (3,))[0]
    sch = _schedule_for(args, k)
    worst_f, worst_p = 1.0, 0.0
    for t in range(args.trials or 200):
        seed = args.seed + t
        th = np.random.default_rng(10_000 + seed).uniform(0, 2 * np.pi, n)
        rec, _ = mbqc.adaptive_run(n, k, sch, th, seed)
        f, e = mbqc.trajectory_check(n, k, sch, rec)
        worst_f, worst_p = min(worst_f, f), max(worst_p, e)
    ok = worst_f >= 1 - 1e-8 and worst_p < 1e-10
    return [CheckResult("byproduct", k, ok, {"N": n, "min_fidelity": f"{worst_f:.12f}"})]


def _suite_symmetry(args) -> list[CheckResult]:
    out = []
    for k in _ks(args, (1, 2)):
        sch = _schedule_for(args, k)
        p = clifford.spacetime(k, sch).period
        n = args.N or 2 * p
        out.append(CheckResult("symmetry", k, mbqc.symmetry_check(n, k, sch), {"N": n}))
        out.append(CheckResult("projective-rep", k, mbqc.projective_rep_check(k)))
    return out


def _suite_injectivity(args) -> list[CheckResult]:
    out = []
    for k in _ks(args, (1, 2, 3)):
        sch = _schedule_for(args, k)
        span = mbqc.injectivity_span(k, sch)
        ok = span == 4**k and mbqc.multiplicative_generation(k, sch)
        out.append(CheckResult("injectivity", k, ok, {"span": span}))
    return out


def _suite_entropy(args) -> list[CheckResult]:
    pairs = [(args.N, args.k)] if args.N and args.k else [(8, 1), (10, 2), (12, 3)]
    out = []
    for n, k in pairs:
        s = mbqc.half_chain_entropy(mbqc.prepare_resource(n, k, _schedule_for(args, k)))
        out.append(CheckResult("entropy", k, abs(s - k) < 1e-8 / np.log(2), {"N": n, "S": f"{s:.10f}"}))
    return out


def _suite_matchgate(args) -> list[CheckResult]:
    return [
        CheckResult("matchgate", k, mbqc.matchgate_class_check(k), {"dim": (k + 1) * (2 * k + 1)})
        for k in _ks(args, range(2, 8))
    ]


def _suite_stabilizers(args) -> list[CheckResult]:
    out = []
    n = args.N or 8
    for k in _ks(args, (1, 2, 3)):
        sch = _schedule_for(args, k)
        state = mbqc.prepare_resource(n, k, sch)
        out.append(CheckResult("stabilizers", k, mbqc.stabilizer_check(state, n, k, sch), {"N": n}))
    return out


SUITE_FUNCS: dict[str, Callable] = {
    "lemma1": _suite_lemma1, "lemma2": _suite_lemma2, "lemma3": _suite_lemma3,
    "theorem1": _suite_theorem1, "recurrence": _suite_recurrence,
    "dual-unitarity": _suite_dual, "byproduct": _suite_byproduct,
    "symmetry": _suite_symmetry, "injectivity": _suite_injectivity,
    "entropy": _suite_entropy, "matchgate": _suite_matchgate, "stabilizers": _suite_stabilizers,
}


def cmd_verify(args) -> int:
    results = SUITE_FUNCS[args.suite](args)
    with _output(args.out) as out:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# mbqc-run -----------------------------------------------------------------------
def cmd_mbqc_run(args) -> int:
    if args.N is None or args.k is None:
        raise UsageError("mbqc-run needs --N and --k")
    sch = _schedule_for(args, args.k)
    if args.angles:
        angles = [float(a) for a in args.angles.split(",")]
        if len(angles) != args.N:
            raise UsageError("need exactly N angles")
    else:
        angles = list(np.random.default_rng(args.seed).uniform(0, 2 * np.pi, args.N))
    rec, dist = mbqc.adaptive_run(args.N, args.k, sch, angles, args.seed)
    fid, perr = mbqc.trajectory_check(args.N, args.k, sch, rec)
    with _output(args.out) as out:
        out.write(f"# seed {args.seed}\n")
        for line in rec.log_lines():
            out.write(line + "\n")
        out.write(f"# boundary_word {rec.boundary_word.to_string(with_phase=False)}\n")
        out.write(f"# readout {mbqc.format_bits(rec.readout, args.k)}\n")
        out.write(f"# fidelity {fid:.12f}\n")
        for bits, p in dist.items():
            out.write(f"{bits}\t{p:.12g}\n")
    return EXIT_OK if fid >= 1 - 1e-8 and perr < 1e-10 else EXIT_FAIL


# schedule-check ---------------------------------------------------------------------
def cmd_schedule_check(args) -> int:
    if args.schedule_file:
        sch = LambdaSchedule.load(args.schedule_file)
    else:
        if args.k is None:
            raise UsageError("schedule-check needs --schedule-file or --k with --preset")
        sch = preset(args.preset, args.k)
    p = clifford.schedule_period(sch.k, sch, args.period_cap)
    with _output(args.out) as out:
        _emit_explain(args, out)
        out.write(sch.dumps())
        out.write(f"# period {p}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--k-range", help="e.g. 2..7 or 3,7,11")
    src = common.add_mutually_exclusive_group()
    src.add_argument("--preset", default="a", choices=sorted(PRESETS) + ["all-ones", "all-zeros"])
    src.add_argument("--schedule-file")
    common.add_argument("--boundary", choices=("open", "periodic"), default="open")
    common.add_argument("--period-cap", type=int, default=clifford.DEFAULT_PERIOD_CAP)
    common.add_argument("--closure-cap", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out")
    common.add_argument("--pretty", action="store_true")
    common.add_argument("--explain", action="store_true", help="print the preset's lambda definition")

    parser = argparse.ArgumentParser(prog="duclab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="period / algebra table").set_defaults(func=cmd_table)
    sp = sub.add_parser("spacetime", parents=[common], help="render the evolution of Z_1")
    sp.add_argument("--symmetry", action="store_true", help="prepend the I/Z symmetry row")
    sp.add_argument("--pgm", help="also write a PGM image")
    sp.set_defaults(func=cmd_spacetime)
    vp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vp.add_argument("suite", choices=SUITES)
    vp.add_argument("--r", help="r range for lemma3, e.g. 2..5")
    vp.add_argument("--N", type=int)
    vp.add_argument("--trials", type=int)
    vp.set_defaults(func=cmd_verify)
    mp = sub.add_parser("mbqc-run", parents=[common], help="one adaptive MBQC trajectory")
    mp.add_argument("--N", type=int)
    mp.add_argument("--angles", help="comma-separated angles in radians")
    mp.set_defaults(func=cmd_mbqc_run)
    sub.add_parser("schedule-check", parents=[common], help="validate a schedule").set_defaults(
        func=cmd_schedule_check
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, KeyError, ValueError) as exc:
        print(f"duclab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExhausted, ResourceGuardError) as exc:
        print(f"duclab: cap reached: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
