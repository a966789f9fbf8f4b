"""asai-gamma: gamma tables, verification and golden files.

Exit codes: 0 success, 1 verification failure or golden mismatch, 2 usage or
config error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, fields

from . import asai, cuspidal, level_zero, verify
from .config import FORMATS, ConfigError, RunConfig
from .field_tower import TowerError, build_tower
from .matgroup import BudgetError, group_context

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ZERO_CUT = 1e-12


def num(x: float) -> float:
    """Round to 12 significant digits; tiny values become 0.0."""
    x = float(x)
    if abs(x) < ZERO_CUT:
        return 0.0
    return float(f"{x:.12g}")


@dataclass
class GammaRecord:
    q: int
    n: int
    theta_orbit: list
    z_log: int
    distinguished: bool
    multiplicity: int
    gamma_re: float
    gamma_im: float
    gamma_abs: float
    coset_sum: float
    route_a_vs_b_dev: float
    criteria_agreement: bool

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_dict(self) -> dict:
        return {c: getattr(self, c) for c in self.columns()}


# ---------------------------------------------------------------------------


def _tower(cfg: RunConfig):
    return build_tower(cfg.p, cfg.f, cfg.n, z_log=cfg.z, budget=cfg.budget)


def selected_reps(cfg: RunConfig):
    tw = _tower(cfg)
    if cfg.theta is None:
        return cuspidal.list_cuspidal(tw)
    reps = []
    for k in cfg.theta:
        rep = cuspidal.new_cuspidal(tw, k)
        if rep not in reps:
            reps.append(rep)
    return sorted(reps, key=lambda r: r.k)


def gamma_record(rep, ctx) -> GammaRecord:
    tw = rep.tower
    try:
        d = asai.distinction(rep, ctx)
        agree, mult, dist, cs = True, d.multiplicity, d.distinguished, d.coset_sum
    except asai.CriteriaDisagreement:
        agree = False
        mult = cuspidal.multiplicity(rep, "H", ctx)
        dist, cs = mult > 0, asai.coset_sum(rep, ctx)
    gb = asai.gamma_bessel(rep, ctx=ctx)
    fe = asai.gamma_fe(rep, ctx=ctx)
    return GammaRecord(
        q=tw.q,
        n=tw.n,
        theta_orbit=sorted(rep.orbit),
        z_log=tw.z_log,
        distinguished=dist,
        multiplicity=mult,
        gamma_re=num(gb.real),
        gamma_im=num(gb.imag),
        gamma_abs=num(abs(gb)),
        coset_sum=num(cs.real),
        route_a_vs_b_dev=num(abs(gb - fe.gamma)),
        criteria_agreement=agree,
    )


def cmd_gamma(cfg: RunConfig) -> list[GammaRecord]:
    ctx = group_context(_tower(cfg), cfg.budget)
    return [gamma_record(r, ctx) for r in selected_reps(cfg)]


def record_ok(rec: GammaRecord, tol: float) -> bool:
    if not rec.criteria_agreement or rec.route_a_vs_b_dev >= tol:
        return False
    if rec.distinguished:
        return abs(rec.gamma_re + 1) < tol and abs(rec.gamma_im) < tol
    return abs(rec.gamma_abs - rec.q ** (rec.n / 2)) < tol


def cmd_list(cfg: RunConfig) -> list[dict]:
    tw = _tower(cfg)
    ctx = group_context(tw, cfg.budget)
    rows = []
    for rep in selected_reps(cfg):
        rows.append(
            dict(
                q=tw.q,
                n=tw.n,
                theta_orbit=sorted(rep.orbit),
                dim=rep.dim,
                self_dual=cuspidal.is_self_dual(rep),
                distinguished=cuspidal.multiplicity(rep, "H", ctx) > 0,
            )
        )
    return rows


def cmd_verify(cfg: RunConfig) -> tuple[int, list[verify.Check]]:
    checks, _ = verify.run_all(_tower(cfg), cfg.seed)
    return (EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL), checks


def cmd_level_zero(cfg: RunConfig, lambdas: list[complex]) -> list[dict]:
    n, q = cfg.n, cfg.q
    c1 = q**n - 1
    out = []
    for lam in lambdas:
        res = level_zero.epsilon_check(n, lam, q, gamma_finite=-1, c1=c1)
        out.append(
            dict(
                n=n,
                q=q,
                lam=[num(lam.real), num(lam.imag)],
                L=repr(level_zero.asai_L(n, lam)),
                poles=len(level_zero.distinct_poles(level_zero.asai_L(n, lam))),
                vol_gamma=repr(level_zero.local_gamma_vol(n, lam, -1, c1, q)),
                vol_epsilon=repr(res.epsilon),
                c2=[num(res.c2_vol.real), num(res.c2_vol.imag)],
                c3=res.c3,
                identity_dev=num(res.eq3_deviation),
                closed_form=res.closed_form_matches,
            )
        )
    return out


# ---------------------------------------------------------------------------
# rendering


def _json_line(d: dict) -> str:
    return json.dumps(d, separators=(", ", ": "))


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(rows: list[dict], cfg: RunConfig, fmt: str | None = None) -> str:
    fmt = fmt or cfg.format
    buf = io.StringIO()
    cols = list(rows[0]) if rows else GammaRecord.columns()
    if fmt == "jsonl":
        buf.write(_json_line({"config": cfg.echo()}) + "\n")
        for r in rows:
            buf.write(_json_line(r) + "\n")
    elif fmt == "csv":
        buf.write("# config " + json.dumps(cfg.echo(), sort_keys=False) + "\n")
        buf.write(",".join(cols) + "\n")
        for r in rows:
            buf.write(",".join(_cell(r[c]) for c in cols) + "\n")
    else:
        cells = [cols] + [[_cell(r[c]) for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
        for row in cells:
            buf.write("  ".join(s.rjust(w) for s, w in zip(row, widths)).rstrip() + "\n")
    return buf.getvalue()


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# golden files


def golden_text(cfg: RunConfig) -> str:
    return render([r.as_dict() for r in cmd_gamma(cfg)], cfg, "jsonl")


def compare_golden(expected: str, actual: str, tol: float) -> list[str]:
    """Differences between two JSONL gamma tables; numbers compared to ``tol``."""
    a_lines, b_lines = expected.splitlines(), actual.splitlines()
    if len(a_lines) != len(b_lines):
        return [f"line count {len(a_lines)} != {len(b_lines)}"]
    problems = []
    for i, (la, lb) in enumerate(zip(a_lines, b_lines)):
        da, db = json.loads(la), json.loads(lb)
        if list(da) != list(db):
            problems.append(f"line {i + 1}: keys differ")
            continue
        for k in da:
            va, vb = da[k], db[k]
            if isinstance(va, float) or isinstance(vb, float):
                if not math.isclose(va, vb, rel_tol=0, abs_tol=tol):
                    problems.append(f"line {i + 1}: {k} {va} != {vb}")
            elif va != vb:
                problems.append(f"line {i + 1}: {k} {va!r} != {vb!r}")
    return problems


def cmd_golden(cfg: RunConfig, path: str, mode: str) -> tuple[int, list[str]]:
    text = golden_text(cfg)
    if mode == "write":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return EXIT_OK, [f"wrote {path}"]
    with open(path, encoding="utf-8") as fh:
        stored = fh.read()
    if stored == text:
        return EXIT_OK, ["byte-identical"]
    problems = compare_golden(stored, text, cfg.tol)
    return (EXIT_FAIL if problems else EXIT_OK), problems or ["within tolerance"]


# ---------------------------------------------------------------------------
# argument parsing


def _complex(s: str) -> complex:
    try:
        value = complex(s.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {s!r}") from None
    if value == 0:
        raise argparse.ArgumentTypeError("lambda must be nonzero")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="characteristic")
    common.add_argument("--f", type=int, default=1, help="q = p^f")
    common.add_argument("--n", type=int, default=2, choices=(2, 3))
    common.add_argument("--theta", type=int, nargs="+", help="exponents k of theta_k (one per orbit is enough)")
    common.add_argument("--z", type=int, help="log index of z in E minus F (defines psi_E)")
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--budget", type=int, default=10**7)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", help="output file (default stdout)")

    parser = _Parser(prog="asai-gamma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("list", parents=[common], help="cuspidal orbits with dimension and distinction")
    sub.add_parser("gamma", parents=[common], help="gamma table, one record per orbit")
    sub.add_parser("verify", parents=[common], help="run every invariant suite")
    lz = sub.add_parser("level-zero", parents=[common], help="level-zero L, gamma and epsilon factors")
    lz.add_argument("--lambda", dest="lambdas", type=_complex, nargs="+", default=[complex(2)])
    gold = sub.add_parser("golden", parents=[common], help="write or compare a golden gamma table")
    gold.add_argument("mode", choices=("write", "compare"))
    gold.add_argument("path")
    return parser


def config_from_args(args) -> RunConfig:
    default_fmt = "table" if args.command in ("list", "verify") else "jsonl"
    return RunConfig(
        p=args.p,
        f=args.f,
        n=args.n,
        theta=tuple(args.theta) if args.theta else None,
        z=args.z,
        tol=args.tol,
        budget=args.budget,
        seed=args.seed,
        format=args.format or default_fmt,
        out=args.out,
    ).validate()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "list":
            emit(render(cmd_list(cfg), cfg), cfg)
            return EXIT_OK
        if args.command == "gamma":
            recs = cmd_gamma(cfg)
            emit(render([r.as_dict() for r in recs], cfg), cfg)
            return EXIT_OK if all(record_ok(r, cfg.tol) for r in recs) else EXIT_FAIL
        if args.command == "verify":
            code, checks = cmd_verify(cfg)
            if cfg.format == "table":
                emit("".join(c.line() + "\n" for c in checks), cfg)
            else:
                rows = [
                    dict(suite=c.suite, check=c.name, value=c.value if isinstance(c.value, bool) else num(c.value),
                         tol=c.tol, passed=c.passed)
                    for c in checks
                ]
                emit(render(rows, cfg), cfg)
            return code
        if args.command == "level-zero":
            emit(render(cmd_level_zero(cfg, args.lambdas), cfg), cfg)
            return EXIT_OK
        if args.command == "golden":
            code, msgs = cmd_golden(cfg, args.path, args.mode)
            for m in msgs:
                print(m, file=sys.stderr if code else sys.stdout)
            return code
    except (ConfigError, TowerError, BudgetError, cuspidal.NotRegularError, FileNotFoundError) as exc:
        print(f"asai-gamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (asai.CriteriaDisagreement, level_zero.EpsilonError, cuspidal.NonIntegralError) as exc:
        print(f"asai-gamma: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
