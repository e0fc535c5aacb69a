"""Command-line front end: ``reject-lab {run,sweep,bounds,redundancy,oracle}``.

Exit codes: 0 success, 1 other library error, 2 unusable configuration,
3 a cost matrix, threshold pair or model parameter violates a constraint.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .bayes_rule import (
    CostMatrix,
    OutcomeReport,
    bayes_classify,
    bayes_regions,
    imbalance_sweep,
    thresholds_from_costs,
)
from .cost_analysis import equivalence_class
from .distributions import ClassModel, ClassPrior, GaussianClassModel, UniformClassModel
from .errors import ConstraintViolation, RejectLabError
from .info_bounds import bounds_scatter
from .mc_oracle import DEFAULT_N, binomial_se, empirical_outcome, sample
from .mi_classifier import mi_imbalance_sweep, mi_optimize
from .regions import RejectThresholds

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2
EXIT_CONSTRAINT = 3

TABLE_V_RATIOS = (1, 2, 4, 9, 99, 999, 9999)
ORACLE_BAND = 4.0

RUN_COLUMNS = (
    "case", "classifier", "reject", "e1", "e2", "e", "rej1", "rej2", "rej", "cr", "accuracy",
    "risk", "tr1", "tr2", "xb1", "xb2", "xb3", "xb4", "ni", "h_t_given_y",
)
SWEEP_COLUMNS = ("ratio", "classifier", "p1", "p2", "e1", "e2", "fnr", "xb", "ni", "h_t_given_y")
BOUNDS_COLUMNS = (
    "label", "classifier", "h_t_given_y", "e", "lb", "ub", "kovalevskij_ub", "p_min",
    "lb_ok", "ub_violated", "kovalevskij_violated", "const_ub_violated",
)
REDUNDANCY_COLUMNS = (
    "member", "l11", "l12", "l13", "l21", "l22", "l23", "tr1", "tr2", "xb1", "xb2", "xb3", "xb4",
)


class ConfigError(Exception):
    pass


# --- configuration -----------------------------------------------------------------------


@dataclass
class ExperimentConfig:
    case: str
    model: ClassModel
    policy: str  # "costs", "thresholds" or "mi"
    costs: Optional[CostMatrix] = None
    reject_costs: Optional[CostMatrix] = None
    thresholds: Optional[RejectThresholds] = None
    reject_thresholds: Optional[RejectThresholds] = None
    reject_option: bool = False
    oracle_n: int = 0
    seed: int = 0
    out: Optional[str] = None

    def bayes_policy(self):
        """Cost matrix or thresholds used by the Bayes rule in the configured mode."""
        if self.thresholds is not None and self.policy == "thresholds":
            return self.thresholds
        if self.reject_option:
            if self.reject_costs is not None:
                return self.reject_costs
            if self.reject_thresholds is not None:
                return self.reject_thresholds
            if self.costs is not None:
                return self.costs
            raise ConstraintViolation(
                f"case {self.case} has no reject costs lambda13/lambda23", "reject costs given"
            )
        if self.costs is not None:
            return self.costs
        if self.thresholds is not None:
            return self.thresholds
        return CostMatrix.zero_one()


PRESETS: dict[str, dict[str, Any]] = {
    "example1": {
        "model": {"family": "gaussian", "mu1": -1.0, "sigma1": 2.0, "mu2": 1.0, "sigma2": 1.0, "p1": 0.5},
        "costs": [[0.0, 1.0], [1.0, 0.0]],
        "reject_costs": [[0.0, 1.2, 0.2], [1.0, 0.0, 0.6]],
    },
    "example2": {
        "model": {"family": "gaussian", "mu1": -1.0, "sigma1": 1.0, "mu2": 1.0, "sigma2": 1.0, "p1": 0.5},
        "costs": [[0.0, 1.0], [1.0, 0.0]],
    },
    "example3": {
        "model": {"family": "gaussian", "mu1": 0.0, "sigma1": 2.0, "mu2": 0.0, "sigma2": 1.0, "p1": 0.8},
        "costs": [[0.0, 1.0], [1.0, 0.0]],
    },
    "example4": {
        "model": {"family": "uniform", "a1": 0.0, "b1": 1.0, "a2": 0.5, "b2": 2.5, "p1": 0.5},
        "thresholds": [0.5, 0.5],
        "reject_thresholds": [0.25, 0.25],
    },
}


def _number(spec: dict, key: str) -> float:
    if key not in spec:
        raise ConfigError(f"model spec is missing {key!r}")
    value = spec[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"model field {key!r} must be a number, got {value!r}")
    return float(value)


def parse_model(spec: Any) -> ClassModel:
    if not isinstance(spec, dict):
        raise ConfigError("model must be an object")
    family = spec.get("family")
    p1 = _number(spec, "p1") if "p1" in spec else 0.5
    prior = ClassPrior(p1, _number(spec, "p2") if "p2" in spec else 1.0 - p1)
    if family == "gaussian":
        return GaussianClassModel(prior, *(_number(spec, k) for k in ("mu1", "sigma1", "mu2", "sigma2")))
    if family == "uniform":
        return UniformClassModel(prior, *(_number(spec, k) for k in ("a1", "b1", "a2", "b2")))
    raise ConfigError(f"unknown model family {family!r}")


def parse_costs(rows: Any) -> CostMatrix:
    try:
        (r1, r2) = rows
        if len(r1) != len(r2) or len(r1) not in (2, 3):
            raise ValueError
        values = [float(v) for v in (*r1, *r2)]
    except (TypeError, ValueError):
        raise ConfigError(f"costs must be a 2 x 2 or 2 x 3 array of numbers, got {rows!r}") from None
    if any(math.isnan(v) for v in values):
        raise ConfigError("costs must not be NaN")
    return CostMatrix.from_rows([values[: len(r1)], values[len(r1):]])


def parse_thresholds(pair: Any) -> RejectThresholds:
    try:
        tr1, tr2 = (float(v) for v in pair)
    except (TypeError, ValueError):
        raise ConfigError(f"thresholds must be a pair of numbers, got {pair!r}") from None
    return RejectThresholds(tr1, tr2)


def config_from_dict(data: Any, case: str) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    model = parse_model(data.get("model"))
    policy = data.get("policy", {})
    if not isinstance(policy, dict):
        raise ConfigError("policy must be an object")
    kinds = [k for k in ("costs", "thresholds", "mi") if policy.get(k) not in (None, False)]
    if len(kinds) > 1:
        raise ConfigError(f"exactly one policy spec expected, got {kinds}")
    cfg = ExperimentConfig(case=str(data.get("case", case)), model=model, policy=kinds[0] if kinds else "costs")
    if "costs" in policy:
        cfg.costs = parse_costs(policy["costs"])
    if "thresholds" in policy:
        cfg.thresholds = parse_thresholds(policy["thresholds"])
    cfg.reject_option = bool(data.get("reject_option", False))
    oracle = data.get("oracle", {}) or {}
    if oracle.get("enabled"):
        cfg.oracle_n = int(oracle.get("n", DEFAULT_N))
    cfg.seed = int(oracle.get("seed", 0))
    output = data.get("output", {}) or {}
    if output.get("format", "csv") != "csv":
        raise ConfigError("only csv output is supported")
    cfg.out = output.get("path")
    return cfg


def preset_config(name: str) -> ExperimentConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    p = PRESETS[name]
    cfg = ExperimentConfig(case=name, model=parse_model(p["model"]), policy="costs")
    if "costs" in p:
        cfg.costs = parse_costs(p["costs"])
    if "reject_costs" in p:
        cfg.reject_costs = parse_costs(p["reject_costs"])
    if "thresholds" in p:
        cfg.thresholds = parse_thresholds(p["thresholds"])
        cfg.policy = "preset_thresholds"
    if "reject_thresholds" in p:
        cfg.reject_thresholds = parse_thresholds(p["reject_thresholds"])
    return cfg


def load_config(args: argparse.Namespace, default_preset: Optional[str] = None) -> ExperimentConfig:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {args.config}: {exc}") from None
        try:
            cfg = config_from_dict(data, os.path.splitext(os.path.basename(args.config))[0])
        except ConstraintViolation:
            raise
        except (AttributeError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed config {args.config}: {exc}") from None
    else:
        cfg = preset_config(args.preset or default_preset or "example1")
    if getattr(args, "reject", None) is not None:
        cfg.reject_option = args.reject
    if getattr(args, "mode", None) == "mi":
        cfg.policy = "mi"
    elif getattr(args, "mode", None) == "bayes" and cfg.policy == "mi":
        cfg.policy = "costs"
    tr1, tr2 = getattr(args, "tr1", None), getattr(args, "tr2", None)
    if (tr1 is None) != (tr2 is None):
        raise ConfigError("--tr1 and --tr2 must be given together")
    if tr1 is not None:
        cfg.thresholds = RejectThresholds(tr1, tr2)
        cfg.policy = "thresholds"
    if getattr(args, "oracle_n", None) is not None:
        cfg.oracle_n = args.oracle_n
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    env_seed = os.environ.get("REJECT_LAB_SEED")
    if env_seed is not None:
        try:
            cfg.seed = int(env_seed)
        except ValueError:
            raise ConfigError(f"REJECT_LAB_SEED must be an integer, got {env_seed!r}") from None
    if not 0 <= cfg.seed < 2 ** 64:
        raise ConfigError("seed must be an unsigned 64-bit integer")
    if getattr(args, "out", None):
        cfg.out = args.out
    return cfg


# --- formatting --------------------------------------------------------------------------


def fmt_prob(v: Optional[float]) -> str:
    if v is None:
        return ""
    # avoid a signed zero in the output
    return f"{v + 0.0:.6f}" if abs(v) >= 5e-7 else "0.000000"


def fmt_point(v: Optional[float]) -> str:
    if v is None:
        return ""
    return f"{v + 0.0:.6g}"


def fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def outcome_row(case: str, classifier: str, reject: bool, rep: OutcomeReport) -> dict[str, str]:
    tr = rep.thresholds
    xb = list(rep.boundary_points)
    row = {
        "case": case,
        "classifier": classifier,
        "reject": fmt_bool(reject),
        "e1": fmt_prob(rep.e1),
        "e2": fmt_prob(rep.e2),
        "e": fmt_prob(rep.e),
        "rej1": fmt_prob(rep.rej1),
        "rej2": fmt_prob(rep.rej2),
        "rej": fmt_prob(rep.rej),
        "cr": fmt_prob(rep.cr),
        "accuracy": fmt_prob(rep.accuracy),
        "risk": fmt_prob(rep.risk),
        "tr1": fmt_prob(tr.tr1) if tr else "",
        "tr2": fmt_prob(tr.tr2) if tr else "",
        "ni": fmt_prob(rep.ni),
        "h_t_given_y": fmt_prob(rep.h_t_given_y),
    }
    for i in range(4):
        row[f"xb{i + 1}"] = fmt_point(xb[i]) if i < len(xb) else ""
    if len(xb) > 4:
        raise RejectLabError(f"{len(xb)} boundary points do not fit the output schema")
    return row


def write_csv(columns: Sequence[str], rows: Sequence[dict], out: Optional[str]) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    text = buf.getvalue()
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ----------------------------------------------------------------------------


def analytic_outcome(cfg: ExperimentConfig) -> tuple[str, OutcomeReport]:
    if cfg.policy == "mi":
        return "mi", mi_optimize(cfg.model, cfg.reject_option).report
    return "bayes", bayes_classify(cfg.model, cfg.bayes_policy(), cfg.reject_option)


def oracle_rows(cfg: ExperimentConfig, classifier: str, rep: OutcomeReport) -> tuple[dict, float]:
    """Empirical row for ``rep``'s regions and the largest deviation in standard errors."""
    batch = sample(cfg.model, cfg.oracle_n, cfg.seed)
    costs = cfg.bayes_policy() if classifier == "bayes" else None
    _, emp = empirical_outcome(batch, rep.regions, costs if isinstance(costs, CostMatrix) else None)
    emp = dataclasses.replace(emp, thresholds=rep.thresholds)
    worst = 0.0
    for a, b in zip(
        [rep.e, rep.rej, *(v for r in rep.joint.p for v in r)],
        [emp.e, emp.rej, *(v for r in emp.joint.p for v in r)],
    ):
        se = binomial_se(a, cfg.oracle_n)
        if se > 0:
            worst = max(worst, abs(a - b) / se)
        elif a != b:
            worst = math.inf
    return outcome_row(cfg.case, f"{classifier}_empirical", cfg.reject_option, emp), worst


def cmd_run(args: argparse.Namespace) -> int:
    cfg = load_config(args)
    classifier, rep = analytic_outcome(cfg)
    rows = [outcome_row(cfg.case, classifier, cfg.reject_option, rep)]
    if cfg.oracle_n > 0:
        row, worst = oracle_rows(cfg, classifier, rep)
        rows.append(row)
        print(f"oracle: largest deviation {worst:.2f} standard errors (n={cfg.oracle_n})", file=sys.stderr)
    write_csv(RUN_COLUMNS, rows, cfg.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.oracle_n is None:
        args.oracle_n = DEFAULT_N
    cfg = load_config(args)
    if cfg.oracle_n < 1:
        raise ConfigError("--oracle-n must be at least 1")
    classifier, rep = analytic_outcome(cfg)
    row, worst = oracle_rows(cfg, classifier, rep)
    write_csv(RUN_COLUMNS, [outcome_row(cfg.case, classifier, cfg.reject_option, rep), row], cfg.out)
    within = worst <= ORACLE_BAND
    print(
        f"oracle: largest deviation {worst:.2f} standard errors (n={cfg.oracle_n}); "
        f"{'within' if within else 'outside'} the {ORACLE_BAND:g}-sigma band",
        file=sys.stderr,
    )
    return EXIT_OK if within else EXIT_ERROR


def parse_ratios(text: str) -> list[float]:
    try:
        ratios = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"--ratios must be comma-separated numbers, got {text!r}") from None
    if not ratios:
        raise ConfigError("--ratios is empty")
    return ratios


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = load_config(args, default_preset="example2")
    if not isinstance(cfg.model, GaussianClassModel):
        raise ConfigError("the prior-ratio sweep needs a Gaussian model")
    ratios = parse_ratios(args.ratios)
    rows = []
    for name, table in (("bayes", imbalance_sweep), ("mi", mi_imbalance_sweep)):
        for r in table(cfg.model, ratios):
            rows.append({
                "ratio": f"{r.ratio:g}",
                "classifier": name,
                "p1": fmt_prob(r.p1),
                "p2": fmt_prob(r.p2),
                "e1": fmt_prob(r.e1),
                "e2": fmt_prob(r.e2),
                "fnr": fmt_prob(r.fnr),
                "xb": ";".join(fmt_point(x) for x in r.xb),
                "ni": fmt_prob(r.ni),
                "h_t_given_y": fmt_prob(r.h_t_given_y),
            })
    write_csv(SWEEP_COLUMNS, rows, cfg.out)
    return EXIT_OK


def default_bound_entries() -> list[tuple[str, ClassModel, str]]:
    base = preset_config("example2").model
    entries = []
    for kind in ("bayes", "mi"):
        for ratio in TABLE_V_RATIOS:
            model = base.with_prior(ClassPrior.from_ratio(ratio))
            entries.append((f"example2_ratio{ratio}", model, kind))
    entries.append(("example3", preset_config("example3").model, "mi"))
    return entries


def cmd_bounds(args: argparse.Namespace) -> int:
    rows = []
    for r in bounds_scatter(default_bound_entries()):
        b = r.report
        rows.append({
            "label": r.label,
            "classifier": r.classifier,
            "h_t_given_y": fmt_prob(b.h_t_given_y),
            "e": fmt_prob(b.e),
            "lb": fmt_prob(b.modified_lb),
            "ub": fmt_prob(b.modified_ub),
            "kovalevskij_ub": fmt_prob(b.kovalevskij_ub),
            "p_min": fmt_prob(b.p_min),
            "lb_ok": fmt_bool(b.lb_ok),
            "ub_violated": fmt_bool(not b.ub_ok),
            "kovalevskij_violated": fmt_bool(not b.kovalevskij_ok),
            "const_ub_violated": fmt_bool(not b.const_ub_ok),
        })
    write_csv(BOUNDS_COLUMNS, rows, args.out)
    return EXIT_OK


def cmd_redundancy(args: argparse.Namespace) -> int:
    cfg = load_config(args)
    if cfg.policy == "thresholds":
        tr = cfg.thresholds
    else:
        sol = mi_optimize(cfg.model, reject_option=True)
        if sol.thresholds is None:
            raise ConfigError("the model has no threshold pair to analyse")
        tr = sol.thresholds
    lo, hi = tr.delta2, tr.delta1
    lambda21 = args.lambda21 if args.lambda21 is not None else math.sqrt(lo * hi)
    report = equivalence_class(tr, lambda21, args.count)
    rows = []
    for i, c in enumerate(report.equivalent_sets, start=1):
        regions = bayes_regions(cfg.model, c, reject_option=True)
        pts = list(regions.boundary_points)
        t = thresholds_from_costs(c)
        row = {
            "member": str(i),
            "l11": fmt_point(c.l11), "l12": fmt_point(c.l12), "l13": fmt_point(c.l13),
            "l21": fmt_point(c.l21), "l22": fmt_point(c.l22), "l23": fmt_point(c.l23),
            "tr1": fmt_prob(t.tr1), "tr2": fmt_prob(t.tr2),
        }
        for k in range(4):
            row[f"xb{k + 1}"] = fmt_point(pts[k]) if k < len(pts) else ""
        rows.append(row)
    write_csv(REDUNDANCY_COLUMNS, rows, cfg.out)
    return EXIT_OK


# --- argument parsing --------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, oracle_default: Optional[int] = None) -> None:
    p.add_argument("--preset", choices=sorted(PRESETS), help="built-in example configuration")
    p.add_argument("--config", metavar="PATH", help="JSON experiment configuration")
    p.add_argument("--mode", choices=("bayes", "mi"), help="classifier type")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--reject", dest="reject", action="store_true", default=None, help="allow rejection")
    group.add_argument("--no-reject", dest="reject", action="store_false", default=None, help="forbid rejection")
    p.add_argument("--tr1", type=float, help="rejection threshold of class 1 (with --tr2)")
    p.add_argument("--tr2", type=float, help="rejection threshold of class 2 (with --tr1)")
    p.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    p.add_argument("--oracle-n", type=int, default=oracle_default, metavar="N", help="Monte-Carlo sample size")
    p.add_argument("--seed", type=int, metavar="S", help="oracle seed (REJECT_LAB_SEED overrides)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reject-lab",
        description="Bayes and mutual-information classifiers with a reject option on exact class models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="evaluate one classifier and print a CSV row")
    _add_common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("oracle", help="compare analytic figures with a Monte-Carlo estimate")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="no-rejection classifiers over prior ratios p1/p2")
    _add_common(p)
    p.add_argument("--ratios", default=",".join(str(r) for r in TABLE_V_RATIOS), help="comma-separated ratios")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="error/conditional-entropy bound checks for the standard points")
    p.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("redundancy", help="distinct cost matrices inducing one threshold pair")
    _add_common(p)
    p.add_argument("--count", type=int, default=2, help="number of cost matrices to emit")
    p.add_argument("--lambda21", type=float, help="lambda21 of the member with lambda12 = 1")
    p.set_defaults(func=cmd_redundancy)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"reject-lab: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConstraintViolation as exc:
        name = f" [{exc.constraint}]" if exc.constraint else ""
        print(f"reject-lab: constraint violated{name}: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except RejectLabError as exc:
        print(f"reject-lab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
