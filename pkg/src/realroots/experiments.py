"""Seeded Monte Carlo experiment runners with CSV/JSON emission.

Every trial owns a seed derived from (master seed, model, degree, trial
index), so trials are independent of scheduling: runs are reproducible
byte-for-byte at any parallelism width.  Degenerate samples (repeated roots,
a root at a counting breakpoint, an exact zero coefficient at the ends) are
resampled with a fresh derived seed and counted.

Raw per-trial integers are kept alongside the aggregates; aggregation is a
separate pass over the raw rows so results can be audited from the logs.
"""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy import stats as _scipy_stats

from .isolator import (
    DESCARTES,
    METHODS,
    NonSquarefreeError,
    DyadicInterval,
    eq1_rhs,
    gap_lower_bounds,
    hong_root_bound,
    isolate,
    isolate_all,
    refine,
)
from .polynomial import bernstein_to_power
from .randgen import (
    BERNSTEIN_SK,
    BERNSTEIN_STD,
    KAC,
    SO2,
    WEYL,
    sample_polynomial,
    exactify,
)
from .sturm import sturm_sequence, sign_variations
from .theory import (
    bernstein_root_integral,
    ek_expected_count,
    sep_probability,
    sep_quantile,
    straighten,
    weyl_expected_count,
)

# Reference values from the original Bernstein-basis experiment (100 trials
# per degree): mean real roots in total and in the four intervals
# (-inf,-1), (-1,0), (0,1), (1,inf) of the Bernstein variable.
REFERENCE_TABLE1 = {
    100: (13.640, 0.760, 2.740, 6.530, 3.610),
    150: (16.540, 0.890, 3.260, 8.090, 4.300),
    200: (19.740, 1.100, 3.780, 9.740, 5.120),
    250: (21.400, 1.350, 3.970, 10.610, 5.470),
    300: (24.320, 1.270, 4.760, 12.300, 5.990),
    350: (26.540, 1.620, 5.100, 13.400, 6.420),
    400: (27.980, 1.490, 5.430, 14.080, 6.980),
    450: (29.460, 1.620, 5.890, 14.970, 6.980),
    500: (31.200, 1.830, 5.960, 15.620, 7.790),
    550: (32.740, 1.770, 6.360, 16.290, 8.320),
    600: (34.300, 1.850, 6.570, 17.270, 8.610),
    650: (35.480, 2.050, 6.840, 17.240, 9.350),
    700: (37.200, 2.160, 7.510, 18.650, 8.880),
    750: (38.180, 2.190, 7.300, 19.360, 9.330),
    800: (39.160, 2.220, 7.830, 19.490, 9.620),
    850: (40.420, 2.130, 8.010, 20.320, 9.960),
    900: (41.780, 2.390, 8.070, 20.530, 10.790),
    950: (42.680, 2.200, 8.330, 21.570, 10.580),
    1000: (43.540, 2.400, 8.610, 21.770, 10.760),
}

_MAX_RESAMPLES = 64


@dataclass
class ExperimentConfig:
    """Shared configuration for the Monte Carlo runners."""

    model: str = BERNSTEIN_STD
    degrees: tuple = (100, 150, 200, 300)
    trials: int = 100
    seed: int = 42
    jobs: int = 1
    sep_exponent: float = 1.0  # the free constant c in l = 1/(d^c tau)
    out_dir: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        self.degrees = tuple(int(d) for d in self.degrees)
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be >= 1")


@dataclass
class Table1Row:
    d: int
    predicted: float  # sqrt(2d)
    mean_total: float
    sd_total: float
    mean_neg_inf_m1: float
    mean_m1_0: float
    mean_0_1: float
    mean_1_inf: float
    trials: int
    seed: int
    resamples: int = 0


def _map_jobs(fn, items, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=1))
    return [fn(it) for it in items]


def _retry_key(trial: int, attempt: int) -> int:
    return trial + (attempt << 32)


# ---------------------------------------------------------------------------
# Table 1: real-root counts of random Bernstein-basis polynomials
# ---------------------------------------------------------------------------


def _table1_trial(args):
    seed, model, d, trial = args
    for attempt in range(_MAX_RESAMPLES):
        b = sample_polynomial(model, d, seed, _retry_key(trial, attempt))
        poly = bernstein_to_power(b)
        if poly.degree != d or poly.constant == 0:
            continue  # an endpoint value of the Bernstein form vanished
        try:
            seq = sturm_sequence(poly)
        except ValueError:
            continue  # repeated roots
        half = Fraction(-1, 2)
        if any(seq.signs_at(x)[0] == 0 for x in (Fraction(-1), half, Fraction(0))):
            continue  # root at a counting breakpoint
        v_ninf = sign_variations(seq.signs_at_infinity(False))
        v_m1 = sign_variations(seq.signs_at(Fraction(-1)))
        v_half = sign_variations(seq.signs_at(half))
        v_0 = sign_variations(seq.signs_at(Fraction(0)))
        v_inf = sign_variations(seq.signs_at_infinity(True))
        # roots y of the transformed polynomial map back to the Bernstein
        # variable z = y/(y+1): y<-1 <-> z>1; -1<y<-1/2 <-> z<-1;
        # -1/2<y<0 <-> -1<z<0; y>0 <-> 0<z<1
        c_1_inf = v_ninf - v_m1
        c_ninf_m1 = v_m1 - v_half
        c_m1_0 = v_half - v_0
        c_0_1 = v_0 - v_inf
        total = c_1_inf + c_ninf_m1 + c_m1_0 + c_0_1
        return (d, trial, attempt, total, c_ninf_m1, c_m1_0, c_0_1, c_1_inf)
    raise RuntimeError(f"trial (d={d}, trial={trial}) kept degenerating")


RAW_TABLE1_HEADER = [
    "d", "trial", "resamples", "total", "n_m_inf_m1", "n_m1_0", "n_0_1", "n_1_inf",
]


def run_table1(cfg: ExperimentConfig):
    """Count real roots of random Bernstein polynomials per degree.

    Returns (rows, raw_rows); also writes table1.csv / table1_trials.csv when
    cfg.out_dir is set.
    """
    tasks = [
        (cfg.seed, cfg.model, d, t) for d in cfg.degrees for t in range(cfg.trials)
    ]
    raw = _map_jobs(_table1_trial, tasks, cfg.jobs)
    rows = aggregate_table1(raw, cfg)
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_csv(out / "table1_trials.csv", RAW_TABLE1_HEADER, raw)
        write_csv(out / "table1.csv", TABLE1_HEADER, [table1_row_values(r) for r in rows])
    return rows, raw


def aggregate_table1(raw_rows, cfg: ExperimentConfig) -> list[Table1Row]:
    """Aggregate raw per-trial counts into one row per degree."""
    rows = []
    for d in cfg.degrees:
        counts = [r for r in raw_rows if r[0] == d]
        totals = [r[3] for r in counts]
        n = len(totals)
        mean_total = sum(totals) / n
        sd = math.sqrt(sum((t - mean_total) ** 2 for t in totals) / (n - 1)) if n > 1 else 0.0
        rows.append(
            Table1Row(
                d=d,
                predicted=math.sqrt(2 * d),
                mean_total=mean_total,
                sd_total=sd,
                mean_neg_inf_m1=sum(r[4] for r in counts) / n,
                mean_m1_0=sum(r[5] for r in counts) / n,
                mean_0_1=sum(r[6] for r in counts) / n,
                mean_1_inf=sum(r[7] for r in counts) / n,
                trials=n,
                seed=cfg.seed,
                resamples=sum(r[2] for r in counts),
            )
        )
    return rows


TABLE1_HEADER = [
    "d", "pred_sqrt2d", "mean_total", "sd_total",
    "mean_m_inf_m1", "mean_m1_0", "mean_0_1", "mean_1_inf", "trials", "seed",
]


def table1_row_values(r: Table1Row):
    return (
        r.d, f"{r.predicted:.6f}", f"{r.mean_total:.6f}", f"{r.sd_total:.6f}",
        f"{r.mean_neg_inf_m1:.6f}", f"{r.mean_m1_0:.6f}", f"{r.mean_0_1:.6f}",
        f"{r.mean_1_inf:.6f}", r.trials, r.seed,
    )


def table1_deviations(rows) -> list[tuple[int, float, float]]:
    """(d, |mean_total - reference|, max column deviation) per comparable row."""
    out = []
    for r in rows:
        ref = REFERENCE_TABLE1.get(r.d)
        if ref is None:
            continue
        cols = (r.mean_neg_inf_m1, r.mean_m1_0, r.mean_0_1, r.mean_1_inf)
        out.append(
            (
                r.d,
                abs(r.mean_total - ref[0]),
                max(abs(c - e) for c, e in zip(cols, ref[1:])),
            )
        )
    return out


def table1_check(rows, total_tol: float = 1.0, col_tol: float = 0.8) -> bool:
    devs = table1_deviations(rows)
    return bool(devs) and all(dt <= total_tol and dc <= col_tol for _, dt, dc in devs)


# ---------------------------------------------------------------------------
# Monte Carlo expected-count comparison
# ---------------------------------------------------------------------------


def _count_trial(args):
    seed, model, d, trial = args
    for attempt in range(_MAX_RESAMPLES):
        sample = sample_polynomial(model, d, seed, _retry_key(trial, attempt))
        if model in (BERNSTEIN_STD, BERNSTEIN_SK):
            poly = bernstein_to_power(sample)
            if poly.degree != d or poly.constant == 0:
                continue
        else:
            poly = exactify(sample)
            if poly.degree != d:
                continue
        try:
            seq = sturm_sequence(poly)
        except ValueError:
            continue
        v_ninf = sign_variations(seq.signs_at_infinity(False))
        v_inf = sign_variations(seq.signs_at_infinity(True))
        return (model, d, trial, attempt, v_ninf - v_inf)
    raise RuntimeError(f"trial (model={model}, d={d}, trial={trial}) kept degenerating")


def ek_prediction(model: str, d: int) -> float:
    """Expected real-root count from the Edelman-Kostlan integral.

    For the Bernstein models the prediction integrates the exact variance
    vector of the transformed polynomial (coefficient k of the monomial form
    is Gaussian with variance C(d,k)^2 * v_k).
    """
    if model == SO2:
        return math.sqrt(d)
    if model == WEYL:
        return weyl_expected_count(d)
    if model == KAC:
        return ek_expected_count([1] * (d + 1))
    if model == BERNSTEIN_STD:
        v = [math.comb(d, k) ** 2 for k in range(d + 1)]
        return ek_expected_count(v)
    if model == BERNSTEIN_SK:
        v = [Fraction(math.comb(d, k)) ** 2 for k in range(d + 1)]
        for k in range(1, d):
            v[k] *= Fraction(math.sqrt(math.pi * k * (d - k) / d))
        return ek_expected_count(v)
    raise ValueError(f"unknown model {model!r}")


EKMC_HEADER = ["model", "d", "prediction", "mc_mean", "mc_se", "z_score", "trials"]


def run_ek_mc(cfg: ExperimentConfig, models=None):
    """Mean exact real-root counts vs the expected-count integral."""
    models = tuple(models) if models else (cfg.model,)
    rows = []
    raw = []
    for model in models:
        for d in cfg.degrees:
            tasks = [(cfg.seed, model, d, t) for t in range(cfg.trials)]
            res = _map_jobs(_count_trial, tasks, cfg.jobs)
            raw.extend(res)
            counts = [r[4] for r in res]
            mean = sum(counts) / len(counts)
            sd = (
                math.sqrt(sum((c - mean) ** 2 for c in counts) / (len(counts) - 1))
                if len(counts) > 1
                else 0.0
            )
            se = sd / math.sqrt(len(counts)) if len(counts) > 1 else float("nan")
            pred = ek_prediction(model, d)
            z = (mean - pred) / se if se else float("nan")
            rows.append((model, d, pred, mean, se, z, len(counts)))
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_csv(out / "ek_mc_trials.csv", ["model", "d", "trial", "resamples", "count"], raw)
        write_csv(out / "ek_mc.csv", EKMC_HEADER, rows)
    return rows, raw


# ---------------------------------------------------------------------------
# Separation-law experiment
# ---------------------------------------------------------------------------


def _sep_trial(args):
    seed, model, d, trial = args
    eps = Fraction(1, 2**40)
    for attempt in range(_MAX_RESAMPLES):
        sample = sample_polynomial(model, d, seed, _retry_key(trial, attempt))
        poly = exactify(sample)
        if poly.degree != d:
            continue
        try:
            roots, _ = isolate_all(poly, method=DESCARTES, separate_output=False)
        except NonSquarefreeError:
            continue
        refined = [refine(poly, r, eps) for r in roots]
        pos = sorted(float(r.position) for r in refined)
        if model == WEYL:
            lim = math.sqrt(d)
            pos = [x for x in pos if abs(x) <= lim]
        if len(pos) < 2:
            return (model, d, trial, attempt, None)
        zeta = straighten(model, d, np.array(pos))
        return (model, d, trial, attempt, float(np.diff(zeta).min()))
    raise RuntimeError(f"trial (model={model}, d={d}, trial={trial}) kept degenerating")


SEP_HEADER = [
    "model", "d", "l", "predicted", "printed_law", "empirical", "stderr",
    "trials_used", "skipped",
]


def run_sep(cfg: ExperimentConfig, prob_targets=(0.02, 0.05, 0.1), corrected=True):
    """Empirical frequency of small straightened gaps vs the asymptotic law.

    Pipeline per trial: sample, embed exactly, isolate, refine to 2^-40,
    straighten the real roots, take the minimum adjacent gap.  Trials with
    fewer than two (in-range) real roots are skipped and counted.

    The l grid is placed at the quantiles of the corrected quadratic law by
    default (see sep_probability); the printed display value is reported
    alongside in every row.
    """
    model = cfg.model
    if model not in (SO2, WEYL):
        raise ValueError("separation laws exist for the so2 and weyl models")
    rows = []
    all_raw = []
    for d in cfg.degrees:
        tasks = [(cfg.seed, model, d, t) for t in range(cfg.trials)]
        res = _map_jobs(_sep_trial, tasks, cfg.jobs)
        all_raw.extend(res)
        gaps = [r[4] for r in res if r[4] is not None]
        skipped = sum(1 for r in res if r[4] is None)
        n = len(gaps)
        for target in prob_targets:
            l = sep_quantile(model, d, target, corrected=corrected)
            emp = sum(1 for g in gaps if g <= l) / n if n else float("nan")
            se = math.sqrt(emp * (1.0 - emp) / n) if n else float("nan")
            rows.append(
                (
                    model, d, l,
                    sep_probability(model, d, l, corrected=corrected),
                    sep_probability(model, d, l, corrected=False),
                    emp, se, n, skipped,
                )
            )
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_csv(out / "sep_trials.csv", ["model", "d", "trial", "resamples", "min_gap"], all_raw)
        write_csv(out / "sep.csv", SEP_HEADER, rows)
    return rows, all_raw


def sep_check(rows, factor: float = 2.0, z_max: float = 3.0) -> bool:
    """Every row within the given factor of the prediction and z_max binomial
    standard errors (binomial error taken under the predicted rate)."""
    for _, _, _, pred, _, emp, _, n, _ in rows:
        if not n:
            return False
        if emp < pred / factor or emp > pred * factor:
            return False
        if abs(emp - pred) > z_max * math.sqrt(pred * (1 - pred) / n):
            return False
    return True


# ---------------------------------------------------------------------------
# Solver instrumentation
# ---------------------------------------------------------------------------


def _solver_trial(args):
    seed, model, d, trial, method = args
    for attempt in range(_MAX_RESAMPLES):
        sample = sample_polynomial(model, d, seed, _retry_key(trial, attempt))
        poly = exactify(sample)
        if poly.degree != d:
            continue
        t0 = time.perf_counter()
        try:
            roots, stats = isolate_all(poly, method=method)
        except NonSquarefreeError:
            continue
        wall = time.perf_counter() - t0
        num = len(roots)
        if num >= 2:
            stats.gap_lower_bounds = gap_lower_bounds(poly, roots, Fraction(1, 2**20))
        rhs = eq1_rhs(stats, num)
        return (d, method, trial, attempt, num, stats.tree_nodes, stats.max_depth, wall, rhs)
    raise RuntimeError(f"trial (d={d}, trial={trial}) kept degenerating")


SOLVER_HEADER = [
    "d", "method", "mean_roots", "mean_tree_nodes", "mean_depth",
    "mean_wall_s", "mean_envelope_rhs", "trials",
]


def run_solver(cfg: ExperimentConfig, methods=METHODS):
    """Tree sizes, depths, and wall times per counter method, next to the
    binary-search envelope 2r + r lg B - sum lg gap_j."""
    rows = []
    raw = []
    for d in cfg.degrees:
        for method in methods:
            tasks = [(cfg.seed, cfg.model, d, t, method) for t in range(cfg.trials)]
            res = _map_jobs(_solver_trial, tasks, cfg.jobs)
            raw.extend(res)
            n = len(res)
            rows.append(
                (
                    d,
                    method,
                    sum(r[4] for r in res) / n,
                    sum(r[5] for r in res) / n,
                    sum(r[6] for r in res) / n,
                    sum(r[7] for r in res) / n,
                    sum(r[8] for r in res) / n,
                    n,
                )
            )
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_csv(
            out / "solver_trials.csv",
            ["d", "method", "trial", "resamples", "roots", "tree_nodes", "depth", "wall_s", "rhs"],
            raw,
        )
        write_csv(out / "solver.csv", SOLVER_HEADER, rows)
    return rows, raw


# ---------------------------------------------------------------------------
# Root-distribution uniformity (probability plot statistic)
# ---------------------------------------------------------------------------


def _uniformity_trial(args):
    seed, model, d, trial = args
    eps = Fraction(1, 2**24)
    for attempt in range(_MAX_RESAMPLES):
        b = sample_polynomial(model, d, seed, _retry_key(trial, attempt))
        poly = bernstein_to_power(b)
        if poly.degree != d or poly.constant == 0:
            continue
        bound = hong_root_bound(poly)
        if bound == 0:
            return []
        try:
            roots, _ = isolate(
                poly, DyadicInterval(0, bound), method=DESCARTES, separate_output=False
            )
        except NonSquarefreeError:
            continue
        out = []
        for r in roots:
            y = float(refine(poly, r, eps).position)
            if y > 0:
                z = y / (1.0 + y)
                out.append(math.acos(2.0 * z - 1.0))
        return out
    raise RuntimeError(f"trial (d={d}, trial={trial}) kept degenerating")


def ks_uniform(sample, lo: float, hi: float):
    """Two-sided Kolmogorov-Smirnov distance and p-value against the uniform
    distribution on (lo, hi)."""
    sample = np.asarray(sample, dtype=float)
    if sample.size == 0:
        raise ValueError("empty sample")
    res = _scipy_stats.kstest(sample, _scipy_stats.uniform(lo, hi - lo).cdf)
    return float(res.statistic), float(res.pvalue)


def run_uniformity(cfg: ExperimentConfig, d: int | None = None):
    """Pool arccos(2t - 1) over Bernstein-model roots t in (0,1) and test
    against uniform(0, pi)."""
    d = d if d is not None else cfg.degrees[0]
    tasks = [(cfg.seed, cfg.model, d, t) for t in range(cfg.trials)]
    chunks = _map_jobs(_uniformity_trial, tasks, cfg.jobs)
    pooled = [x for chunk in chunks for x in chunk]
    stat, pvalue = ks_uniform(pooled, 0.0, math.pi)
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_csv(out / "uniformity_values.csv", ["value"], [(repr(v),) for v in pooled])
        write_csv(
            out / "uniformity.csv",
            ["d", "n_roots", "ks_distance", "p_value"],
            [(d, len(pooled), stat, pvalue)],
        )
    return stat, pvalue, len(pooled)


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x) for x in row])


def rows_to_json(header, rows) -> str:
    return json.dumps(
        [dict(zip(header, row)) for row in rows],
        default=lambda x: repr(x) if isinstance(x, Fraction) else str(x),
        sort_keys=True,
        indent=2,
    )
