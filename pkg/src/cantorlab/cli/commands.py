import json
from collections.abc import Callable
from dataclasses import replace
from fractions import Fraction
from random import Random
from typing import Any

from ..conditional import (
    DEFAULT_TOLERANCE,
    DEFAULT_WINDOW,
    PathGenerator,
    additivity_of_limits,
    conditional_martingale,
    conditional_trace,
    exceed_set,
    follower_martingale,
    martingale_check,
    upcrossing_scan,
)
from ..core.cantor import BasicSet, BitString, CylinderSet, random_basic_set
from ..core.exceptions import ConfigException, ZeroMarginalException
from ..core.settings import Settings
from ..core.utils import format_rational, parse_rational
from ..heavy import HeavyScanner, discard_below, random_small_set, section_bound_check
from ..measures import (
    KernelConfig,
    KernelMeasure,
    MeasureOracle,
    ProductMeasure,
    SegmentsMeasure,
    SequenceConfig,
    measure_from_spec,
    oscillating,
    report_to_json,
    validate,
)
from ..testcalc import (
    EliasOmegaCodeLengths,
    HuffmanCodeLengths,
    UniformCodeLengths,
    all_words,
    finite_deficiency,
    make_test,
    minimal_untrimmed_constant,
    product_construction,
    random_family,
    random_test,
    ratio_trim,
    sum_construction,
)
from ..trimming import (
    CoverSequence,
    GammaOracle,
    TrimConfig,
    adversarial_gamma,
    coverage_check,
    coverage_scenario,
    honest_gamma,
    naive_trim,
    overlapping_scenario,
    parse_slowdown,
    random_covers,
    trim,
    verify_bounds,
)
from .experiment_config import ExperimentConfig
from .outcome import Outcome, outcome, to_csv_text, to_json_text

CommandRunner = Callable[[ExperimentConfig, Random, Settings], Outcome]


def _spec(value: Any) -> Any:
    if isinstance(value, str) and value.lstrip().startswith("{"):
        try:
            return json.loads(value)
        except json.JSONDecodeError as e:
            raise ConfigException(f"Malformed measure JSON: {e}") from e
    return value


def _measure(cfg: ExperimentConfig, default: Any = None) -> MeasureOracle:
    spec = cfg.get("measure", default)
    if spec is None:
        raise ConfigException(f"The {cfg.command} command needs the 'measure' parameter.")
    return measure_from_spec(_spec(spec))


def _depth(cfg: ExperimentConfig, settings: Settings, default: int) -> int:
    return settings.clamp_depth(int(cfg.get("depth", default)))


def _target(text: Any) -> BitString | CylinderSet:
    token = str(text).strip()
    if any(c in token for c in "[]*+{}"):
        return CylinderSet.parse(token)
    return BitString(token)


def _rational(cfg: ExperimentConfig, key: str, default: str) -> Fraction:
    return parse_rational(cfg.get(key, default))


def run_validate(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Validate a measure exhaustively up to `depth`."""
    report = validate(_measure(cfg), _depth(cfg, settings, 8), debug=settings.debug)
    violations = [f"{v.check} at {v.rect}: expected {v.expected}, got {v.got}" for v in report.violations]
    return outcome(cfg.command, violations, {"validation.json": to_json_text(report_to_json(report))})


def _trace(cfg: ExperimentConfig, settings: Settings, oracle: MeasureOracle, default_depth: int) -> Outcome:
    path = PathGenerator.parse(str(cfg.get("path", "zeros")))
    a2 = _target(cfg.get("a2", "1"))
    depth = _depth(cfg, settings, default_depth)
    window = int(cfg.get("window", DEFAULT_WINDOW))
    tolerance = _rational(cfg, "tolerance", format_rational(DEFAULT_TOLERANCE))
    try:
        result = conditional_trace(oracle, path, a2, depth, window, tolerance)
    except ZeroMarginalException as e:
        return outcome(cfg.command, [], {}, unmet=[f"zero marginal: {e.errors}"])
    summary: dict[str, Any] = {"path": result.path, "a2": result.target, "verdict": str(result.verdict)}
    violations: list[str] = []
    unmet: list[str] = []
    if cfg.command == "oscillate":
        for d, enclosure in result.values:
            expected = Fraction(2, 3) if d % 2 == 0 else Fraction(1, 3)
            if enclosure.lo != expected or enclosure.hi != expected:
                violations.append(f"depth {d}: expected {format_rational(expected)}, got {enclosure}")
        if result.verdict.kind != "oscillating" and depth + 1 >= window:
            violations.append(f"verdict {result.verdict} is not oscillating")
    cells = cfg.get("additivity")
    if cells:
        try:
            report = additivity_of_limits(oracle, path, [BitString(c) for c in cells], depth, window, tolerance)
        except ZeroMarginalException as e:
            unmet.append(f"zero marginal: {e.errors}")
        else:
            summary["additivity"] = [
                {"a2": e.a2.bits, "status": e.status, "parent": str(e.parent)} for e in report.entries
            ]
            violations += [f"additivity violated at {e.a2}" for e in report.entries if e.status == "violated"]
    files = {"trace.csv": to_csv_text(result.to_csv_rows()), "trace.json": to_json_text(summary)}
    return outcome(cfg.command, violations, files, unmet)


def run_trace(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Trace a conditional along a path, and optionally check additivity of the limits."""
    return _trace(cfg, settings, _measure(cfg), 12)


def run_oscillate(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Trace the oscillating measure along `000…` and check the exact alternation of 2/3 and 1/3."""
    return _trace(replace(cfg, params={**cfg.params, "path": "zeros", "a2": "1"}), settings, oscillating(), 12)


def run_martingale(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Check the martingale property, the maximal inequality and the upcrossing bounds."""
    oracle = _measure(cfg, "oscillating")
    a2 = _target(cfg.get("a2", "1"))
    depth = _depth(cfg, settings, 10)
    u, v = _rational(cfg, "u", "1/2"), _rational(cfg, "v", "3/5")
    crossings = int(cfg.get("crossings", 4))
    levels = [parse_rational(c) for c in cfg.get("levels", ["3/4", "1"])]

    m = conditional_martingale(oracle, a2, depth)
    violations = [f"martingale property at {x.cell}" for x in martingale_check(m).violations]
    summary: dict[str, Any] = {"initial": format_rational(m.initial or 0), "exceed": [], "upcrossings": []}
    for c in levels:
        hit = exceed_set(m, c)
        summary["exceed"].append(
            {"level": format_rational(c), "measure": format_rational(hit.measure), "bound": format_rational(hit.bound)}
        )
        if not hit.ok:
            violations.append(f"maximal inequality at level {format_rational(c)}")
    scan = upcrossing_scan(m, u, v)
    for n in range(1, crossings + 1):
        measure, bound = scan.measure_with(n), scan.bound(n)
        summary["upcrossings"].append({"n": n, "measure": format_rational(measure), "bound": format_rational(bound)})
        if measure > bound:
            violations.append(f"upcrossing bound for {n} crossings")
    if not scan.capital_ok():
        violations.append("follower capital below (v/u)^n at a completion")
    follower = martingale_check(follower_martingale(m, u, v))
    violations += [f"follower martingale property at {x.cell}" for x in follower.violations]
    rows = [["cell", "value"]] + [list(row) for row in m.to_rows()]
    files = {"martingale.csv": to_csv_text(rows), "martingale.json": to_json_text(summary)}
    return outcome(cfg.command, violations, files)


def run_heavy(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Enumerate heavy intervals, check the union bound, and optionally a section bound and random trials."""
    oracle = _measure(cfg, "uniform")
    n = int(cfg.get("n", 1))
    depth = _depth(cfg, settings, 8)
    scanner = HeavyScanner(oracle, debug=settings.debug)
    violations: list[str] = []
    unmet: list[str] = []
    summary: dict[str, Any] = {}
    if "set" in cfg.params:
        u = BasicSet.parse(str(cfg.require("set")))
        scan = scanner.scan(u, n, depth)
        summary["scan"] = scan.to_json()
        summary["skipped"] = [w.bits for w in scan.skipped]
        if not scan.ok:
            violations.append(f"heavy union {format_rational(scan.union_measure)} exceeds 2^-{n}")
        if "path" in cfg.params:
            path = PathGenerator.parse(str(cfg.get("path")))
            report = section_bound_check(oracle, u, n, path, depth, _rational(cfg, "slack", "0"))
            summary["section"] = report.to_json()
            if report.status == "violated":
                violations.append(f"section bound at {report.prefix}")
            elif report.status == "precondition":
                unmet.append(report.reason)
    trials = int(cfg.get("trials", 0))
    levels = [int(k) for k in cfg.get("levels", [1, 2, 3])]
    for trial in range(trials):
        level = levels[trial % len(levels)]
        scan = scanner.scan(random_small_set(rng, oracle, level), level, depth)
        if not scan.ok:
            violations.append(f"trial {trial}: heavy union {format_rational(scan.union_measure)} exceeds 2^-{level}")
    summary["trials"] = trials
    return outcome(cfg.command, violations, {"heavy.json": to_json_text(summary)}, unmet)


def run_discard(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Check that the segments measure and the uniform measure agree on discarded sets."""
    oracle = _measure(cfg, "segments")
    if not isinstance(oracle, SegmentsMeasure):
        raise ConfigException("The discard command needs a segments measure.")
    seq: SequenceConfig = oracle.cfg
    depth = min(_depth(cfg, settings, 6), seq.length)
    sets = [BasicSet.parse(str(cfg.get("set")))] if "set" in cfg.params else []
    sets += [random_basic_set(rng, 6, depth) for _ in range(int(cfg.get("trials", 200)))]
    violations: list[str] = []
    for u in sets:
        kept = discard_below(u, seq)
        p, q = kept.measure(oracle.exact_mass), kept.uniform_measure()
        if p != q:
            violations.append(f"{u}: P = {format_rational(p)}, uniform = {format_rational(q)}")
    return outcome(cfg.command, violations, {"discard.json": to_json_text({"checked": len(sets), "depth": depth})})


def _gamma(cfg: ExperimentConfig, oracle: MeasureOracle) -> GammaOracle:
    spec = _spec(cfg.get("gamma", {"kind": "honest"}))
    if not isinstance(spec, dict):
        spec = {"kind": str(spec)}
    slowdown = parse_slowdown(str(spec.get("slowdown", "dyadic")))
    kind = spec.get("kind", "honest")
    if kind == "honest":
        return honest_gamma(oracle, slowdown)
    if kind == "adversarial":
        path = PathGenerator.parse(str(spec.get("path", "zeros")))
        return adversarial_gamma(oracle, path, measure_from_spec(_spec(spec.get("decoy", "uniform"))), slowdown)
    raise ConfigException(f"Unknown gamma kind {kind!r}.")


def _coverage_scenarios(cfg: ExperimentConfig, settings: Settings) -> Outcome:
    violations: list[str] = []
    unmet: list[str] = []
    entries: list[dict[str, Any]] = []
    for seed in range(int(cfg.get("count", 20))):
        scenario = coverage_scenario(seed)
        trim_cfg = replace(scenario.cfg, maxdepth=settings.clamp_depth(scenario.cfg.maxdepth))
        result = trim(scenario.oracle, scenario.gamma, scenario.covers, trim_cfg)
        violations += [f"scenario {seed}: {v}" for v in verify_bounds(result, scenario.oracle, trim_cfg).violations]
        check = coverage_check(result, scenario.gamma, scenario.oracle, scenario.point, scenario.stage, trim_cfg)
        if check.violated:
            violations.append(f"scenario {seed}: coverage: {check.reason}")
        elif not check.covered:
            unmet.append(f"scenario {seed}: {check.reason}")
        entries.append({"seed": seed, "stages": scenario.stage, "convergence": scenario.convergence, **check.to_json()})
    summary = {"covered": sum(1 for e in entries if e["status"] == "covered"), "scenarios": entries}
    return outcome(cfg.command, violations, {"coverage.json": to_json_text(summary)}, unmet)


def run_trim(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Trim a cover sequence, check the measure ledger, and optionally coverage of a point."""
    if cfg.get("scenario") == "coverage":
        return _coverage_scenarios(cfg, settings)
    summary: dict[str, Any] = {}
    point: tuple[PathGenerator, PathGenerator] | None = None
    stage = 0
    if cfg.get("scenario") == "overlapping":
        scenario = overlapping_scenario()
        oracle, covers, gamma, trim_cfg = scenario.oracle, scenario.covers, scenario.gamma, scenario.cfg
        point, stage = scenario.point, scenario.stage
        naive = naive_trim(oracle, covers, trim_cfg)
        summary["naive"] = format_rational(naive.trimmed(len(covers)).measure(oracle.exact_mass))
    elif "scenario" in cfg.params:
        raise ConfigException(f"Unknown trim scenario {cfg.get('scenario')!r}.")
    else:
        oracle = _measure(cfg)
        covers = CoverSequence.parse([str(t) for t in cfg.require("covers")])
        trim_cfg = TrimConfig.from_json(dict(cfg.params), len(covers))
        gamma = _gamma(cfg, oracle)
        coverage = cfg.get("coverage")
        if coverage:
            point = (PathGenerator.parse(coverage["point"][0]), PathGenerator.parse(coverage["point"][1]))
            stage = int(coverage.get("stage", len(covers)))
    trim_cfg = replace(trim_cfg, maxdepth=settings.clamp_depth(trim_cfg.maxdepth))
    result = trim(oracle, gamma, covers, trim_cfg)
    report = verify_bounds(result, oracle, trim_cfg)
    violations = report.violations
    unmet: list[str] = []
    if point is not None:
        check = coverage_check(result, gamma, oracle, point, stage, trim_cfg)
        summary["coverage"] = check.to_json()
        if check.violated:
            violations.append(f"coverage: {check.reason}")
        elif not check.covered:
            unmet.append(f"coverage: {check.reason}")
    cover_depth = min(int(cfg.get("cover_depth", trim_cfg.maxdepth)), trim_cfg.maxdepth)
    for trial in range(int(cfg.get("trials", 0))):
        extra = random_covers(rng, len(covers), max_depth=cover_depth)
        extra_report = verify_bounds(trim(oracle, gamma, extra, trim_cfg), oracle, trim_cfg)
        violations += [f"trial {trial}: {v}" for v in extra_report.violations]
    summary.update(
        {
            "config": trim_cfg.to_json(),
            "covers": covers.to_json(),
            "G": [str(g) for g in result.g],
            "U_hat": [str(u) for u in result.u_hat],
        }
    )
    files = {"ledger.csv": to_csv_text(report.to_csv_rows()), "trim.json": to_json_text(summary)}
    return outcome(cfg.command, violations, files, unmet)


def _kernel_parts(oracle: MeasureOracle) -> tuple[Any, KernelConfig]:
    if isinstance(oracle, KernelMeasure):
        return oracle.p1, oracle.kernel
    if isinstance(oracle, ProductMeasure):
        return oracle.p1, KernelConfig.constant(oracle.p2)
    raise ConfigException("The vv command needs a product or kernel measure.")


def run_vv(cfg: ExperimentConfig, rng: Random, settings: Settings) -> Outcome:
    """Check the integral bounds of the test constructions, ratio trimming and the finite-set Kraft identity."""
    oracle = _measure(cfg, "uniform")
    p1, kernel = _kernel_parts(oracle)
    depth = max(_depth(cfg, settings, 4), kernel.depth)
    max_k = int(cfg.get("max_k", 3))
    ledger: list[dict[str, Any]] = []
    violations: list[str] = []
    for trial in range(int(cfg.get("trials", 50))):
        t1 = random_test(rng, p1, depth)
        fam = random_family(rng, kernel, depth, max_k)
        for construction in (product_construction(t1, fam, p1, kernel), sum_construction(t1, fam, p1, kernel)):
            ledger.append(construction.to_json())
            if not construction.ok:
                total = format_rational(construction.integral)
                violations.append(f"trial {trial}: {construction.name} integral {total}")
        tp = make_test(product_construction(t1, fam, p1, kernel).function, oracle)
        d = rng.randint(0, 3)
        trimmed = ratio_trim(tp, d, minimal_untrimmed_constant(tp, d, kernel), kernel)
        if trimmed.trimmed:
            violations.append(f"trial {trial}: minimal constant still trims {len(trimmed.trimmed)} fibres")
    bits = int(cfg.get("kraft_bits", 6))
    elements = all_words(bits)
    weights = {x: Fraction(rng.randint(1, 16)) for x in elements}
    for provider in (UniformCodeLengths(), EliasOmegaCodeLengths(), HuffmanCodeLengths(weights)):
        total = sum((finite_deficiency(x, elements, provider).test_value for x in elements), Fraction(0))
        if total > len(elements):
            violations.append(f"{type(provider).__name__}: Σ 2^d = {format_rational(total)} > {len(elements)}")
    return outcome(cfg.command, violations, {"ledger.json": to_json_text(ledger)})


COMMAND_RUNNERS: dict[str, CommandRunner] = {
    "validate": run_validate,
    "trace": run_trace,
    "oscillate": run_oscillate,
    "martingale": run_martingale,
    "heavy": run_heavy,
    "discard": run_discard,
    "trim": run_trim,
    "vv": run_vv,
}
