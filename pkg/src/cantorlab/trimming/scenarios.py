from dataclasses import dataclass
from fractions import Fraction
from random import Random

from ..conditional import PathGenerator
from ..core.cantor import BasicSet, BitString, Rect, random_basic_set, random_word
from ..measures import BernoulliMeasure, KernelConfig, MeasureOracle, TabulatedMeasure, UniformMeasure, from_kernel
from .gamma_oracle import GammaOracle, honest_gamma
from .slowdown import scaled_slowdown
from .trim_config import CoverSequence, TrimConfig

SCENARIO_EPSILON: Fraction = Fraction(1, 4)
SCENARIO_MAXDEPTH: int = 8
COLUMN_DEPTH: int = 3


def random_covers(rng: Random, stages: int, max_rects: int = 3, max_depth: int = 8) -> CoverSequence:
    """
    Draw an increasing cover sequence by adding a random basic set at every stage.

    :param rng: The seeded generator.
    :param stages: The number of stages.
    :param max_rects: The maximal number of rectangles added per stage.
    :param max_depth: The maximal coordinate depth.
    :return: The sequence.
    """
    sets: list[BasicSet] = []
    current = BasicSet.empty()
    for _ in range(stages):
        current = current | random_basic_set(rng, max_rects, max_depth)
        sets.append(current)
    return CoverSequence(tuple(sets))


def overlapping_measure() -> MeasureOracle:
    """
    Return the depth-1 kernel measure behind the overlapping-rectangles example.

    Sequences starting with 0 see Bernoulli(9/16) on `Ω₂`; sequences starting with 1 see all of
    their mass on `[1]`, split 7/32 and 25/32 between `[10]` and `[11]`.
    """
    kernel = KernelConfig(
        1,
        {
            "0": BernoulliMeasure(Fraction(9, 16)),
            "1": TabulatedMeasure(2, {"10": Fraction(7, 32), "11": Fraction(25, 32)}),
        },
    )
    return from_kernel(UniformMeasure(), kernel)


@dataclass(frozen=True, slots=True)
class TrimScenario:
    """
    A measure, a cover sequence, a Γ-oracle, a configuration and a point expected to be covered.

    **Notes:**

    -   `convergence` is the shallowest stripe level along the point at which the stripe is good
        for every stage up to `stage`.
    """

    oracle: MeasureOracle
    covers: CoverSequence
    gamma: GammaOracle
    cfg: TrimConfig
    point: tuple[PathGenerator, PathGenerator]
    stage: int
    convergence: int


def overlapping_scenario() -> TrimScenario:
    """
    Return the two-stage example where per-stage trimming fails.

    `U₁ = Ω₁×[0]` has vertical size `7/32` over the whole square, so per-stage trimming keeps all of
    it; `U₂` adds `[1]×[10]`, small inside `[1]`, and per-stage trimming keeps that too, for a total
    of `21/64 > ε = 1/4`.
    """
    oracle = overlapping_measure()
    covers = CoverSequence.parse(["*x[0]", "*x[0]+[1]x[10]"])
    cfg = TrimConfig.default(stages=2, epsilon=SCENARIO_EPSILON, maxdepth=SCENARIO_MAXDEPTH)
    point = (PathGenerator.ones(), PathGenerator.from_prefix("10"))
    return TrimScenario(oracle, covers, honest_gamma(oracle, scaled_slowdown(2)), cfg, point, 2, 6)


def _word(rng: Random, depth: int) -> BitString:
    return random_word(rng, depth, depth)


def _apart_from(rng: Random, column: BitString) -> BitString:
    while True:
        word = random_word(rng, COLUMN_DEPTH, 1)
        if not word.is_compatible(column):
            return word


def coverage_scenario(seed: int) -> TrimScenario:
    """
    Build a coverage scenario whose convergence depth is known in advance.

    The measure is a uniform `P₁` with a Bernoulli kernel of depth 1 or 2, with parameters in
    `[3/8, 5/8]`. The point's column `[c]`, `|c| = 3`, holds a single rectangle `[c]×[t]`, `|t| = 3`,
    which enters the covers at stage `entry`; every other rectangle lies beside the column. Its
    section therefore has mass at most `(5/8)³ < ε = 1/4`.

    With the Γ-schedule of width `2^{1-n}` every enclosure contains the fibre value, so along the
    point the bounds fit within `δ_i = 2^{-(i+3)}` exactly from level `i + 4` on: the scenario
    converges at level `k + 4 <= 7` for `k` stages.

    :param seed: The scenario seed; the kernel depth, stage count and entry stage cycle with it.
    :return: The scenario.
    """
    rng = Random(seed)
    kernel_depth = 1 + seed % 2
    stages = 1 + seed % 3
    entry = stages - (seed // 6) % stages
    fibers = {w: BernoulliMeasure(Fraction(rng.randint(3, 5), 8)) for w in BitString.all_of_length(kernel_depth)}
    oracle = from_kernel(UniformMeasure(), KernelConfig(kernel_depth, fibers))

    column, target = _word(rng, COLUMN_DEPTH), _word(rng, COLUMN_DEPTH)
    sets: list[BasicSet] = []
    current = BasicSet.empty()
    for stage in range(1, stages + 1):
        rects = [Rect(_apart_from(rng, column), random_word(rng, COLUMN_DEPTH)) for _ in range(rng.randint(0, 2))]
        if stage == entry:
            rects.append(Rect(column, target))
        current = current | BasicSet(rects)
        sets.append(current)

    cfg = TrimConfig.default(stages=stages, epsilon=SCENARIO_EPSILON, maxdepth=SCENARIO_MAXDEPTH)
    point = (PathGenerator.from_prefix(column), PathGenerator.from_prefix(target))
    gamma = honest_gamma(oracle, scaled_slowdown(2))
    return TrimScenario(oracle, CoverSequence(tuple(sets)), gamma, cfg, point, stages, stages + 4)


def coverage_scenarios(count: int = 20) -> list[TrimScenario]:
    """Return the coverage scenarios for seeds `0 … count−1`."""
    return [coverage_scenario(seed) for seed in range(count)]
