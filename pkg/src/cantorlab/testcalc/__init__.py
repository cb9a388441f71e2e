"""Expectation-bounded tests, their composition constructions and finite-set deficiencies."""

from .code_lengths import (
    CodeLengthProvider,
    EliasOmegaCodeLengths,
    HuffmanCodeLengths,
    UniformCodeLengths,
    elias_omega,
    lz78_phrase_count,
)
from .conditional_family import ConditionalTestFamily
from .constructions import (
    Construction,
    RatioTrim,
    domination_violations,
    minimal_untrimmed_constant,
    product_construction,
    ratio_trim,
    sum_construction,
)
from .deficiency import NEG_INF, DeficiencyField, deficiency
from .expectation import ExpectationTest, Measure, integral, make_test
from .finite_deficiency import KRAFT_CHECK_LIMIT, FiniteDeficiency, all_words, finite_deficiency
from .random_tests import random_family, random_function, random_test

__all__ = [
    "CodeLengthProvider",
    "EliasOmegaCodeLengths",
    "HuffmanCodeLengths",
    "UniformCodeLengths",
    "elias_omega",
    "lz78_phrase_count",
    "ConditionalTestFamily",
    "Construction",
    "RatioTrim",
    "domination_violations",
    "minimal_untrimmed_constant",
    "product_construction",
    "ratio_trim",
    "sum_construction",
    "NEG_INF",
    "DeficiencyField",
    "deficiency",
    "ExpectationTest",
    "Measure",
    "integral",
    "make_test",
    "KRAFT_CHECK_LIMIT",
    "FiniteDeficiency",
    "all_words",
    "finite_deficiency",
    "random_family",
    "random_function",
    "random_test",
]
