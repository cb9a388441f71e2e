from .grid_oracle import GridOracle
from .kernel_measure import KernelMeasure, from_kernel
from .measure_oracle import ExactMeasureOracle, MeasureOracle
from .oscillating_measure import OscillatingMeasure, oscillating
from .perturbed_oracle import PerturbedOracle
from .product_measure import ProductMeasure, product, uniform
from .rounded_oracle import RoundedOracle
from .segments_measure import SegmentsMeasure, segments
from .staircase_measure import StaircaseMeasure, staircase
