"""Exact computations in Lipschitz-free spaces over finite pointed metric spaces."""

from .deleeuw import (
    DeLeeuwMeasure,
    adjoint,
    de_leeuw,
    dirac,
    jordan,
    measure,
    minimal_representation,
    reflect,
    shadow,
    support_inclusion_check,
    symmetrize,
    weighted_restriction,
)
from .errors import LipfreeError
from .extremal import (
    UNBOUNDED,
    ExtremalityCertificate,
    Verdict,
    bump_weight,
    enumerate_extreme,
    is_extreme_molecule,
    is_extreme_oracle,
    localize,
    strongly_exposed_constant,
)
from .free_element import (
    FreeElement,
    LipschitzFunction,
    delta,
    from_weights,
    lip_norm,
    molecule,
    pair,
    support,
)
from .kr_solver import NormSolution, free_norm, verify_solution
from .metric_space import FiniteMetricSpace, build, chain_space, line_space, random_space

__version__ = "0.1.0"
