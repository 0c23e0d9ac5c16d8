"""SU(N)/SL(N,C) Clebsch-Gordan coefficients in the Gelfand-Tsetlin basis.

Irreps are labeled by nonincreasing integer tuples, their states by
triangular Gelfand-Tsetlin patterns.  The package decomposes tensor
products via the Littlewood-Richardson rule, builds ladder operator
matrices from the pattern calculus, and computes complete real
coefficient tables with outer multiplicities resolved by an echelon
normal form.  Hot kernels are numba-compiled by default; set
SUNCG_BACKEND=python to force the pure-Python fallback.
"""

from ._kernels import BACKEND
from .algebra import (
    OperatorMatrix,
    lowering_element,
    operator_matrix,
    raising_element,
    weight_shift,
)
from .clebsch import (
    CGCTensor,
    ConsistencyError,
    candidate_pairs,
    compute_all_tensors,
    compute_tensor,
    highest_weight_cgc,
)
from .littlewood import Decomposition, decompose, multiplicity, pattern_trace
from .patterns import (
    GTPattern,
    PatternTable,
    YoungTableau,
    enumerate_patterns,
    from_tableau,
    highest,
    lowest,
    pweight,
    to_tableau,
    validate,
    zweight2,
)
from .verify import (
    CheckReport,
    check_block_diagonalization,
    check_dimension_sum,
    check_orthonormality,
    check_selection_rule,
    run_all,
    stack_coefficients,
)
from .weights import dimension, normalize

__all__ = [
    "BACKEND",
    "CGCTensor",
    "CheckReport",
    "ConsistencyError",
    "Decomposition",
    "GTPattern",
    "OperatorMatrix",
    "PatternTable",
    "YoungTableau",
    "candidate_pairs",
    "check_block_diagonalization",
    "check_dimension_sum",
    "check_orthonormality",
    "check_selection_rule",
    "compute_all_tensors",
    "compute_tensor",
    "decompose",
    "dimension",
    "enumerate_patterns",
    "from_tableau",
    "highest",
    "highest_weight_cgc",
    "lowest",
    "lowering_element",
    "multiplicity",
    "normalize",
    "operator_matrix",
    "pattern_trace",
    "pweight",
    "raising_element",
    "run_all",
    "stack_coefficients",
    "to_tableau",
    "validate",
    "weight_shift",
    "zweight2",
]

__version__ = "0.1.0"
