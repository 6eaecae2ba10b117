"""Exact symmetrized determinants over finite-dimensional associative algebras."""

from .algebra import (
    AlgElement,
    Algebra,
    CycleAlgebra,
    FreeAlgebra,
    MatrixAlgebra,
    StructureConstantAlgebra,
    TensorAlgebra,
    builtin_algebra,
    check_algebra,
    cycle_algebra,
    free_algebra,
    instantiate_cycle_algebra,
    matrix_algebra,
    tensor,
)
from .core import (
    InvariantError,
    SizeCutoffError,
    SymdetError,
    inversion_count,
    mixed_inversion_count,
    sign,
)
from .cyclecount import (
    Graph,
    all_cycle_counts,
    brute_force_cycle_count,
    build_mg,
    hamiltonian_count,
    k_cycle_count,
)
from .gadgets import (
    Add,
    Const,
    Mul,
    Var,
    WeightedDigraph,
    boolean_sum_pipeline,
    dag_to_hc_graph,
    enumerate_hc_poly,
    formula_to_layered_dag,
    glue,
    rosette,
    single_occurrence_boolean_sum,
)
from .ncpoly import CPoly, NCPoly, commutative_image, pit_matrix_eval
from .sdet import (
    AlgMatrix,
    cdet,
    pme_sum,
    principal_submatrix,
    sdet,
    sdet_by_rows,
    sdet_fast,
    sdet_naive,
)
from .vnpred import (
    build_vnp_matrix,
    extract_hc,
    family_monomial_coeff,
    family_monomial_coeff_exact,
    hc_direct,
    sdet_family,
)

__version__ = "0.1.0"
