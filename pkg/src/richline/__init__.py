"""Richardson elements of classical Lie algebras from line diagrams.

Construction of explicit Richardson elements for standard parabolic
subalgebras of sl_n, sp_2n and so_N, with every claim (Jordan partition,
centralizer dimension, grading bound, Bala-Carter label) verified by exact
integer linear algebra.
"""

from .algebra import (
    AlgebraKind,
    ExactMatrix,
    ParabolicSpec,
    SpecError,
    algebra_basis,
    algebra_dimension,
    elementary,
    grade_of_entry,
    in_nilradical,
    is_member,
    levi_dimension,
    nilradical_basis,
    nilradical_dimension,
    parabolic_basis,
    sl,
    so,
    sp,
    validate_spec,
)
from .diagram import (
    LineDiagram,
    canonical_permutation,
    canonicalize,
    chain_lengths,
    chains,
    count_k_subchains,
    diagram_from_json,
    diagram_to_json,
    even_diagram,
    horizontal_diagram,
    is_simple_diagram,
    odd_diagram,
    permute_blocks,
    render_ascii,
    render_dot,
)
from .nilpotent import (
    Partition,
    centralizer_dimension_direct,
    centralizer_dimension_formula,
    dual_partition,
    jordan_partition,
    rank_exact,
    realize,
)
from .richardson import (
    Exhausted,
    Report,
    SimpleClass,
    SupportData,
    SweepRow,
    bala_carter_label,
    branch_search,
    chain_label,
    classify_simple,
    enumerate_specs,
    is_richardson,
    minimality_probe,
    predicted_dual_partition,
    random_nilradical_element,
    richardson_element,
    s_bound,
    summarize_sweep,
    support,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
