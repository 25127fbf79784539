"""Integer partitions: self-conjugacy from multiplicities, nest-and-egg shapes, and p(n) three ways."""

from .partition import (
    EMPTY,
    MultiplicityForm,
    Partition,
    add,
    conjugate,
    dimension,
    from_multiplicities,
    from_parts,
    from_unordered,
    is_self_conjugate_oracle,
    render_ferrers,
    render_young,
    split_contiguous,
    to_multiplicities,
)
from .selfconjugate import (
    area_balance,
    check_size_equality,
    classify_shape,
    decompose_nest_egg,
    is_self_conjugate,
    is_self_conjugate_theorem,
    recompose,
    remove_outer_frame,
)
from .series import p_exact, p_exact_recurrence
from .pfn import rademacher_p

__version__ = "0.1.0"
