"""Syndetic, thick and piecewise syndetic sets on finite semigroups and (N, +)."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AssociativityFailure,
    BoundExceeded,
    EmptyGenerator,
    HypothesisViolation,
    InternalInvariantViolation,
    OutOfRangeEntry,
    PreconditionViolation,
    SemisizeError,
)
from .semigroup import (  # noqa: E402
    KernelReport,
    Semigroup,
    enumerate_semigroups,
    is_ideal,
    is_left_ideal,
    is_right_ideal,
    kernel,
    make_named,
    minimal_left_ideals,
    subsemigroups,
    validate_semigroup,
)
from .stacks import (  # noqa: E402
    FilterKernel,
    PointUltrafilter,
    Stack,
    filter_closure,
    member,
    mesh,
    point,
    stack_product,
    translation_set,
    up_closure,
)
from .size import (  # noqa: E402
    RelativeContext,
    SizeVerdict,
    decompose_pw,
    is_piecewise_syndetic,
    is_pw_rel_syndetic,
    is_pw_rel_syndetic_idem,
    is_rel_syndetic,
    is_rel_thick,
    is_syndetic,
    is_thick,
    ps_family_member_oracle,
    rel_duality_check,
    remark_du_check,
)
from .natsets import (  # noqa: E402
    EventuallyPeriodicSet,
    WindowSet,
    ep_classify,
    factorial_example_window,
    find_ap,
    pws_window_falsify,
)


def preimage_translate(S: Semigroup, h: int, A: int) -> int:
    """``h^{-1}A = {x : h*x in A}``."""
    if not 0 <= h < S.order:
        raise ValueError(f"element {h} not in [0, {S.order})")
    if A >> S.order:
        raise ValueError(f"set does not fit a ground set of size {S.order}")
    return S.preimage(h, A)
