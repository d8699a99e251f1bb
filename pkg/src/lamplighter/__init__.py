"""Word metrics of the lamplighter group under the wreath and automata generating sets."""

from .core import (
    Flavor,
    GenSet,
    Generator,
    GroupElement,
    NormalForm,
    Word,
    apply_generator,
    cursor_of_word,
    evaluate,
    from_normal_form,
    invert,
    multiply,
    prefix_states,
    to_normal_form,
)
from .metrics import (
    Branch,
    BudgetExceededError,
    GeodesicCountReport,
    LengthReport,
    automata_length,
    build_geodesic,
    check_left_light,
    count_geodesics,
    distance,
    length,
    wreath_length,
)
from .oracle import (
    BallTable,
    EncodedElement,
    OutOfBallError,
    ResourceLimitError,
    build_ball,
    escape_depth,
    oracle_geodesic_count,
    oracle_length,
    sphere_sizes,
)
from .phenomena import (
    DeadEndReport,
    SeesawLikeReport,
    SeesawReport,
    dead_end_depth,
    is_dead_end,
    is_seesaw,
    make_dm,
    make_wk,
    seesaw_like_check,
    seesaw_scan,
)

__version__ = "0.1.0"
