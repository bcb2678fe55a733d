"""Exact word metrics, geodesics and dead-end/seesaw/convexity phenomena in
lamplighter groups L_n and wreath products G wr Z, with a brute-force
Cayley-graph oracle."""

from .elements import (
    GenLetter,
    LnElement,
    LnParams,
    apply_gen,
    eval_word,
    format_word,
    invert,
    mirror,
    parse_word,
)
from .finite_group import (
    FiniteGroupTable,
    cyclic_group,
    group_geodesic,
    is_dead_end_in_group,
    load_group_file,
)
from .metric import emit_geodesic, enumerate_geodesics, lamp_cost, normal_form, word_length_D
from .wreath import (
    WreathElement,
    lift_dead_end_family,
    wreath_apply,
    wreath_emit_geodesic,
    wreath_length_D,
)

__version__ = "0.1.0"
