from hypothesis import strategies as st

from prolkb.counterexample import cx_group
from prolkb.groups import (
    make_group,
    normalize,
    theta_group,
    zxz_group,
)
from prolkb.tower import make_layer


def shipped_groups():
    return {
        "theta": theta_group(),
        "Q2": make_layer(2).group,
        "Q3": make_layer(3).group,
        "Q5": make_layer(5).group,
        "Z4xZ": cx_group(3),
        "ZxZ": zxz_group(),
        "Z3xZ/2": make_group(3, [[0, 0, 6]], [[0, 1, 0], [1, 0, 0], [0, 0, -1]], 2),
    }


GROUPS = shipped_groups()


def elements(group, bound=4, twist=3):
    """Hypothesis strategy for normal-form elements of `group`."""
    vec = st.tuples(*[st.integers(-bound, bound)] * group.m)
    return st.builds(lambda v, c: normalize(group, v, c), vec, st.integers(-twist, twist))
