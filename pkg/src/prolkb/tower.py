"""
The pro-nilpotent tower Q_r = (Z^2 / 2^(r-2)(1,-1)) x| Z, r >= 2, with t
swapping coordinates, and the layer representations obtained by reducing the
Theta matrices along Z^2 x| Z -> Q_r.

All layers share the normal form of groups.py: at r = 2 a class is represented
by (0, a+b; c), which is the identification Q_2 = Z^2, (a, b; c) -> (a+b, c).
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Callable

from .groups import (
    SWAP,
    GroupDescriptor,
    GroupMorphism,
    laurent_qt_group,
    make_group,
    make_morphism,
    nilpotency_class,
)
from .lkb import (
    THETA,
    sigma_matrix,
    verify_braid_relations,
    word_matrix,
)
from .matrix import RepMatrix, mat_map
from .ring import RingMorphism

DELTA = (1, -1)


@dataclasses.dataclass(frozen=True)
class TowerLayer:
    r: int
    group: GroupDescriptor
    from_theta: GroupMorphism
    step_down: GroupMorphism | None  # Q_r -> Q_{r-1}; None at r = 2

    @property
    def theta_map(self) -> RingMorphism:
        return RingMorphism(self.from_theta)

    @property
    def step_map(self) -> RingMorphism | None:
        return None if self.step_down is None else RingMorphism(self.step_down)


def layer_group(r: int, delta_multiple: int | None = None) -> GroupDescriptor:
    if r < 2:
        raise ValueError("tower layers start at r = 2")
    k = 2 ** (r - 2) if delta_multiple is None else delta_multiple
    return make_group(2, [(k * DELTA[0], k * DELTA[1])], SWAP, 0, name=f"Q{r}")


@functools.lru_cache(maxsize=None)
def make_layer(r: int) -> TowerLayer:
    group = layer_group(r)
    from_theta = make_morphism(THETA, group, [[1, 0], [0, 1]], 1)
    step = None
    if r > 2:
        step = make_morphism(group, make_layer(r - 1).group, [[1, 0], [0, 1]], 1)
    return TowerLayer(r, group, from_theta, step)


def q2_to_abelian() -> GroupMorphism:
    """The isomorphism Q_2 -> Z x Z, (a, b; c) -> (a + b; c)."""
    return make_morphism(make_layer(2).group, laurent_qt_group(), [[1, 1]], 1)


def layer_sigma(n: int, i: int, r: int) -> RepMatrix:
    return mat_map(make_layer(r).theta_map, sigma_matrix(n, i))


def layer_word_matrix(n: int, word, r: int) -> RepMatrix:
    """Word evaluated entirely inside Z[Q_r] (inverses computed there)."""
    return word_matrix(n, word, make_layer(r).theta_map)


def check_tower(n: int, r_max: int, layer: Callable[[int], TowerLayer] = make_layer,
                max_depth: int | None = None) -> dict:
    """
    For 2 <= r <= r_max: nilpotency class of Q_r is r-1 and the braid relations
    hold in Z[Q_r]; for r >= 3 every generator reduces from layer r to layer
    r-1 exactly. `layer` may be replaced to inject faults.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if r_max < 3:
        raise ValueError("need r_max >= 3")
    depth = max_depth if max_depth is not None else r_max + 2
    rows = []
    for r in range(2, r_max + 1):
        lay = layer(r)
        cls = nilpotency_class(lay.group, depth)
        theta_map = RingMorphism(lay.from_theta)
        relations = verify_braid_relations(n, theta_map)["all_pass"]
        squares = None
        if r >= 3:
            down = RingMorphism(lay.step_down)
            below = RingMorphism(layer(r - 1).from_theta)
            squares = all(
                mat_map(down, mat_map(theta_map, sigma_matrix(n, i))) == mat_map(below, sigma_matrix(n, i))
                for i in range(1, n)
            )
        rows.append({
            "r": r,
            "lattice": [list(b) for b in lay.group.lattice],
            "nilpotency_class": cls,
            "class_ok": cls == r - 1,
            "relations_ok": relations,
            "squares_ok": squares,
        })
    ok = all(row["class_ok"] and row["relations_ok"] and row["squares_ok"] is not False for row in rows)
    return {"n": n, "r_max": r_max, "layers": rows, "all_pass": ok}
