"""
A compatible sequence in lim_r Z[Z/2^(r-1) x| Z] that is not the image of any
single element of Z[Z_2^ x| Z] (Z_2^ the 2-adic integers).

With x the generator of Z/2^(r-1) and t acting by inversion,

    f_r = sum_{i=0}^{r-2} (x^(2^i) - 1).

Reducing modulo 2^(r-2) kills x^(2^(r-2)) - 1 and fixes the other summands,
so the sequence is compatible. Two equivalent obstructions to lifting it:

* exponents: x^(2^i) needs i+1 binary digits, and i is unbounded;
* support: |supp f_r| = r grows without bound, while a ring map induced by a
  group map never increases support size, so a preimage f would need
  |supp f| >= r for every r.

The second is what `cx_certificate` checks, since it needs no 2-adic arithmetic.
"""

from __future__ import annotations

from typing import Callable

from .groups import GroupDescriptor, GroupElement, make_group, make_morphism
from .ring import RingElement, RingMorphism, r_map, r_support_size


def cx_group(r: int) -> GroupDescriptor:
    """Z/2^(r-1) x| Z, the r-th lower central quotient of Z x| Z."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return make_group(1, [[2 ** (r - 1)]], [[-1]], 0, name=f"Z/{2 ** (r - 1)}xZ")


def cx_truncation(r: int) -> RingMorphism:
    """Z[Z/2^(r-1) x| Z] -> Z[Z/2^(r-2) x| Z], dropping the leading binary digit."""
    if r < 3:
        raise ValueError("truncation is defined for r >= 3")
    return RingMorphism(make_morphism(cx_group(r), cx_group(r - 1), [[1]], 1))


def cx_f(r: int) -> RingElement:
    group = cx_group(r)
    terms: dict[GroupElement, int] = {group.identity: -(r - 1)}
    for i in range(r - 1):
        terms[GroupElement((2 ** i,), 0)] = 1
    return RingElement(group, terms)


def cx_certificate(r_max: int, f: Callable[[int], RingElement] = cx_f) -> dict:
    if r_max < 3:
        raise ValueError("r_max must be at least 3")
    layers = []
    for r in range(2, r_max + 1):
        fr = f(r)
        compatible = True if r == 2 else r_map(cx_truncation(r), fr) == f(r - 1)
        layers.append({"r": r, "support_size": r_support_size(fr), "compatible": compatible})
    sizes = [row["support_size"] for row in layers]
    all_compatible = all(row["compatible"] for row in layers)
    growing = all(a < b for a, b in zip(sizes, sizes[1:]))
    if all_compatible and growing:
        conclusion = (
            f"compatible at every layer up to r={r_max}; support sizes grow strictly "
            f"({sizes[0]} -> {sizes[-1]}), and truncations never enlarge support, "
            "so no single finite-support element maps onto the whole sequence"
        )
    elif not all_compatible:
        bad = [row["r"] for row in layers if not row["compatible"]]
        conclusion = f"sequence is not compatible at r={bad}"
    else:
        conclusion = "support sizes do not grow strictly; no obstruction certified"
    return {
        "r_max": r_max,
        "layers": layers,
        "compatible": all_compatible,
        "strictly_increasing": growing,
        "conclusion": conclusion,
    }
