"""
The three-variable Lawrence-Krammer-Bigelow representation over
Theta = Z[Z^2 x| Z], with q1 = x^(1,0), q2 = x^(0,1) and t q1 = q2 t.

The module is free on (n-1)-tuples of non-negative integers summing to 2.
sigma_i only touches the coordinates at positions i-1, i, i+1 (1-indexed) and
acts there by one of three local blocks:

* the 6x6 block when those positions hold both units,
* the 3x3 block in q2 when the remaining unit sits at a position <= i-2,
* the 3x3 block in q1 when the remaining unit sits at a position >= i+2,

and trivially when the three positions are all zero. Generators act on column
vectors and a braid word is evaluated as the left-to-right product of its
letters' matrices.
"""

from __future__ import annotations

import functools
import math
from typing import Callable, Iterator, Sequence

from .groups import (
    GroupDescriptor,
    GroupElement,
    laurent_qt_group,
    make_morphism,
    theta_group,
)
from .matrix import (
    RepMatrix,
    mat_identity,
    mat_invert_unit_triangularizable,
    mat_map,
    mat_mul,
)
from .ring import RingElement, RingMorphism, r_one

THETA = theta_group()
CLASSICAL = laurent_qt_group()
# q1, q2 -> q and t -> t
THETA_TO_CLASSICAL = RingMorphism(make_morphism(THETA, CLASSICAL, [[1, 1]], 1))

BraidWord = tuple[int, ...]


def theta_generators() -> tuple[RingElement, RingElement, RingElement, RingElement]:
    """(1, q1, q2, t) in Theta."""
    one = r_one(THETA)
    q1 = RingElement(THETA, {GroupElement((1, 0), 0): 1})
    q2 = RingElement(THETA, {GroupElement((0, 1), 0): 1})
    t = RingElement(THETA, {GroupElement((0, 0), 1): 1})
    return one, q1, q2, t


def _blocks():
    one, q1, q2, t = theta_generators()
    # column -> {row: entry}; local triples are (x, y, z) with y at position i
    six = {
        (1, 0, 1): {(1, 0, 1): one, (1, 1, 0): q2, (0, 2, 0): (one - t) * q2, (0, 1, 1): one},
        (2, 0, 0): {(2, 0, 0): one, (1, 1, 0): one, (0, 2, 0): one},
        (1, 1, 0): {(1, 1, 0): -q2, (0, 2, 0): (t - one) * q2},
        (0, 2, 0): {(0, 2, 0): -t * q1 * q2},
        (0, 1, 1): {(0, 2, 0): (t - one) * q1 * q2, (0, 1, 1): -q1},
        (0, 0, 2): {(0, 2, 0): q1 * q2, (0, 1, 1): q1, (0, 0, 2): one},
    }

    def three(q):
        return {
            (1, 0, 0): {(1, 0, 0): one, (0, 1, 0): one},
            (0, 1, 0): {(0, 1, 0): -q},
            (0, 0, 1): {(0, 1, 0): q, (0, 0, 1): one},
        }

    # A unit left of the window pairs with q2, one right of it with q1. The
    # opposite pairing already breaks sigma_1 sigma_3 = sigma_3 sigma_1 at n=4.
    return six, three(q2), three(q1)


SIX_BLOCK, LEFT_BLOCK, RIGHT_BLOCK = _blocks()


# -- basis ------------------------------------------------------------------

def _compositions(parts: int, total: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(parts - 1, total - first):
            yield (first,) + rest


def enumerate_basis(n: int, k: int = 2) -> list[tuple[int, ...]]:
    """
    All (n-1)-tuples of non-negative integers summing to k, ordered
    lexicographically from the largest first entry down, e.g. for n=4, k=2:
    200, 110, 101, 020, 011, 002.
    """
    if n < 2:
        raise ValueError("need at least 2 strands")
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(_compositions(n - 1, k))


def basis_rank(n: int, k: int = 2) -> int:
    return math.comb(n + k - 2, k)


# -- generator matrices -----------------------------------------------------

def _check_generator(n: int, i: int):
    if n < 3:
        raise ValueError("the representation is only defined here for n >= 3")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def _column_image(n: int, i: int, col: tuple[int, ...]) -> dict[tuple[int, ...], RingElement]:
    window = [p for p in (i - 1, i, i + 1) if 1 <= p <= n - 1]
    local = tuple(col[p - 1] if 1 <= p <= n - 1 else 0 for p in (i - 1, i, i + 1))
    weight = sum(local)
    if weight == 0:
        return {col: r_one(THETA)}
    if weight == 2:
        block = SIX_BLOCK
    else:
        other = next(p for p in range(1, n) if col[p - 1] and p not in window)
        block = LEFT_BLOCK if other <= i - 2 else RIGHT_BLOCK
    out = {}
    for row_local, entry in block[local].items():
        row = list(col)
        for p, val in zip((i - 1, i, i + 1), row_local):
            if 1 <= p <= n - 1:
                row[p - 1] = val
            elif val:
                raise AssertionError(f"block leaves the basis at sigma_{i}, n={n}")
        out[tuple(row)] = entry
    return out


@functools.lru_cache(maxsize=None)
def sigma_matrix(n: int, i: int) -> RepMatrix:
    """The matrix of sigma_i on the rank C(n,2) module over Theta."""
    _check_generator(n, i)
    keys = enumerate_basis(n, 2)
    entries = {}
    for col in keys:
        for row, x in _column_image(n, i, col).items():
            entries[row, col] = x
    return RepMatrix(THETA, keys, entries)


@functools.lru_cache(maxsize=None)
def generator_matrix(n: int, letter: int, target: RingMorphism | None = None) -> RepMatrix:
    """
    Matrix of sigma_|letter|^(+-1), optionally pushed along a ring morphism
    out of Theta. Inverses are computed in the target ring.
    """
    if letter == 0:
        raise ValueError("0 is not a braid generator")
    base = sigma_matrix(n, abs(letter))
    if target is not None:
        base = mat_map(target, base)
    return base if letter > 0 else mat_invert_unit_triangularizable(base)


def ring_of(target: RingMorphism | None) -> GroupDescriptor:
    return THETA if target is None else target.target


def parse_word(text: str) -> BraidWord:
    """'1 -2 3' -> (1, -2, 3). The unicode minus sign is accepted too."""
    return tuple(int(tok) for tok in text.replace("−", "-").replace(",", " ").split())


def check_word(n: int, word: Sequence[int]) -> BraidWord:
    word = tuple(word)
    for letter in word:
        if not 1 <= abs(letter) <= n - 1:
            raise ValueError(f"letter {letter} is not a generator of B_{n}")
    return word


def word_matrix(n: int, word: Sequence[int], target: RingMorphism | None = None,
                generator: Callable[[int, int], RepMatrix] | None = None) -> RepMatrix:
    """Left-to-right product of generator matrices; the empty word gives I."""
    word = check_word(n, word)
    if generator is None:
        result = mat_identity(ring_of(target), enumerate_basis(n, 2))
        for letter in word:
            result = mat_mul(result, generator_matrix(n, letter, target))
        return result
    result = mat_identity(generator(n, 1).group, enumerate_basis(n, 2))
    for letter in word:
        result = mat_mul(result, generator(n, letter))
    return result


def braid_relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    rels = []
    for i in range(1, n - 1):
        rels.append(("braid", (i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(("commute", (i, j), (j, i)))
    return rels


def verify_braid_relations(n: int, target: RingMorphism | None = None,
                           generator: Callable[[int, int], RepMatrix] | None = None) -> dict:
    """
    Check every braid and far-commutation relation of B_n on the generator
    matrices. `generator(n, letter)` overrides the matrices (used for fault
    injection); it only needs to handle positive letters.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if generator is None:
        sigma_matrix.cache_clear()
        generator_matrix.cache_clear()
    results = []
    for kind, lhs, rhs in braid_relations(n):
        holds = word_matrix(n, lhs, target, generator) == word_matrix(n, rhs, target, generator)
        results.append({
            "kind": kind,
            "lhs": list(lhs),
            "rhs": list(rhs),
            "holds": holds,
        })
    return {
        "n": n,
        "ring": ring_of(target).name,
        "relations": results,
        "all_pass": all(r["holds"] for r in results),
    }


def braid_equal(n: int, w1: Sequence[int], w2: Sequence[int]) -> bool:
    """Equality in B_n, decided by comparing images over Theta (a faithful representation)."""
    return word_matrix(n, w1) == word_matrix(n, w2)


@functools.lru_cache(maxsize=None)
def classical_matrix(n: int, i: int) -> RepMatrix:
    """sigma_i with q1 = q2 = q, over the commutative ring Z[q^+-1, t^+-1]."""
    return mat_map(THETA_TO_CLASSICAL, sigma_matrix(n, i))
