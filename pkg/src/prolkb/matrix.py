"""
Sparse square matrices over a group ring, addressed by basis keys.

Products follow one fixed side convention: C[r][c] = sum_k A[r][k] * B[k][c]
with the A entry on the left. Matrices act on column vectors.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Mapping, Sequence

from .groups import GroupDescriptor
from .ring import (
    RingElement,
    RingMismatch,
    RingMorphism,
    element_from_json,
    element_to_json,
    format_element,
    r_map,
    r_one,
)

Key = Hashable


class NotTriangularizable(ValueError):
    pass


class NonUnitDiagonal(ValueError):
    pass


class RepMatrix:
    __slots__ = ("group", "keys", "entries", "_index")

    def __init__(self, group: GroupDescriptor, keys: Sequence[Key],
                 entries: Mapping[tuple[Key, Key], RingElement] | None = None):
        self.group = group
        self.keys = tuple(keys)
        self._index = {k: i for i, k in enumerate(self.keys)}
        if len(self._index) != len(self.keys):
            raise ValueError("duplicate basis keys")
        self.entries = {}
        for (r, c), x in (entries or {}).items():
            if r not in self._index or c not in self._index:
                raise KeyError(f"entry ({r}, {c}) uses a key outside the basis")
            if x.group != group:
                raise RingMismatch("matrix entry lives in a different ring")
            if x.terms:
                self.entries[r, c] = x

    def __getitem__(self, rc: tuple[Key, Key]) -> RingElement:
        x = self.entries.get(rc)
        if x is None:
            if rc[0] not in self._index or rc[1] not in self._index:
                raise KeyError(rc)
            return RingElement(self.group)
        return x

    def index(self, key: Key) -> int:
        return self._index[key]

    def columns(self) -> dict[Key, dict[Key, RingElement]]:
        cols: dict[Key, dict[Key, RingElement]] = defaultdict(dict)
        for (r, c), x in self.entries.items():
            cols[c][r] = x
        return cols

    def rows(self) -> dict[Key, dict[Key, RingElement]]:
        rows: dict[Key, dict[Key, RingElement]] = defaultdict(dict)
        for (r, c), x in self.entries.items():
            rows[r][c] = x
        return rows

    def sorted_entries(self):
        idx = self._index
        return sorted(self.entries.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]]))

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return mat_equal(self, other)

    __hash__ = None

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"RepMatrix({len(self.keys)}x{len(self.keys)} over {self.group}, {len(self.entries)} nonzero)"


def _check(a: RepMatrix, b: RepMatrix):
    if a.group != b.group:
        raise RingMismatch("matrices live over different rings")
    if set(a.keys) != set(b.keys):
        raise ValueError("matrices have different basis keys")


def mat_identity(group: GroupDescriptor, keys: Sequence[Key]) -> RepMatrix:
    one = r_one(group)
    return RepMatrix(group, keys, {(k, k): one for k in keys})


def mat_mul(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    _check(a, b)
    a_cols = a.columns()
    acc: dict[tuple[Key, Key], RingElement] = {}
    for (k, c), y in b.entries.items():
        col = a_cols.get(k)
        if not col:
            continue
        for r, x in col.items():
            p = x * y
            prev = acc.get((r, c))
            acc[r, c] = p if prev is None else prev + p
    return RepMatrix(a.group, a.keys, acc)


def mat_map(phi: RingMorphism, a: RepMatrix) -> RepMatrix:
    if a.group != phi.source:
        raise RingMismatch("matrix is not over the source ring of the morphism")
    return RepMatrix(phi.target, a.keys, {rc: r_map(phi, x) for rc, x in a.entries.items()})


def mat_equal(a: RepMatrix, b: RepMatrix) -> bool:
    _check(a, b)
    return a.entries == b.entries


def mat_apply(a: RepMatrix, vector: Mapping[Key, RingElement]) -> dict[Key, RingElement]:
    """(A v)[r] = sum_c A[r][c] v[c]; zero components are dropped."""
    for k, x in vector.items():
        if k not in a._index:
            raise KeyError(k)
        if x.group != a.group:
            raise RingMismatch("vector entry lives in a different ring")
    out: dict[Key, RingElement] = {}
    for (r, c), x in a.entries.items():
        vc = vector.get(c)
        if vc is None:
            continue
        p = x * vc
        out[r] = p if r not in out else out[r] + p
    return {k: x for k, x in out.items() if x.terms}


def triangular_order(a: RepMatrix) -> list[Key]:
    """
    Greedy key order under which `a` is upper triangular: each selected column
    only has nonzero rows that were selected before it (or itself).
    """
    cols = a.columns()
    remaining = list(a.keys)
    chosen: list[Key] = []
    seen: set[Key] = set()
    while remaining:
        for pos, c in enumerate(remaining):
            if all(r in seen or r == c for r in cols.get(c, ())):
                break
        else:
            raise NotTriangularizable(f"no admissible column among {len(remaining)} remaining keys")
        chosen.append(c)
        seen.add(c)
        del remaining[pos]
    return chosen


def mat_invert_unit_triangularizable(a: RepMatrix) -> RepMatrix:
    """
    Two-sided inverse of a matrix that is triangular, in some key order, with
    diagonal entries of the form +-g.
    """
    order = triangular_order(a)
    pos = {k: i for i, k in enumerate(order)}
    rows = a.rows()
    unit_inv = {}
    for k in order:
        d = a.entries.get((k, k))
        inv = d.unit_inverse() if d is not None else None
        if inv is None:
            raise NonUnitDiagonal(f"diagonal entry at {k} is {d if d is not None else 0}, not +-g")
        unit_inv[k] = inv
    # row j of A X = e_c:  A[j][j] X[j][c] = delta_jc - sum_{pos k > pos j} A[j][k] X[k][c]
    off_diag = {j: [(k, x) for k, x in rows.get(j, {}).items() if k != j] for j in order}
    one = r_one(a.group)
    out: dict[tuple[Key, Key], RingElement] = {}
    for c in order:
        col: dict[Key, RingElement] = {}
        for j in reversed(order[: pos[c] + 1]):
            rhs = one if j == c else RingElement(a.group)
            for k, x in off_diag[j]:
                xk = col.get(k)
                if xk is not None:
                    rhs = rhs - x * xk
            if rhs.terms:
                col[j] = unit_inv[j] * rhs
        for j, x in col.items():
            out[j, c] = x
    return RepMatrix(a.group, a.keys, out)


# -- serialization ----------------------------------------------------------

def matrix_to_json(a: RepMatrix, n: int | None = None) -> dict:
    return {
        "n": n,
        "ring": a.group.to_json(),
        "keys": [list(k) for k in a.keys],
        "entries": [[list(r), list(c), element_to_json(x)] for (r, c), x in a.sorted_entries()],
    }


def matrix_from_json(data: dict) -> RepMatrix:
    group = GroupDescriptor.from_json(data["ring"])
    keys = [tuple(k) for k in data["keys"]]
    entries = {(tuple(r), tuple(c)): element_from_json(group, x) for r, c, x in data["entries"]}
    return RepMatrix(group, keys, entries)


def _key_tex(k: Key) -> str:
    return "".join(map(str, k)) if isinstance(k, tuple) else str(k)


def matrix_to_latex(a: RepMatrix) -> str:
    """Display-only rendering; JSON is the lossless format."""
    head = " & ".join(_key_tex(k) for k in a.keys)
    lines = [
        r"\begin{array}{c|" + "c" * len(a.keys) + "}",
        " & " + head + r" \\ \hline",
    ]
    for r in a.keys:
        cells = [format_element(a[r, c]) for c in a.keys]
        lines.append(_key_tex(r) + " & " + " & ".join(cells) + r" \\")
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"

