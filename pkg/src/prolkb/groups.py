"""
Normal-form arithmetic in groups of the form (Z^m / L) x|_M Z_d.

An element is stored as a pair (v, c) meaning x^v * t^c, with the lattice part
written first. Multiplication is

    (v1, c1) * (v2, c2) = (v1 + M^c1 v2, c1 + c2),

followed by reduction of v modulo L (against the Hermite basis of L) and of c
modulo d when d > 0. Negative powers of M use its integer inverse.

The family contains every group used by the package:

    Z^2 x| Z                 m=2, L=0, M=swap         (ground group of Theta)
    (Z^2 / 2^(r-2)(1,-1)) x| Z                        (tower layer Q_r)
    Z/2^(r-1) x| Z           m=1, M=(-1)              (lower central quotients of Z x| Z)
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import NamedTuple, Sequence

Vector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


class GroupError(ValueError):
    """Raised for an inconsistent group or morphism description."""


class GroupElement(NamedTuple):
    v: Vector
    c: int

    def sort_key(self):
        return (self.c, self.v)

    def __str__(self):
        return f"({','.join(map(str, self.v))};{self.c})"


# -- small exact integer linear algebra -------------------------------------

def _identity(m: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _matvec(a: IntMatrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _determinant(a: IntMatrix) -> int:
    # Bareiss fraction-free elimination
    m = len(a)
    if m == 0:
        return 1
    rows = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(m - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, m) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[m - 1][m - 1]


def _inverse_unimodular(a: IntMatrix) -> IntMatrix:
    m = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)]
           for i, row in enumerate(a)]
    for col in range(m):
        piv = next(i for i in range(col, m) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    out = []
    for row in aug:
        entries = row[m:]
        assert all(x.denominator == 1 for x in entries)
        out.append(tuple(int(x) for x in entries))
    return tuple(out)


def _pivot(vec: Sequence[int]) -> int:
    return next(i for i, x in enumerate(vec) if x != 0)


def hermite_basis(vectors: Sequence[Sequence[int]], m: int) -> IntMatrix:
    """
    Echelon (Hermite) basis of the sublattice of Z^m spanned by `vectors`.

    Basis vectors have strictly increasing pivot positions, positive pivots,
    and every entry sitting above another vector's pivot lies in [0, pivot).
    The result depends only on the lattice, not on the spanning set.
    """
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != m:
            raise GroupError(f"lattice vector {v} does not have length {m}")
    basis: list[list[int]] = []
    for col in range(m):
        if not rows:
            break
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        p = live[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        rows = rest
    for i, b in enumerate(basis):
        piv = _pivot(b)
        for j in range(i):
            q = basis[j][piv] // b[piv]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], b)]
    return tuple(tuple(b) for b in basis)


def reduce_vector(basis: IntMatrix, v: Sequence[int]) -> Vector:
    """Canonical residue of v modulo the lattice with Hermite basis `basis`."""
    out = list(v)
    for b in basis:
        p = _pivot(b)
        q = out[p] // b[p]
        if q:
            out = [x - q * y for x, y in zip(out, b)]
    return tuple(out)


# -- groups -----------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class GroupDescriptor:
    """The group (Z^m / L) x|_M Z_d. Build instances with `make_group`."""

    m: int
    lattice: IntMatrix          # Hermite basis of L
    action: IntMatrix           # M, the action of the twist generator t
    twist_modulus: int          # d; 0 means t has infinite order
    name: str = dataclasses.field(default="", compare=False)
    _powers: dict = dataclasses.field(default_factory=dict, compare=False, repr=False)

    @property
    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.m, 0)

    def power(self, c: int) -> IntMatrix:
        """M^c (c may be negative)."""
        cache = self._powers
        mat = cache.get(c)
        if mat is not None:
            return mat
        if not cache:
            cache[0] = _identity(self.m)
            cache[1] = self.action
            cache[-1] = _inverse_unimodular(self.action)
        step = 1 if c > 0 else -1
        k = c
        while k not in cache:
            k -= step
        while k != c:
            cache[k + step] = _matmul(cache[step], cache[k])
            k += step
        return cache[c]

    def act(self, c: int, v: Sequence[int]) -> Vector:
        return _matvec(self.power(c), v)

    def reduce(self, v: Sequence[int]) -> Vector:
        if not self.lattice:
            return tuple(v)
        return reduce_vector(self.lattice, v)

    def contains(self, v: Sequence[int]) -> bool:
        """Whether v lies in L."""
        return not any(self.reduce(v))

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        w = self.act(a.c, b.v) if a.c else b.v
        v = tuple(x + y for x, y in zip(a.v, w))
        if self.lattice:
            v = reduce_vector(self.lattice, v)
        c = a.c + b.c
        if self.twist_modulus:
            c %= self.twist_modulus
        return GroupElement(v, c)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "m": self.m,
            "lattice": [list(b) for b in self.lattice],
            "action": [list(r) for r in self.action],
            "twist_modulus": self.twist_modulus,
            "normal_form": "x^v t^c; v reduced against the Hermite basis of the lattice",
        }

    @classmethod
    def from_json(cls, data: dict) -> GroupDescriptor:
        return make_group(data["m"], data["lattice"], data["action"],
                          data["twist_modulus"], name=data.get("name", ""))

    def __str__(self):
        return self.name or f"G(m={self.m}, L={self.lattice}, M={self.action}, d={self.twist_modulus})"


def make_group(m: int, lattice_generators: Sequence[Sequence[int]],
               action_matrix: Sequence[Sequence[int]], twist_modulus: int = 0,
               name: str = "") -> GroupDescriptor:
    """Validate and build a descriptor for (Z^m / L) x|_M Z_d."""
    if m < 1:
        raise GroupError("lattice rank must be positive")
    action = tuple(tuple(int(x) for x in row) for row in action_matrix)
    if len(action) != m or any(len(row) != m for row in action):
        raise GroupError(f"action matrix must be {m}x{m}")
    if _determinant(action) not in (1, -1):
        raise GroupError("action matrix is not unimodular")
    if twist_modulus < 0:
        raise GroupError("twist modulus must be non-negative")
    lattice = hermite_basis([tuple(int(x) for x in g) for g in lattice_generators], m)
    group = GroupDescriptor(m, lattice, action, twist_modulus, name)
    inv = group.power(-1)
    for b in lattice:
        if not (group.contains(_matvec(action, b)) and group.contains(_matvec(inv, b))):
            raise GroupError("action matrix does not preserve the lattice")
    if twist_modulus:
        md = group.power(twist_modulus)
        for j in range(m):
            e = tuple(int(i == j) for i in range(m))
            if not group.contains(tuple(x - y for x, y in zip(_matvec(md, e), e))):
                raise GroupError("M^d is not the identity on Z^m/L")
    return group


def normalize(group: GroupDescriptor, raw_v: Sequence[int], raw_c: int) -> GroupElement:
    if len(raw_v) != group.m:
        raise GroupError(f"expected a vector of length {group.m}, got {len(raw_v)}")
    c = raw_c % group.twist_modulus if group.twist_modulus else raw_c
    return GroupElement(group.reduce(tuple(int(x) for x in raw_v)), int(c))


def gmul(group: GroupDescriptor, a: GroupElement, b: GroupElement) -> GroupElement:
    return group.mul(a, b)


def ginv(group: GroupDescriptor, a: GroupElement) -> GroupElement:
    """(v, c)^-1 = (-M^-c v, -c)."""
    w = group.act(-a.c, a.v)
    return normalize(group, tuple(-x for x in w), -a.c)


def commutator(group: GroupDescriptor, a: GroupElement, b: GroupElement) -> GroupElement:
    """[a, b] = a b a^-1 b^-1."""
    return group.mul(group.mul(group.mul(a, b), ginv(group, a)), ginv(group, b))


# -- morphisms --------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class GroupMorphism:
    source: GroupDescriptor
    target: GroupDescriptor
    lattice_map: IntMatrix
    twist_map: int

    def __call__(self, a: GroupElement) -> GroupElement:
        return apply_morphism(self, a)


def make_morphism(source: GroupDescriptor, target: GroupDescriptor,
                  lattice_map: Sequence[Sequence[int]], twist_map: int) -> GroupMorphism:
    """
    Build the morphism (v, c) -> (A v, k c), rejecting maps that are not
    well defined or not equivariant.
    """
    a = tuple(tuple(int(x) for x in row) for row in lattice_map)
    if len(a) != target.m or any(len(row) != source.m for row in a):
        raise GroupError(f"lattice map must be {target.m}x{source.m}")
    for b in source.lattice:
        if not target.contains(_matvec(a, b)):
            raise GroupError("lattice map does not send L_source into L_target")
    lhs = _matmul(a, source.action)
    rhs = _matmul(target.power(twist_map), a)
    for j in range(source.m):
        col = tuple(lhs[i][j] - rhs[i][j] for i in range(target.m))
        if not target.contains(col):
            raise GroupError("lattice map is not equivariant for the twist actions")
    if source.twist_modulus:
        wrap = source.twist_modulus * twist_map
        if target.twist_modulus:
            if wrap % target.twist_modulus:
                raise GroupError("twist map is not defined on Z/d_source")
        elif wrap:
            raise GroupError("twist map sends a torsion generator to infinite order")
    return GroupMorphism(source, target, a, int(twist_map))


def apply_morphism(phi: GroupMorphism, a: GroupElement) -> GroupElement:
    return normalize(phi.target, _matvec(phi.lattice_map, a.v), phi.twist_map * a.c)


def compose(second: GroupMorphism, first: GroupMorphism) -> GroupMorphism:
    """second o first."""
    if first.target != second.source:
        raise GroupError("morphisms are not composable")
    return make_morphism(first.source, second.target,
                         _matmul(second.lattice_map, first.lattice_map),
                         second.twist_map * first.twist_map)


# -- lower central series ---------------------------------------------------

def lcs_layer(group: GroupDescriptor, j: int) -> IntMatrix:
    """
    Hermite basis of the lattice K_j + L, where Gamma_j = (K_j + L)/L.

    Gamma_1 is the whole group (returned as the full lattice Z^m; the twist
    factor is not part of the answer). For j >= 2 the term lies inside the
    lattice factor and Gamma_{j+1} = (M - I) Gamma_j + L.
    """
    if j < 1:
        raise ValueError("lower central series is indexed from 1")
    m = group.m
    current = hermite_basis(list(_identity(m)) + list(group.lattice), m)
    shift = tuple(tuple(group.action[r][s] - int(r == s) for s in range(m)) for r in range(m))
    for _ in range(j - 1):
        images = [_matvec(shift, b) for b in current]
        current = hermite_basis(images + list(group.lattice), m)
    return current


def nilpotency_class(group: GroupDescriptor, max_depth: int) -> int | None:
    """
    Least c with Gamma_{c+1} trivial, or None when no such c <= max_depth exists.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    trivial = group.lattice
    m = group.m
    full = hermite_basis(list(_identity(m)) + list(trivial), m)
    if full == trivial and group.twist_modulus == 1:
        return 0
    for c in range(1, max_depth + 1):
        if lcs_layer(group, c + 1) == trivial:
            return c
    return None


# -- shipped descriptors ----------------------------------------------------

SWAP = ((0, 1), (1, 0))


def theta_group() -> GroupDescriptor:
    """Z^2 x| Z with t swapping the two coordinates; q1 = x^(1,0), q2 = x^(0,1)."""
    return make_group(2, [], SWAP, 0, name="Z2xZ")


def zxz_group() -> GroupDescriptor:
    """Z x| Z with t acting by inversion."""
    return make_group(1, [], [[-1]], 0, name="ZxZ")


def laurent_qt_group() -> GroupDescriptor:
    """Z x Z, the ground group of the classical ring Z[q^+-1, t^+-1]."""
    return make_group(1, [], [[1]], 0, name="ZxZ-abelian")
