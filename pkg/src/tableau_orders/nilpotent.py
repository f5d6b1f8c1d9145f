"""Modules over the truncated polynomial algebra k[t] at a prime field k.

A module shape lists the component orders: component j is k[t]/(t^parts[j]),
acted on by multiplication by t.  Elements store one coefficient array per
component; subspaces closed under t are kept in reduced echelon form over a
fixed coordinate order (component-major, degree-minor), so equal subspaces
have equal representations.

The component list is not required to be sorted: direct sums concatenate
components and morphism matrices address them positionally.  The isomorphism
type of a module is always the sorted partition.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from ._gf import as_matrix, check_prime, echelon_pivots, in_span, rank, reduce_vector, rref
from .partitions import Parts, check_partition, transpose

INFINITE_HEIGHT = math.inf


@dataclass(frozen=True)
class FieldSpec:
    """A prime field, given by its characteristic."""

    characteristic: int

    def __post_init__(self):
        check_prime(self.characteristic)


@dataclass(frozen=True)
class ModuleShape:
    """Direct sum of cyclic t-power quotients with the given orders."""

    parts: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if any(x < 1 for x in self.parts):
            raise ValueError(f"component orders must be positive, got {self.parts}")
        check_prime(self.p)

    @property
    def dim(self) -> int:
        return sum(self.parts)

    @property
    def type_partition(self) -> Parts:
        return tuple(sorted(self.parts, reverse=True))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for x in self.parts:
            out.append(out[-1] + x)
        return tuple(out)

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, tuple((0,) * n for n in self.parts))

    def generator(self, j: int) -> "ModuleElement":
        """Basis generator of component ``j`` (1-based)."""
        return self.monomial(j, 0)

    def monomial(self, j: int, u: int, coeff: int = 1) -> "ModuleElement":
        """The element coeff * t^u * b_j; zero when u reaches the order."""
        if not 1 <= j <= len(self.parts):
            raise ValueError(f"no component {j} in shape {self.parts}")
        coeffs = [[0] * n for n in self.parts]
        if u < self.parts[j - 1]:
            coeffs[j - 1][u] = coeff % self.p
        return ModuleElement(self, tuple(tuple(c) for c in coeffs))


def shape_from_partition(parts, p: int) -> ModuleShape:
    return ModuleShape(check_partition(parts), p)


def direct_sum_shape(a: ModuleShape, b: ModuleShape) -> ModuleShape:
    if a.p != b.p:
        raise ValueError("field mismatch")
    return ModuleShape(a.parts + b.parts, a.p)


@dataclass(frozen=True)
class ModuleElement:
    """Coefficient arrays per component; entry u of component j scales t^u b_j."""

    shape: ModuleShape
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fixed = []
        for n, comp in zip(self.shape.parts, self.coeffs):
            comp = tuple(int(c) % self.shape.p for c in comp)
            if len(comp) != n:
                raise ValueError("coefficient array does not match component order")
            fixed.append(comp)
        if len(fixed) != len(self.shape.parts):
            raise ValueError("wrong number of components")
        object.__setattr__(self, "coeffs", tuple(fixed))

    def is_zero(self) -> bool:
        return all(not any(c) for c in self.coeffs)

    def times_t(self) -> "ModuleElement":
        """Multiplication by t: shift coefficients up, truncating at the order."""
        return ModuleElement(
            self.shape, tuple((0,) + comp[:-1] for comp in self.coeffs)
        )

    def add(self, other: "ModuleElement") -> "ModuleElement":
        if other.shape != self.shape:
            raise ValueError("ambient mismatch")
        p = self.shape.p
        return ModuleElement(
            self.shape,
            tuple(
                tuple((x + y) % p for x, y in zip(a, b))
                for a, b in zip(self.coeffs, other.coeffs)
            ),
        )

    def scale(self, c: int) -> "ModuleElement":
        p = self.shape.p
        return ModuleElement(
            self.shape, tuple(tuple(x * c % p for x in comp) for comp in self.coeffs)
        )

    def to_vector(self) -> np.ndarray:
        return np.array([x for comp in self.coeffs for x in comp], dtype=np.int64)

    @classmethod
    def from_vector(cls, shape: ModuleShape, vec) -> "ModuleElement":
        vec = list(vec)
        comps = []
        for j, n in enumerate(shape.parts):
            off = shape.offsets[j]
            comps.append(tuple(int(x) for x in vec[off : off + n]))
        return cls(shape, tuple(comps))

    def text(self) -> str:
        """Sum of monomial terms like ``t^2*b_1 + t*b_2``; zero is ``0``."""
        terms = []
        for j, comp in enumerate(self.coeffs, start=1):
            for u, c in enumerate(comp):
                if not c:
                    continue
                factor = "" if u == 0 else ("t*" if u == 1 else f"t^{u}*")
                lead = "" if c == 1 else f"{c}*"
                terms.append(f"{lead}{factor}b_{j}")
        return " + ".join(terms) if terms else "0"


_TERM_RE = re.compile(
    r"^\s*(?:(\d+)\s*\*\s*)?(?:t(?:\^(\d+))?\s*\*\s*)?b_(\d+)\s*$|^\s*(\d+)\s*$"
)


def parse_element(shape: ModuleShape, text: str) -> ModuleElement:
    """Parse the textual form produced by :meth:`ModuleElement.text`."""
    total = shape.zero()
    for raw in text.split("+"):
        m = _TERM_RE.match(raw)
        if not m:
            raise ValueError(f"cannot parse term {raw!r}")
        if m.group(4) is not None:
            if int(m.group(4)) % shape.p != 0:
                raise ValueError(f"constant term {raw!r} is not a module element")
            continue
        coeff = int(m.group(1)) if m.group(1) else 1
        power = int(m.group(2)) if m.group(2) else (1 if "t" in raw.split("b_")[0] else 0)
        j = int(m.group(3))
        total = total.add(shape.monomial(j, power, coeff))
    return total


def act_t(x: ModuleElement) -> ModuleElement:
    return x.times_t()


@dataclass(frozen=True)
class SubmoduleBasis:
    """A t-invariant subspace in reduced echelon form (canonical)."""

    ambient: ModuleShape
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @cached_property
    def _matrix(self) -> np.ndarray:
        return as_matrix(self.rows, self.ambient.dim, self.ambient.p)

    @cached_property
    def _pivots(self) -> tuple[int, ...]:
        # rows are already reduced echelon; recover pivot columns
        pivots = []
        for row in self.rows:
            for c, x in enumerate(row):
                if x:
                    pivots.append(c)
                    break
        return tuple(pivots)

    def contains_vector(self, vec) -> bool:
        return in_span(np.asarray(vec, dtype=np.int64), self._matrix, self._pivots, self.ambient.p)

    def contains_element(self, x: ModuleElement) -> bool:
        if x.shape != self.ambient:
            raise ValueError("ambient mismatch")
        return self.contains_vector(x.to_vector())

    def contains_subspace(self, other: "SubmoduleBasis") -> bool:
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch")
        return all(self.contains_vector(row) for row in other.rows)

    def basis_elements(self) -> tuple[ModuleElement, ...]:
        return tuple(ModuleElement.from_vector(self.ambient, row) for row in self.rows)


def _shift_vector(shape: ModuleShape, vec: np.ndarray, times: int = 1) -> np.ndarray:
    out = np.zeros_like(vec)
    for j, n in enumerate(shape.parts):
        off = shape.offsets[j]
        if times < n:
            out[off + times : off + n] = vec[off : off + n - times]
    return out


def _span_from_vectors(shape: ModuleShape, vectors) -> SubmoduleBasis:
    vectors = list(vectors)
    if not vectors:
        return SubmoduleBasis(shape, ())
    m = as_matrix(np.array(vectors, dtype=np.int64), shape.dim, shape.p)
    reduced, _ = rref(m, shape.p)
    return SubmoduleBasis(shape, tuple(tuple(int(x) for x in row) for row in reduced))


def operator_span(shape: ModuleShape, generators) -> SubmoduleBasis:
    """Smallest t-invariant subspace containing the generators."""
    vectors = []
    for g in generators:
        if g.shape != shape:
            raise ValueError("generator not in the ambient module")
        v = g.to_vector()
        while v.any():
            vectors.append(v)
            v = _shift_vector(shape, v)
    return _span_from_vectors(shape, vectors)


def shifted_span(s: SubmoduleBasis, e: int) -> SubmoduleBasis:
    """The subspace t^e * S."""
    return _span_from_vectors(
        s.ambient, [_shift_vector(s.ambient, np.array(r, dtype=np.int64), e) for r in s.rows]
    )


def full_span(shape: ModuleShape) -> SubmoduleBasis:
    return _span_from_vectors(shape, list(np.eye(shape.dim, dtype=np.int64)))


def radical_span(shape: ModuleShape, w: int) -> SubmoduleBasis:
    """The subspace t^w * (whole module)."""
    vecs = []
    for j, n in enumerate(shape.parts):
        off = shape.offsets[j]
        for u in range(w, n):
            v = np.zeros(shape.dim, dtype=np.int64)
            v[off + u] = 1
            vecs.append(v)
    return _span_from_vectors(shape, vecs)


def subspace_sum(a: SubmoduleBasis, b: SubmoduleBasis) -> SubmoduleBasis:
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    return _span_from_vectors(a.ambient, [np.array(r, dtype=np.int64) for r in a.rows + b.rows])


def subspace_intersect(a: SubmoduleBasis, b: SubmoduleBasis) -> SubmoduleBasis:
    """Zassenhaus: echelonize rows (u|u) and (v|0); zero-left rows give the meet."""
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    shape = a.ambient
    n = shape.dim
    p = shape.p
    stacked = []
    for r in a.rows:
        stacked.append(list(r) + list(r))
    for r in b.rows:
        stacked.append(list(r) + [0] * n)
    if not stacked:
        return SubmoduleBasis(shape, ())
    reduced, _ = rref(np.array(stacked, dtype=np.int64), p)
    meet = [row[n:] for row in reduced if not row[:n].any()]
    return _span_from_vectors(shape, [np.array(r, dtype=np.int64) for r in meet])


def is_t_invariant(s: SubmoduleBasis) -> bool:
    return all(
        s.contains_vector(_shift_vector(s.ambient, np.array(r, dtype=np.int64)))
        for r in s.rows
    )


def module_type(s: SubmoduleBasis) -> Parts:
    """Isomorphism type of a t-invariant subspace as a k[t]-module.

    Entry w of the conjugate type counts dim t^(w-1)S - dim t^w S.
    """
    if not is_t_invariant(s):
        raise ValueError("subspace is not t-invariant")
    dims = [s.dim]
    cur = s
    while dims[-1]:
        cur = shifted_span(cur, 1)
        dims.append(cur.dim)
    conj = tuple(dims[w - 1] - dims[w] for w in range(1, len(dims)))
    if not all(conj[i] >= conj[i + 1] for i in range(len(conj) - 1)):
        raise AssertionError(f"Loewy dimension differences {conj} not weakly decreasing")
    return transpose(conj)


def loewy_length(s: SubmoduleBasis) -> int:
    """Least e with t^e S = 0."""
    e = 0
    cur = s
    while cur.dim:
        cur = shifted_span(cur, 1)
        e += 1
    return e


@lru_cache(maxsize=4096)
def _degree_order(shape: ModuleShape):
    """Permutation of the coordinates sorted by degree, plus prefix counts."""
    order = sorted((u, j) for j, n in enumerate(shape.parts) for u in range(n))
    source_cols = np.array(
        [shape.offsets[j] + u for u, j in order], dtype=np.intp
    )
    degrees = np.array([u for u, _ in order], dtype=np.int64)
    max_w = max(shape.parts, default=0)
    coords_below = [sum(min(n, w) for n in shape.parts) for w in range(max_w + 1)]
    return source_cols, degrees, coords_below, max_w


def _type_from_rows(shape: ModuleShape, rows: np.ndarray) -> Parts:
    """Type of (whole module) / span(rows) with rows spanning a t-invariant
    subspace, via counting boxes in leading diagram rows.

    The number of boxes in the first w diagram rows of the result equals
    dim B - dim(span + t^w B).  With coordinates ordered by degree, one
    echelon pass answers every w at once: dim(span + t^w B) is the span of
    the high-degree coordinates plus the rank of the projection of the rows
    onto the low ones, and that rank counts pivots among the first columns.
    """
    p = shape.p
    dim_b = shape.dim
    source_cols, degrees, coords_below, max_w = _degree_order(shape)
    if rows.size:
        pivots = echelon_pivots(rows[:, source_cols], p)
        pivot_degrees = degrees[list(pivots)]
    else:
        pivot_degrees = np.zeros(0, dtype=np.int64)

    def boxes(w: int) -> int:
        proj_rank = int((pivot_degrees < w).sum())
        return coords_below[w] - proj_rank

    conj = tuple(boxes(w) - boxes(w - 1) for w in range(1, max_w + 1))
    conj = conj[: max((i + 1 for i, x in enumerate(conj) if x), default=0)]
    if any(x < 0 for x in conj) or not all(
        conj[i] >= conj[i + 1] for i in range(len(conj) - 1)
    ):
        raise AssertionError(f"box counts {conj} do not give a partition")
    return transpose(conj)


def _shift_rows(shape: ModuleShape, rows: np.ndarray) -> np.ndarray:
    out = np.zeros_like(rows)
    for j, n in enumerate(shape.parts):
        off = shape.offsets[j]
        if n > 1:
            out[:, off + 1 : off + n] = rows[:, off : off + n - 1]
    return out[out.any(axis=1)]


def quotient_type(shape: ModuleShape, a: SubmoduleBasis, e: int) -> Parts:
    """Type of (whole module) / t^e A."""
    if a.ambient != shape:
        raise ValueError("submodule not in this module")
    if e < 0:
        raise ValueError("power must be nonnegative")
    rows = a._matrix
    for _ in range(e):
        if not rows.size:
            break
        rows = _shift_rows(shape, rows)
    return _type_from_rows(shape, rows)


def quotient_chain(shape: ModuleShape, a: SubmoduleBasis) -> tuple[Parts, ...]:
    """Types of (whole module) / t^e A for e = 0 up to the Loewy length of A."""
    if a.ambient != shape:
        raise ValueError("submodule not in this module")
    rows = a._matrix
    chain = [_type_from_rows(shape, rows)]
    while rows.size:
        rows = _shift_rows(shape, rows)
        chain.append(_type_from_rows(shape, rows))
    return tuple(chain)


def height(x: ModuleElement) -> int | float:
    """Largest m with x in t^m * (module); infinity for zero."""
    if x.is_zero():
        return INFINITE_HEIGHT
    vals = []
    for comp in x.coeffs:
        for u, c in enumerate(comp):
            if c:
                vals.append(u)
                break
    return min(vals)


def height_sequence(x: ModuleElement) -> tuple[int, ...]:
    """Heights of x, tx, t^2 x, ... up to the last finite value."""
    out = []
    cur = x
    while not cur.is_zero():
        out.append(height(cur))
        cur = cur.times_t()
    return tuple(out)


def hom_dim(source: ModuleShape, target: ModuleShape) -> int:
    """Dimension of the space of t-linear maps, by counting free parameters.

    A map between cyclic components of orders a and b contributes min(a, b)
    parameters; no constraint system is needed for the plain Hom space.
    """
    if source.p != target.p:
        raise ValueError("field mismatch")
    return sum(min(a, b) for a in source.parts for b in target.parts)


def _hom_parameter_blocks(source: ModuleShape, target: ModuleShape):
    """Free parameters of Hom(source, target): triples (i, j, v) meaning the
    coefficient of t^v in the (component j <- component i) matrix entry."""
    blocks = []
    for i, a in enumerate(source.parts):
        for j, b in enumerate(target.parts):
            for v in range(max(b - a, 0), b):
                blocks.append((i, j, v))
    return blocks


def hom_dim_quotient(
    source: ModuleShape,
    annihilated: SubmoduleBasis,
    e: int,
    target: ModuleShape,
) -> int:
    """Dimension of Hom(source / t^e A, target) for A = ``annihilated``.

    Parameterizes Hom(source, target) and imposes f(t^e A) = 0 as linear
    constraints on the parameters; the answer is the kernel dimension.
    """
    if annihilated.ambient != source:
        raise ValueError("submodule not in the source module")
    if source.p != target.p:
        raise ValueError("field mismatch")
    p = source.p
    params = _hom_parameter_blocks(source, target)
    shifted = shifted_span(annihilated, e)
    if not params:
        return 0
    if not shifted.dim:
        return len(params)
    rows = []
    for gen in shifted.rows:
        # image of gen under the parametrized map, one row per target coord
        block = np.zeros((target.dim, len(params)), dtype=np.int64)
        for k, (i, j, v) in enumerate(params):
            off_s = source.offsets[i]
            off_t = target.offsets[j]
            a, b = source.parts[i], target.parts[j]
            for u in range(a):
                c = gen[off_s + u]
                if c and u + v < b:
                    block[off_t + u + v, k] = (block[off_t + u + v, k] + c) % p
        rows.append(block)
    constraints = np.vstack(rows) % p
    return len(params) - rank(constraints, p)
