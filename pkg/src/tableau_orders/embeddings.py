"""Invariant subspaces of nilpotent operators and their exact sequences.

An embedding is a pair (submodule of a nilpotent module); its tableau is the
chain of quotient types.  Poles are the cyclic indecomposables classified by
height sequences; the paired-pole embeddings carry two generators linked so
that the pair shares the tableau of the corresponding pole direct sum, and
they appear as middle terms of the exact sequences built here for each
increase-entry box move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._gf import rank
from .nilpotent import (
    ModuleElement,
    ModuleShape,
    SubmoduleBasis,
    _span_from_vectors,
    height_sequence,
    loewy_length,
    module_type,
    operator_span,
    parse_element,
    quotient_chain,
    quotient_type,
    shape_from_partition,
)
from .partitions import Parts, check_partition, weight
from .tableaux import LRTableau, lr_from_cells, lr_validate, rook_cells, tableau_union

Poly = tuple[int, ...]  # polynomial in t, low degree first


# ---------------------------------------------------------------------------
# embeddings


class Embedding:
    """A t-invariant subspace of a nilpotent module, given by generators."""

    def __init__(self, ambient: ModuleShape, generators=()):
        self.ambient = ambient
        gens = tuple(generators)
        for g in gens:
            if g.shape != ambient:
                raise ValueError("generator not in the ambient module")
        self.generators = gens

    @cached_property
    def submodule(self) -> SubmoduleBasis:
        return operator_span(self.ambient, self.generators)

    @cached_property
    def loewy(self) -> int:
        return loewy_length(self.submodule)

    def type_triple(self) -> tuple[Parts, Parts, Parts]:
        """(submodule type, ambient type, quotient type)."""
        alpha = module_type(self.submodule)
        beta = self.ambient.type_partition
        gamma = quotient_type(self.ambient, self.submodule, 0)
        if weight(beta) != weight(alpha) + weight(gamma):
            raise AssertionError("type triple weights do not add up")
        return alpha, beta, gamma

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Embedding)
            and self.ambient == other.ambient
            and self.submodule.rows == other.submodule.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.submodule.rows))

    def __repr__(self) -> str:
        gens = ", ".join(g.text() for g in self.generators) or "0"
        return f"Embedding(({gens}) in N_{self.ambient.parts}, p={self.ambient.p})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "field": self.ambient.p,
                "ambient": list(self.ambient.parts),
                "generators": [g.text() for g in self.generators],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Embedding":
        data = json.loads(text)
        shape = ModuleShape(tuple(data["ambient"]), int(data["field"]))
        gens = tuple(parse_element(shape, g) for g in data["generators"])
        return cls(shape, gens)


def empty_embedding(beta, p: int) -> Embedding:
    """The zero submodule of the module with the given type."""
    return Embedding(shape_from_partition(beta, p), ())


def direct_sum(x: Embedding, y: Embedding) -> Embedding:
    if x.ambient.p != y.ambient.p:
        raise ValueError("field mismatch")
    shape = ModuleShape(x.ambient.parts + y.ambient.parts, x.ambient.p)
    gens = [
        ModuleElement(shape, g.coeffs + y.ambient.zero().coeffs) for g in x.generators
    ] + [ModuleElement(shape, x.ambient.zero().coeffs + g.coeffs) for g in y.generators]
    return Embedding(shape, tuple(gens))


def direct_sum_many(pieces, p: int) -> Embedding:
    total = empty_embedding((), p)
    for piece in pieces:
        total = direct_sum(total, piece)
    return total


def lr_tableau_of(x: Embedding) -> LRTableau:
    """Chain of quotient types by successive powers of t acting on the submodule."""
    chain = quotient_chain(x.ambient, x.submodule)
    t = LRTableau(chain[0], chain)
    ok, why = lr_validate(t)
    if not ok:
        raise AssertionError(f"embedding produced an invalid tableau: {why}")
    return t


# ---------------------------------------------------------------------------
# poles, pickets, paired poles


def gap_indices(m) -> tuple[int, ...]:
    """Indices after which a strictly increasing sequence jumps by more than
    one, in decreasing order; the final index always counts."""
    m = tuple(m)
    out = [
        i
        for i in range(len(m))
        if i == len(m) - 1 or m[i + 1] > m[i] + 1
    ]
    return tuple(reversed(out))


def nongap_entries(m) -> tuple[int, ...]:
    m = tuple(m)
    gaps = set(gap_indices(m))
    return tuple(m[i] for i in range(len(m)) if i not in gaps)


def _check_height_parameters(m) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if any(x < 0 for x in m):
        raise ValueError(f"height sequence must be nonnegative, got {m}")
    if any(m[i] >= m[i + 1] for i in range(len(m) - 1)):
        raise ValueError(f"height sequence must be strictly increasing, got {m}")
    return m


def pole(m, p: int) -> Embedding:
    """The cyclic embedding whose generator has height sequence ``m``.

    Each gap entry g at index i contributes an ambient component of order
    g + 1 and a generator term t^(g - i) on it.
    """
    m = _check_height_parameters(m)
    if not m:
        raise ValueError("height sequence must be nonempty")
    idx = gap_indices(m)
    parts = tuple(m[i] + 1 for i in idx)
    shape = shape_from_partition(parts, p)
    gen = shape.zero()
    for j, i in enumerate(idx, start=1):
        gen = gen.add(shape.monomial(j, m[i] - i))
    return Embedding(shape, (gen,))


def picket(i: int, ell: int, p: int) -> Embedding:
    """The test embedding t^max(ell-i, 0) * N in N, for N of a single part ell."""
    if ell < 1:
        raise ValueError("part must be at least 1")
    if i < 0:
        raise ValueError("power must be nonnegative")
    shape = shape_from_partition((ell,), p)
    return Embedding(shape, (shape.monomial(1, max(ell - i, 0)),))


def pole_pair(m, n, p: int) -> Embedding:
    """Two linked generators sharing the tableau of pole(m) + pole(n).

    For the empty second sequence this degenerates to pole(m): the linking
    terms then vanish in their components.  Requires the first sequence to
    be longer and to end at least one above the second.
    """
    m = _check_height_parameters(m)
    n = _check_height_parameters(n)
    if not m:
        raise ValueError("first height sequence must be nonempty")
    r, q = len(m) - 1, len(n) - 1
    if r <= q:
        raise ValueError(f"first sequence must be longer: top indices {r} <= {q}")
    if n and m[-1] < n[-1] + 1:
        raise ValueError(f"need {m[-1]} >= {n[-1]} + 1")
    mi = gap_indices(m)
    ni = gap_indices(n)
    beta = tuple(m[i] + 1 for i in mi)
    lam = tuple(n[i] + 1 for i in ni)
    shape = ModuleShape(beta + lam, p)
    s = len(beta)
    a1 = shape.zero()
    for j, i in enumerate(mi, start=1):
        a1 = a1.add(shape.monomial(j, m[i] - i))
    a2 = shape.zero()
    for j, i in enumerate(mi, start=1):
        if j >= 2:
            a2 = a2.add(shape.monomial(j, m[i] - i + r - q - 1))
    for j, i in enumerate(ni, start=1):
        a2 = a2.add(shape.monomial(s + j, n[i] - i))
    return Embedding(shape, (a1, a2))


def pole_height_sequence(x: Embedding) -> tuple[int, ...]:
    """Height sequence of the generator of a one-generator embedding."""
    if len(x.generators) != 1:
        raise ValueError("not a cyclic embedding")
    return height_sequence(x.generators[0])


# ---------------------------------------------------------------------------
# morphisms and short exact sequences


@dataclass(frozen=True)
class EmbeddingMorphism:
    """Matrix of polynomials in t; entry (j, i) maps ambient component i of
    the source into ambient component j of the target."""

    source: Embedding
    target: Embedding
    matrix: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        p = self.source.ambient.p
        fixed = tuple(
            tuple(tuple(int(c) % p for c in entry) for entry in row) for row in self.matrix
        )
        object.__setattr__(self, "matrix", fixed)

    @cached_property
    def linear(self) -> np.ndarray:
        """The induced matrix on the monomial bases of the ambient modules."""
        src, tgt = self.source.ambient, self.target.ambient
        p = src.p
        out = np.zeros((tgt.dim, src.dim), dtype=np.int64)
        for j, row in enumerate(self.matrix):
            b = tgt.parts[j]
            for i, poly in enumerate(row):
                a = src.parts[i]
                for v, c in enumerate(poly):
                    if not c or v >= b:
                        continue
                    for u in range(min(a, b - v)):
                        out[tgt.offsets[j] + u + v, src.offsets[i] + u] += c
        return out % p

    def apply(self, x: ModuleElement) -> ModuleElement:
        if x.shape != self.source.ambient:
            raise ValueError("element not in the source")
        vec = self.linear @ x.to_vector() % self.source.ambient.p
        return ModuleElement.from_vector(self.target.ambient, vec)


def identity_morphism(x: Embedding) -> EmbeddingMorphism:
    n = len(x.ambient.parts)
    matrix = tuple(
        tuple(((1,) if i == j else ()) for i in range(n)) for j in range(n)
    )
    return EmbeddingMorphism(x, x, matrix)


def zero_morphism(x: Embedding, y: Embedding) -> EmbeddingMorphism:
    matrix = tuple(tuple(() for _ in x.ambient.parts) for _ in y.ambient.parts)
    return EmbeddingMorphism(x, y, matrix)


def morphism_validate(phi: EmbeddingMorphism) -> tuple[bool, str | None]:
    """Well-definedness of every matrix entry plus preservation of submodules."""
    src, tgt = phi.source.ambient, phi.target.ambient
    if src.p != tgt.p:
        return False, "field mismatch"
    if len(phi.matrix) != len(tgt.parts) or any(
        len(row) != len(src.parts) for row in phi.matrix
    ):
        return False, "matrix shape does not match the component counts"
    for j, row in enumerate(phi.matrix):
        for i, poly in enumerate(row):
            a, b = src.parts[i], tgt.parts[j]
            for v, c in enumerate(poly):
                if v < b - a and c % src.p:
                    return False, (
                        f"entry ({j + 1},{i + 1}) not divisible by t^{b - a}: "
                        f"order {a} cannot map to order {b} through t^{v}"
                    )
    lin = phi.linear
    p = src.p
    for row in phi.source.submodule.rows:
        image = lin @ np.array(row, dtype=np.int64) % p
        if not phi.target.submodule.contains_vector(image):
            bad = ModuleElement.from_vector(src, row).text()
            return False, f"image of submodule element {bad} leaves the target submodule"
    return True, None


@dataclass(frozen=True)
class ShortExactSequence:
    left: Embedding
    middle: Embedding
    right: Embedding
    inject: EmbeddingMorphism
    project: EmbeddingMorphism

    def to_json(self) -> str:
        return json.dumps(
            {
                "left": json.loads(self.left.to_json()),
                "middle": json.loads(self.middle.to_json()),
                "right": json.loads(self.right.to_json()),
                "inject": [[list(entry) for entry in row] for row in self.inject.matrix],
                "project": [[list(entry) for entry in row] for row in self.project.matrix],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ShortExactSequence":
        data = json.loads(text)
        left = Embedding.from_json(json.dumps(data["left"]))
        middle = Embedding.from_json(json.dumps(data["middle"]))
        right = Embedding.from_json(json.dumps(data["right"]))
        inject = EmbeddingMorphism(
            left, middle, tuple(tuple(tuple(e) for e in row) for row in data["inject"])
        )
        project = EmbeddingMorphism(
            middle, right, tuple(tuple(tuple(e) for e in row) for row in data["project"])
        )
        return cls(left, middle, right, inject, project)


def is_exact(seq: ShortExactSequence) -> tuple[bool, str | None]:
    """Componentwise exactness at both the ambient and the submodule level."""
    if seq.inject.source != seq.left:
        return False, "inject does not start at the left term"
    if seq.inject.target != seq.middle or seq.project.source != seq.middle:
        return False, "morphisms do not meet at the middle term"
    if seq.project.target != seq.right:
        return False, "project does not end at the right term"
    for name, phi in (("inject", seq.inject), ("project", seq.project)):
        ok, why = morphism_validate(phi)
        if not ok:
            return False, f"{name}: {why}"
    p = seq.middle.ambient.p
    li, lp = seq.inject.linear, seq.project.linear
    if (lp @ li % p).any():
        return False, "ambient: composite of the two maps is nonzero"
    if rank(li, p) != seq.left.ambient.dim:
        return False, "ambient: inject is not injective"
    if rank(lp, p) != seq.right.ambient.dim:
        return False, "ambient: project is not surjective"
    if seq.middle.ambient.dim != seq.left.ambient.dim + seq.right.ambient.dim:
        return False, "ambient: dimensions do not add up"
    image_rows = [
        lp @ np.array(row, dtype=np.int64) % p for row in seq.middle.submodule.rows
    ]
    image = _span_from_vectors(seq.right.ambient, image_rows)
    if image.rows != seq.right.submodule.rows:
        return False, "submodule: project does not map onto the right submodule"
    if seq.middle.submodule.dim != seq.left.submodule.dim + seq.right.submodule.dim:
        return False, "submodule: dimensions do not add up"
    return True, None


def pad_sequence(
    seq: ShortExactSequence, w_left: Embedding, w_right: Embedding | None = None
) -> ShortExactSequence:
    """Add a direct summand to the left (and middle), and optionally another
    to the right (and middle); exactness is preserved."""
    p = seq.middle.ambient.p
    if w_right is None:
        w_right = empty_embedding((), p)
    left = direct_sum(seq.left, w_left)
    middle = direct_sum(direct_sum(seq.middle, w_left), w_right)
    right = direct_sum(seq.right, w_right)

    def poly_id(k: int, n: int):
        return tuple((1,) if i == k else () for i in range(n))

    nl, nwl, nwr = (
        len(seq.left.ambient.parts),
        len(w_left.ambient.parts),
        len(w_right.ambient.parts),
    )
    nm, nr = len(seq.middle.ambient.parts), len(seq.right.ambient.parts)
    inj_rows = [row + ((),) * nwl for row in seq.inject.matrix]
    for k in range(nwl):
        inj_rows.append(((),) * nl + poly_id(k, nwl))
    for _ in range(nwr):
        inj_rows.append(((),) * (nl + nwl))
    proj_rows = [row + ((),) * (nwl + nwr) for row in seq.project.matrix]
    for k in range(nwr):
        proj_rows.append(((),) * (nm + nwl) + poly_id(k, nwr))
    return ShortExactSequence(
        left,
        middle,
        right,
        EmbeddingMorphism(left, middle, tuple(inj_rows)),
        EmbeddingMorphism(middle, right, tuple(proj_rows)),
    )


# ---------------------------------------------------------------------------
# the three exact-sequence constructors


def _monomial_poly(c: int, v: int) -> Poly:
    return (0,) * v + (c,)


def _build_checked(left, middle, right, psi_rows, phi_rows) -> ShortExactSequence:
    seq = ShortExactSequence(
        left,
        middle,
        right,
        EmbeddingMorphism(left, middle, tuple(psi_rows)),
        EmbeddingMorphism(middle, right, tuple(phi_rows)),
    )
    ok, why = is_exact(seq)
    if not ok:
        raise AssertionError(f"constructed sequence is not exact: {why}")
    return seq


def _split_preconditions(m, n):
    m = _check_height_parameters(m)
    n = _check_height_parameters(n)
    if len(m) < 2:
        raise ValueError("first sequence needs at least two entries")
    if len(n) >= len(m):
        raise ValueError("second sequence must be shorter")
    return m, n


def ses_top_gap(m, n, p: int) -> ShortExactSequence:
    """0 -> pole(n + top of m) -> pair(m, n) -> pole(m without top) -> 0.

    Requires a gap just below the top of ``m`` and the top of ``m`` strictly
    above the top of ``n`` plus one (``n`` may be empty).
    """
    m, n = _split_preconditions(m, n)
    r = len(m) - 1
    mi = gap_indices(m)
    if len(mi) < 2 or mi[1] != r - 1:
        raise ValueError("no gap just below the top entry")
    if m[-1] <= (n[-1] + 1 if n else 0):
        raise ValueError("top of the first sequence must clear the second by two")
    left = pole(n + (m[-1],), p)
    middle = pole_pair(m, n, p)
    right = pole(m[:-1], p)
    s, t = len(mi), len(gap_indices(n)) if n else 0
    if left.ambient.parts != (m[-1] + 1,) + middle.ambient.parts[s:]:
        raise AssertionError("left ambient does not match the expected components")
    if right.ambient.parts != middle.ambient.parts[1:s]:
        raise AssertionError("right ambient does not match the expected components")
    psi = [[() for _ in range(1 + t)] for _ in range(s + t)]
    psi[0][0] = (-1,)
    for j in range(1, t + 1):
        psi[s + j - 1][j] = (1,)
    phi = [[() for _ in range(s + t)] for _ in range(s - 1)]
    for j in range(2, s + 1):
        phi[j - 2][j - 1] = (1,)
    return _build_checked(left, middle, right, psi, phi)


def ses_top_run(m, n, p: int) -> ShortExactSequence:
    """0 -> pole(n + top) -> pair(m, n) + empty(top) -> pole(m without top) -> 0.

    Requires no gap below the top of ``m`` (the top ends a run) and the top
    strictly above the top of ``n`` plus one (``n`` may be empty).
    """
    m, n = _split_preconditions(m, n)
    r = len(m) - 1
    mi = gap_indices(m)
    if len(mi) >= 2 and mi[1] == r - 1:
        raise ValueError("the top entry must end a run")
    if m[-1] <= (n[-1] + 1 if n else 0):
        raise ValueError("top of the first sequence must clear the second by two")
    top = m[-1]
    left = pole(n + (top,), p)
    middle = direct_sum(pole_pair(m, n, p), empty_embedding((top,), p))
    right = pole(m[:-1], p)
    s, t = len(mi), len(gap_indices(n)) if n else 0
    if left.ambient.parts != (top + 1,) + middle.ambient.parts[s : s + t]:
        raise AssertionError("left ambient does not match the expected components")
    if right.ambient.parts != (top,) + middle.ambient.parts[1:s]:
        raise AssertionError("right ambient does not match the expected components")
    c = top - (n[-1] if n else -1) - 1
    psi = [[() for _ in range(1 + t)] for _ in range(s + t + 1)]
    psi[0][0] = (-1,)
    for j in range(1, t + 1):
        psi[s + j - 1][j] = (1,)
    psi[s + t][0] = (1,)
    if t:
        psi[s + t][1] = _monomial_poly(-1, c)
    phi = [[() for _ in range(s + t + 1)] for _ in range(s)]
    phi[0][0] = (1,)
    for j in range(2, s + 1):
        phi[j - 1][j - 1] = (1,)
    if t:
        phi[0][s] = _monomial_poly(1, c)
    phi[0][s + t] = (1,)
    return _build_checked(left, middle, right, psi, phi)


def ses_top_boundary(m, n, p: int) -> ShortExactSequence:
    """0 -> pole(n + top) + empty(top) -> pair(m, n) -> pole(m without top) -> 0.

    Requires a gap just below the top of ``m`` and the top exactly one above
    the top of ``n``.
    """
    m, n = _split_preconditions(m, n)
    if not n:
        raise ValueError("second sequence must be nonempty at the boundary")
    r = len(m) - 1
    mi = gap_indices(m)
    if len(mi) < 2 or mi[1] != r - 1:
        raise ValueError("no gap just below the top entry")
    if m[-1] != n[-1] + 1:
        raise ValueError("top entries are not at the boundary")
    top = m[-1]
    left = direct_sum(pole(n + (top,), p), empty_embedding((top,), p))
    middle = pole_pair(m, n, p)
    right = pole(m[:-1], p)
    s, t = len(mi), len(gap_indices(n))
    if left.ambient.parts != (top + 1,) + middle.ambient.parts[s + 1 :] + (top,):
        raise AssertionError("left ambient does not match the expected components")
    if right.ambient.parts != middle.ambient.parts[1:s]:
        raise AssertionError("right ambient does not match the expected components")
    psi = [[() for _ in range(t + 1)] for _ in range(s + t)]
    psi[0][0] = (-1,)
    psi[s][0] = (1,)
    psi[s][t] = (1,)
    for j in range(2, t + 1):
        psi[s + j - 1][j - 1] = (1,)
    phi = [[() for _ in range(s + t)] for _ in range(s - 1)]
    for j in range(2, s + 1):
        phi[j - 2][j - 1] = (1,)
    return _build_checked(left, middle, right, psi, phi)


def split_sequence(x: Embedding, y: Embedding) -> ShortExactSequence:
    """The canonical 0 -> x -> x + y -> y -> 0."""
    middle = direct_sum(x, y)
    nx, ny = len(x.ambient.parts), len(y.ambient.parts)
    inj = [
        tuple((1,) if i == j else () for i in range(nx)) for j in range(nx)
    ] + [((),) * nx for _ in range(ny)]
    proj = [
        ((),) * nx + tuple((1,) if i == j else () for i in range(ny)) for j in range(ny)
    ]
    return ShortExactSequence(
        x,
        middle,
        y,
        EmbeddingMorphism(x, middle, tuple(inj)),
        EmbeddingMorphism(middle, y, tuple(proj)),
    )


# ---------------------------------------------------------------------------
# decomposing rook tableaux and witnessing increase moves


@dataclass(frozen=True)
class ColumnData:
    height: int
    entry: int | None  # None for an unfilled column


def _columns_of(t: LRTableau) -> tuple[ColumnData, ...]:
    cells = t.cells()
    rook_cells(t.outer, t.inner)  # precondition: rook strip
    gamma = t.inner + (0,) * (len(t.outer) - len(t.inner))
    out = []
    for j, h in enumerate(t.outer, start=1):
        entry = cells.get((h, j)) if h == gamma[j - 1] + 1 else None
        out.append(ColumnData(h, entry))
    return tuple(out)


def _columns_subtableau(columns) -> LRTableau:
    """Reassemble selected columns into their own rook tableau.

    Within a run of equal heights the filled column goes last so that the
    inner shape stays a partition; at most one of them can be filled.
    """
    ordered = sorted(columns, key=lambda c: (-c.height, c.entry is not None))
    beta = tuple(c.height for c in ordered)
    gamma = tuple(c.height - (1 if c.entry is not None else 0) for c in ordered)
    gamma = tuple(x for x in gamma if x)
    entries = {
        (c.height, k): c.entry
        for k, c in enumerate(ordered, start=1)
        if c.entry is not None
    }
    return lr_from_cells(beta, gamma, entries)


def _chain_candidates(pool, top_height: int, entry: int):
    return sorted(
        (c for c in pool if c.entry == entry and c.height < top_height),
        key=lambda c: -c.height,
    )


def _select_entry_chain(pool, anchor: ColumnData, top_entry: int):
    """Columns carrying top_entry - 1, ..., 1 under the anchor, heights
    strictly decreasing; tallest-first with backtracking, first solution
    whose removal leaves a valid tableau wins."""

    def search(chain, entry):
        if entry == 0:
            remainder = [c for c in pool if c not in chain]
            try:
                _columns_subtableau(remainder)
            except ValueError:
                return None
            return chain
        for cand in _chain_candidates(pool, chain[-1].height, entry):
            found = search(chain + [cand], entry - 1)
            if found is not None:
                return found
        return None

    result = search([anchor], top_entry - 1)
    if result is None:
        raise AssertionError("no admissible column chain exists for this move")
    return result


def pole_decomposition(t: LRTableau, p: int) -> tuple[Embedding, ...]:
    """Split a rook tableau into poles and empties with the same tableau.

    Filled columns are grouped into chains of entries e, e-1, ..., 1 with
    strictly decreasing heights (tallest first, matched greedily); each chain
    contributes the pole of its heights less one, plus an empty for every
    non-gap height; unfilled columns contribute empties directly.
    """
    columns = _columns_of(t)
    pieces = [empty_embedding((c.height,), p) for c in columns if c.entry is None]
    remaining = [c for c in columns if c.entry is not None]
    while remaining:
        anchor = max(remaining, key=lambda c: c.height)
        pool = list(remaining)
        chain = _select_entry_chain(pool, anchor, anchor.entry)
        heights = tuple(sorted(c.height for c in chain))
        params = tuple(h - 1 for h in heights)
        pieces.append(pole(params, p))
        pieces.extend(empty_embedding((e + 1,), p) for e in nongap_entries(params))
        for c in chain:
            remaining.remove(c)
    total = direct_sum_many(pieces, p)
    if lr_tableau_of(total) != t:
        raise AssertionError("pole decomposition does not reproduce the tableau")
    return tuple(pieces)


@dataclass(frozen=True)
class IncreaseWitness:
    """Exact-sequence certificate for one increase-entry move."""

    smaller: LRTableau  # the tableau after the move
    sequence: ShortExactSequence  # padded; middle has the smaller tableau
    padding: Embedding  # common summand added to the core sequence


def increase_move_witness(t: LRTableau, move, p: int) -> IncreaseWitness:
    """Build the exact sequence certifying one increase-entry move on ``t``.

    The moved column anchors two entry chains: one through the increased
    tableau (giving the middle paired-pole term) and one through the original
    (giving the end poles).  The untouched columns and the non-gap heights of
    both chains form a common padding summand, after which the middle carries
    the increased tableau and the two ends together carry ``t``.
    """
    from .orders import apply_lr_move

    if move.kind != "lr_increase":
        raise ValueError(f"not an increase move: {move.kind}")
    smaller = apply_lr_move(t, move)
    col, old_entry, new_entry = move.data

    cols_after = list(_columns_of(smaller))
    anchor_after = cols_after[col - 1]
    if anchor_after.entry != new_entry:
        raise AssertionError("moved column does not carry the increased entry")
    ichain = _select_entry_chain(cols_after, anchor_after, new_entry)
    remainder = [c for c in cols_after if c not in ichain]

    anchor_before = ColumnData(anchor_after.height, old_entry)
    pool_before = remainder + [anchor_before]
    jchain = _select_entry_chain(pool_before, anchor_before, old_entry)
    untouched = [c for c in pool_before if c not in jchain]
    untouched_tab = _columns_subtableau(untouched)

    hi = tuple(sorted(c.height - 1 for c in ichain))
    hj_full = tuple(sorted(c.height - 1 for c in jchain))
    hj = hj_full[:-1]
    if hj_full[-1] != hi[-1]:
        raise AssertionError("both chains must end at the moved column")

    gap_below_top = hi[-1] > hi[-2] + 1
    boundary = bool(hj) and hi[-1] == hj[-1] + 1
    strictly_above = hi[-1] > (hj[-1] + 1 if hj else 0)
    if gap_below_top and strictly_above:
        core = ses_top_gap(hi, hj, p)
    elif not gap_below_top and strictly_above:
        core = ses_top_run(hi, hj, p)
    elif gap_below_top and boundary:
        core = ses_top_boundary(hi, hj, p)
    else:
        raise AssertionError(
            "no gap below the top and boundary heights: contradicts the rook strip"
        )

    pieces = list(pole_decomposition(untouched_tab, p))
    pieces.extend(empty_embedding((e + 1,), p) for e in nongap_entries(hi[:-1]))
    pieces.extend(empty_embedding((e + 1,), p) for e in nongap_entries(hj))
    padding = direct_sum_many(pieces, p)
    seq = pad_sequence(core, padding)
    ok, why = is_exact(seq)
    if not ok:
        raise AssertionError(f"padded witness is not exact: {why}")
    if lr_tableau_of(seq.middle) != smaller:
        raise AssertionError("middle term does not carry the increased tableau")
    ends = tableau_union(lr_tableau_of(seq.left), lr_tableau_of(seq.right))
    if ends != t:
        raise AssertionError("end terms do not carry the original tableau")
    return IncreaseWitness(smaller, seq, padding)


# ---------------------------------------------------------------------------
# Hom dimensions between embeddings


def hom_dim_embeddings(x: Embedding, z: Embedding) -> int:
    """Dimension of the maps of ambient modules carrying one submodule into
    the other, by parameterizing Hom and imposing membership constraints."""
    bx, bz = x.ambient, z.ambient
    if bx.p != bz.p:
        raise ValueError("field mismatch")
    p = bx.p
    params = [
        (i, j, v)
        for i, a in enumerate(bx.parts)
        for j, b in enumerate(bz.parts)
        for v in range(max(b - a, 0), b)
    ]
    if not params:
        return 0
    az = z.submodule
    blocks = []
    for gen in x.submodule.rows:
        block = np.zeros((bz.dim, len(params)), dtype=np.int64)
        for k, (i, j, v) in enumerate(params):
            off_s, off_t = bx.offsets[i], bz.offsets[j]
            a, b = bx.parts[i], bz.parts[j]
            for u in range(min(a, b - v)):
                c = gen[off_s + u]
                if c:
                    block[off_t + u + v, k] = (block[off_t + u + v, k] + c) % p
        for row, c in zip(az._matrix, az._pivots):
            piv = block[c, :].copy()
            if piv.any():
                block = (block - np.outer(row, piv)) % p
        blocks.append(block)
    if not blocks:
        return len(params)
    constraints = np.vstack(blocks)
    return len(params) - rank(constraints, p)


def hom_leq_over_family(x: Embedding, y: Embedding, family) -> bool:
    """Necessary condition for the hom order: dimension comparison against
    each test embedding in the supplied family only."""
    return all(hom_dim_embeddings(x, z) <= hom_dim_embeddings(y, z) for z in family)


def picket_family(max_power: int, max_part: int, p: int) -> tuple[Embedding, ...]:
    return tuple(
        picket(i, ell, p) for ell in range(1, max_part + 1) for i in range(0, max_power + 1)
    )
