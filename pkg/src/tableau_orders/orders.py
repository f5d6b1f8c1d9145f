"""Dominance and box orders on tableaux, and the maps connecting them.

The box order is generated by single decreasing moves and is decided here by
explicit breadth-first reachability over the move graph; the dominance order
is decided chain-wise through the natural order on partitions.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .partitions import (
    Parts,
    nat_leq_general,
    nat_leq_same_weight,
    transpose,
    weight,
)
from .tableaux import (
    LRTableau,
    StandardTableau,
    chain_to_syt,
    lr_from_cells,
    lr_validate,
    reading_word,
    rook_cells,
    syt_validate,
)


@dataclass(frozen=True)
class MoveRecord:
    """One decreasing box move.

    kind / data:
      ``swap``         -- (smaller entry, larger entry) exchanged in a standard tableau
      ``wind``         -- (source row, target row), rows 1-based from the top
      ``lr_swap``      -- (column of the smaller entry, column of the larger entry)
      ``lr_increase``  -- (column, old entry, new entry)
    """

    kind: str
    data: tuple[int, ...]


# ---------------------------------------------------------------------------
# standard tableaux


def dom_leq_syt(a: StandardTableau, b: StandardTableau) -> bool:
    """Chain-wise natural order; the tableaux may have different shapes."""
    if a.size != b.size:
        raise ValueError(f"weight mismatch: {a.size} != {b.size}")
    return all(
        nat_leq_same_weight(pa, pb) for pa, pb in zip(a.chain(), b.chain())
    )


def apply_swap(t: StandardTableau, x: int, y: int) -> StandardTableau:
    """Exchange entries ``x`` and ``y``; no validity check."""
    sub = {x: y, y: x}
    return StandardTableau(tuple(tuple(sub.get(e, e) for e in row) for row in t.rows))


def apply_wind(t: StandardTableau, src_row: int, tgt_row: int) -> StandardTableau:
    """Move the last box of ``src_row`` to the end of ``tgt_row`` (1-based)."""
    rows = [list(r) for r in t.rows]
    if not 1 <= src_row <= len(rows):
        raise ValueError(f"no row {src_row}")
    if tgt_row == len(rows) + 1:
        rows.append([])
    entry = rows[src_row - 1].pop()
    rows[tgt_row - 1].append(entry)
    return StandardTableau(tuple(tuple(r) for r in rows if r))


@lru_cache(maxsize=None)
def box_moves_syt(t: StandardTableau) -> tuple[tuple[StandardTableau, MoveRecord], ...]:
    """All tableaux one decreasing move below ``t``.

    Candidates are generated blindly and kept when the result validates: a
    swap must land the smaller entry in a higher-numbered row, a wind moves
    a row's last box to the end of some lower row (possibly a new one).
    """
    out = []
    pos = t.entry_positions()
    r = t.size
    for x in range(1, r + 1):
        for y in range(x + 1, r + 1):
            if pos[y][0] <= pos[x][0]:
                continue  # smaller entry must end up strictly lower
            cand = apply_swap(t, x, y)
            if syt_validate(cand)[0]:
                out.append((cand, MoveRecord("swap", (x, y))))
    nrows = len(t.rows)
    for i in range(1, nrows + 1):
        for j in range(i + 1, nrows + 2):
            if len(t.rows[i - 1]) == 1:
                continue  # removing the only box leaves a gap above row j
            cand = apply_wind(t, i, j)
            if cand.size == r and syt_validate(cand)[0]:
                out.append((cand, MoveRecord("wind", (i, j))))
    return tuple(sorted(out, key=lambda pair: (pair[0].chain(), pair[1].kind, pair[1].data)))


def box_leq_syt(
    a: StandardTableau, b: StandardTableau, *, return_path: bool = False
):
    """Whether ``a`` is reachable from ``b`` by decreasing moves (reflexively).

    With ``return_path`` the result is ``(flag, path)`` where ``path`` is a
    tuple of :class:`MoveRecord` transforming ``b`` into ``a``.
    """
    if a.size != b.size:
        raise ValueError(f"weight mismatch: {a.size} != {b.size}")
    target = a.rows
    start = b.rows
    parent: dict = {start: None}
    queue = deque([b])
    while queue:
        cur = queue.popleft()
        if cur.rows == target:
            if not return_path:
                return True
            path = []
            node = cur.rows
            while parent[node] is not None:
                prev, move = parent[node]
                path.append(move)
                node = prev
            return True, tuple(reversed(path))
        for nxt, move in box_moves_syt(cur):
            if nxt.rows not in parent:
                parent[nxt.rows] = (cur.rows, move)
                queue.append(nxt)
    return (False, None) if return_path else False


def box_leq_syt_same_shape(a: StandardTableau, b: StandardTableau) -> bool:
    """Box reachability between tableaux of one shape.

    Any witnessing path has every intermediate tableau between ``a`` and
    ``b`` in dominance, which pins its final chain element to the common
    shape; so only swap moves can occur and the search may prune every
    state not dominance-above ``a``.  Much cheaper than :func:`box_leq_syt`
    for large shapes.
    """
    if a.shape != b.shape:
        raise ValueError("tableaux must have the same shape")
    if not dom_leq_syt(a, b):
        return False
    target = a.rows
    seen = {b.rows}
    queue = deque([b])
    r = a.size
    while queue:
        cur = queue.popleft()
        if cur.rows == target:
            return True
        pos = cur.entry_positions()
        for x in range(1, r + 1):
            for y in range(x + 1, r + 1):
                if pos[y][0] <= pos[x][0]:
                    continue
                cand = apply_swap(cur, x, y)
                if cand.rows in seen or not syt_validate(cand)[0]:
                    continue
                if dom_leq_syt(a, cand):
                    seen.add(cand.rows)
                    queue.append(cand)
    return False


def embed_in_square(t: StandardTableau) -> StandardTableau:
    """Extend a weight-r tableau to the unique square-shape completion.

    The chain grows by r*r - r steps; each step increments the conjugate
    shape just below its top block of full rows.  The formal rule (largest
    index at most r-1 whose conjugate entry equals r, else 0) is asserted to
    agree with the count of full rows at every step.
    """
    r = t.size
    chain = list(t.chain())
    tp = list(transpose(chain[-1]))
    for _ in range(r * r - r):
        js = 0
        for j in range(min(len(tp), r - 1), 0, -1):
            if tp[j - 1] == r:
                js = j
                break
        count_full = sum(1 for x in tp if x == r)
        if js != count_full:
            raise AssertionError(
                f"full-row count {count_full} disagrees with formal index {js} at {tp}"
            )
        if js == len(tp):
            tp.append(1)
        else:
            tp[js] += 1
        new_part = transpose(tuple(tp))
        if weight(new_part) != weight(chain[-1]) + 1:
            raise AssertionError("square completion step is not a one-cell extension")
        chain.append(new_part)
    result = chain_to_syt(chain)
    if result.shape != (r,) * r:
        raise AssertionError(f"square completion has shape {result.shape}")
    return result


# ---------------------------------------------------------------------------
# LR tableaux on a rook strip


def dom_leq_lr(a: LRTableau, b: LRTableau) -> bool:
    """Chain-wise general natural order; chains padded by their outer shape."""
    if a.inner != b.inner or a.outer != b.outer:
        raise ValueError("tableaux must share inner and outer shapes")
    n = max(len(a.chain), len(b.chain))
    return all(nat_leq_general(a.step(k), b.step(k)) for k in range(n))


def _rook_entries(t: LRTableau) -> dict[tuple[int, int], int]:
    cells = rook_cells(t.outer, t.inner)  # raises off a rook strip
    filled = t.cells()
    return {cell: filled[cell] for cell in cells}


@lru_cache(maxsize=None)
def box_moves_lr(t: LRTableau) -> tuple[tuple[LRTableau, MoveRecord], ...]:
    """All single decreasing moves on a rook-strip LR tableau.

    A swap exchanges two entries so the smaller one lands in the lower cell;
    an increase replaces one entry by any larger value.  Either candidate is
    kept only when the result is again a valid LR tableau.
    """
    entries = _rook_entries(t)
    cells = sorted(entries)  # by (row, col)
    r = len(cells)
    out = []
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            hi, lo = cells[i], cells[j]  # hi is the upper cell (smaller row)
            if entries[hi] >= entries[lo]:
                continue  # the smaller entry must move down
            cand = dict(entries)
            cand[hi], cand[lo] = cand[lo], cand[hi]
            try:
                t2 = lr_from_cells(t.outer, t.inner, cand)
            except ValueError:
                continue
            out.append((t2, MoveRecord("lr_swap", (hi[1], lo[1]))))
    for cell in cells:
        for new in range(entries[cell] + 1, r + 1):
            cand = dict(entries)
            cand[cell] = new
            try:
                t2 = lr_from_cells(t.outer, t.inner, cand)
            except ValueError:
                continue
            out.append((t2, MoveRecord("lr_increase", (cell[1], entries[cell], new))))
    return tuple(sorted(out, key=lambda pair: (pair[0].chain, pair[1].kind, pair[1].data)))


def apply_lr_move(t: LRTableau, move: MoveRecord) -> LRTableau:
    """Apply one recorded move; the result must validate."""
    entries = {cell[1]: (cell, e) for cell, e in _rook_entries(t).items()}
    cand = {cell: e for cell, e in _rook_entries(t).items()}
    if move.kind == "lr_swap":
        ca, cb = move.data
        (cell_a, ea), (cell_b, eb) = entries[ca], entries[cb]
        cand[cell_a], cand[cell_b] = eb, ea
    elif move.kind == "lr_increase":
        col, old, new = move.data
        cell, e = entries[col]
        if e != old:
            raise ValueError(f"column {col} carries {e}, not {old}")
        cand[cell] = new
    else:
        raise ValueError(f"not an LR move: {move.kind}")
    return lr_from_cells(t.outer, t.inner, cand)


def box_leq_lr(a: LRTableau, b: LRTableau, *, return_path: bool = False):
    """Reachability of ``a`` from ``b`` by decreasing LR moves."""
    if a.inner != b.inner or a.outer != b.outer:
        raise ValueError("tableaux must share inner and outer shapes")
    parent: dict = {b.chain: None}
    queue = deque([b])
    while queue:
        cur = queue.popleft()
        if cur.chain == a.chain:
            if not return_path:
                return True
            path = []
            node = cur.chain
            while parent[node] is not None:
                prev, move = parent[node]
                path.append(move)
                node = prev
            return True, tuple(reversed(path))
        for nxt, move in box_moves_lr(cur):
            if nxt.chain not in parent:
                parent[nxt.chain] = (cur.chain, move)
                queue.append(nxt)
    return (False, None) if return_path else False


def lr_to_syt(t: LRTableau) -> StandardTableau:
    """The standard tableau listing, in row i, the reading positions of entry i."""
    word = reading_word(t)
    _rook_entries(t)  # enforce the rook-strip precondition
    top = max(word, default=0)
    rows = []
    for i in range(1, top + 1):
        rows.append(tuple(j + 1 for j, e in enumerate(word) if e == i))
    result = StandardTableau(tuple(rows))
    ok, why = syt_validate(result)
    if not ok:
        raise AssertionError(f"reading positions did not form a standard tableau: {why}")
    return result


def syt_to_lr(t: StandardTableau, beta, gamma) -> LRTableau:
    """Inverse of :func:`lr_to_syt` for the rook strip beta minus gamma.

    The cell at reading position j receives the index of the row of ``t``
    containing j.  Raises if the reconstruction is not a valid LR tableau,
    i.e. ``t`` is not in the image for this strip.
    """
    cells = rook_cells(beta, gamma)
    if len(cells) != t.size:
        raise ValueError(f"strip has {len(cells)} cells but tableau has weight {t.size}")
    entries = {}
    for i, row in enumerate(t.rows, start=1):
        for j in row:
            entries[cells[j - 1]] = i
    try:
        return lr_from_cells(tuple(beta), tuple(gamma), entries)
    except ValueError as exc:
        raise ValueError(f"tableau is not in the image for this strip: {exc}") from exc


# ---------------------------------------------------------------------------
# relation tables


def canonical_key(element):
    if isinstance(element, StandardTableau):
        return element.chain()
    if isinstance(element, LRTableau):
        return (element.inner, element.chain)
    raise TypeError(f"no canonical key for {type(element).__name__}")


@dataclass(frozen=True)
class RelationTable:
    """A finite poset: elements in canonical order plus the full <= matrix."""

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]

    def index(self, element) -> int:
        key = canonical_key(element)
        for i, e in enumerate(self.elements):
            if canonical_key(e) == key:
                return i
        raise KeyError("element not in table")


def _verify_poset(elements, matrix: np.ndarray) -> None:
    n = len(elements)
    for i in range(n):
        if not matrix[i, i]:
            raise ValueError(f"relation not reflexive at element {i}")
    both = matrix & matrix.T
    for i, j in zip(*np.nonzero(both)):
        if i != j:
            raise ValueError(f"relation not antisymmetric at pair ({i}, {j})")
    closure = matrix @ matrix
    gaps = closure & ~matrix
    if gaps.any():
        i, j = next(zip(*np.nonzero(gaps)))
        raise ValueError(f"relation not transitive at pair ({i}, {j})")


def relation_table(elements, leq) -> RelationTable:
    """Tabulate ``leq`` over ``elements`` (sorted canonically); verify a poset."""
    ordered = tuple(sorted(elements, key=canonical_key))
    n = len(ordered)
    matrix = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            matrix[i, j] = leq(ordered[i], ordered[j])
    _verify_poset(ordered, matrix)
    return RelationTable(ordered, tuple(tuple(bool(x) for x in row) for row in matrix))


def reachability_table(elements, moves) -> RelationTable:
    """Relation table of the move-generated order on a move-closed element set.

    ``moves(t)`` yields the elements one decreasing move below ``t``; entry
    (i, j) of the result records that element i is reachable from element j.
    """
    ordered = tuple(sorted(elements, key=canonical_key))
    index = {canonical_key(e): i for i, e in enumerate(ordered)}
    n = len(ordered)
    succ: list[list[int]] = []
    for e in ordered:
        row = []
        for nxt, _ in moves(e):
            key = canonical_key(nxt)
            if key not in index:
                raise AssertionError("element set is not closed under moves")
            row.append(index[key])
        succ.append(row)

    down: list[int | None] = [None] * n  # bitmask of reachable indices

    def descend(i: int) -> int:
        if down[i] is not None:
            return down[i]
        mask = 1 << i
        down[i] = mask  # moves strictly decrease dominance, so no cycles
        for j in succ[i]:
            mask |= descend(j)
        down[i] = mask
        return mask

    matrix = np.zeros((n, n), dtype=bool)
    for j in range(n):
        mask = descend(j)
        for i in range(n):
            matrix[i, j] = bool(mask >> i & 1)
    _verify_poset(ordered, matrix)
    return RelationTable(ordered, tuple(tuple(bool(x) for x in row) for row in matrix))


def relations_equal(a: RelationTable, b: RelationTable):
    """Compare two tables; on mismatch return the first differing pair."""
    keys_a = [canonical_key(e) for e in a.elements]
    keys_b = [canonical_key(e) for e in b.elements]
    if keys_a != keys_b:
        return False, {"reason": "element sets differ"}
    for i in range(len(keys_a)):
        for j in range(len(keys_a)):
            if a.leq[i][j] != b.leq[i][j]:
                return False, {
                    "i": i,
                    "j": j,
                    "left": a.leq[i][j],
                    "right": b.leq[i][j],
                    "pair": (keys_a[i], keys_a[j]),
                }
    return True, None


def hasse(rt: RelationTable) -> tuple[tuple[int, int], ...]:
    """Cover pairs (i, j) with element i covered by element j."""
    m = np.array(rt.leq, dtype=bool)
    strict = m & ~np.eye(len(rt.elements), dtype=bool)
    covers = strict & ~(strict @ strict)
    return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(covers)))


def _node_label(element) -> str:
    digest = hashlib.sha256(element.to_json().encode()).hexdigest()[:10]
    return f"{element.row_string()}\\n{digest}"


def to_dot(rt: RelationTable, name: str = "relation") -> str:
    """DOT text: one node per element, one edge per cover pair (upper -> lower)."""
    lines = [f"digraph {name} {{"]
    for i, e in enumerate(rt.elements):
        lines.append(f'  n{i} [label="{_node_label(e)}"];')
    for i, j in hasse(rt):
        lines.append(f"  n{j} -> n{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
