"""Standard Young tableaux and Littlewood-Richardson tableaux.

Both kinds of tableau live in the column convention of :mod:`.partitions`:
a shape is a tuple of column heights and the diagram's row lengths are its
transpose.  A standard tableau is stored by rows of entries; an LR tableau
is stored as its chain of partitions, from which the skew filling (cells
of the e-th chain step carry entry e) is derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Parts,
    SkewShape,
    check_partition,
    contains,
    is_horizontal_strip,
    is_partition,
    is_rook_strip,
    partitions_of_weight,
    transpose,
    union_rowwise,
    weight,
)

Cell = tuple[int, int]  # (row, column), both 1-based


# ---------------------------------------------------------------------------
# standard Young tableaux


@dataclass(frozen=True)
class StandardTableau:
    """A filling of a Young diagram by 1..r, increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> Parts:
        """Column heights; the row lengths are transpose(shape)."""
        return transpose(tuple(len(r) for r in self.rows))

    def entry_positions(self) -> dict[int, Cell]:
        pos = {}
        for i, row in enumerate(self.rows, start=1):
            for j, e in enumerate(row, start=1):
                pos[e] = (i, j)
        return pos

    def chain(self) -> tuple[Parts, ...]:
        """The saturated partition chain; step e is the shape of entries 1..e."""
        pos = self.entry_positions()
        heights: list[int] = []
        steps = []
        for e in range(1, self.size + 1):
            i, j = pos[e]
            if j == len(heights) + 1:
                heights.append(0)
            heights[j - 1] += 1
            steps.append(tuple(heights))
        return tuple(steps)

    def row_string(self) -> str:
        return "{" + "|".join(",".join(str(e) for e in row) for row in self.rows) + "}"

    def to_json(self) -> str:
        return json.dumps({"shape": list(self.shape), "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "StandardTableau":
        data = json.loads(text)
        t = cls(tuple(tuple(r) for r in data["rows"]))
        ok, why = syt_validate(t)
        if not ok:
            raise ValueError(f"invalid standard tableau: {why}")
        if tuple(data.get("shape", t.shape)) != t.shape:
            raise ValueError("shape field disagrees with rows")
        return t


def syt_validate(t: StandardTableau) -> tuple[bool, str | None]:
    """Check the standard-tableau conditions; on failure name the bad cell."""
    rows = t.rows
    r = t.size
    seen = sorted(e for row in rows for e in row)
    if seen != list(range(1, r + 1)):
        return False, f"entries are not exactly 1..{r}"
    for i, row in enumerate(rows, start=1):
        if not row:
            return False, f"row {i} is empty"
        for j in range(1, len(row)):
            if row[j - 1] >= row[j]:
                return False, f"row {i} not increasing at column {j + 1}"
    for i in range(1, len(rows)):
        if len(rows[i]) > len(rows[i - 1]):
            return False, f"row {i + 1} longer than row {i}"
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if rows[i - 1][j] >= rows[i][j]:
                return False, f"column {j + 1} not increasing at row {i + 1}"
    return True, None


def syt_to_chain(t: StandardTableau) -> tuple[Parts, ...]:
    return t.chain()


def chain_to_syt(chain) -> StandardTableau:
    """Rebuild the tableau whose e-th chain step added the cell of entry e."""
    steps = [check_partition(p) for p in chain]
    rows: list[list[int]] = []
    prev: Parts = ()
    for e, cur in enumerate(steps, start=1):
        if weight(cur) != e or not contains(cur, prev):
            raise ValueError(f"chain is not saturated at step {e}: {prev} -> {cur}")
        grown = [j for j in range(len(cur)) if cur[j] != (prev[j] if j < len(prev) else 0)]
        if len(grown) != 1:
            raise ValueError(f"chain step {e} does not add exactly one cell: {prev} -> {cur}")
        row = cur[grown[0]]  # the new cell sits at the bottom of its column
        while len(rows) < row:
            rows.append([])
        rows[row - 1].append(e)
        prev = cur
    t = StandardTableau(tuple(tuple(r) for r in rows))
    ok, why = syt_validate(t)
    if not ok:
        raise ValueError(f"chain does not describe a standard tableau: {why}")
    return t


@lru_cache(maxsize=None)
def _syt_chains(shape: Parts) -> tuple[tuple[Parts, ...], ...]:
    if not shape:
        return ((),)
    chains = []
    for j in range(len(shape)):
        if j + 1 < len(shape) and shape[j] == shape[j + 1]:
            continue  # not a removable corner
        smaller = tuple(x for x in shape[:j] + (shape[j] - 1,) + shape[j + 1 :] if x)
        for c in _syt_chains(smaller):
            chains.append(c + (shape,))
    return tuple(chains)


def enumerate_syt(shape) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the given column-height shape, chain-sorted."""
    shape = check_partition(shape)
    return tuple(chain_to_syt(c) for c in sorted(_syt_chains(shape)))


def enumerate_T_r(r: int) -> tuple[StandardTableau, ...]:
    """All standard tableaux of weight ``r``, over every shape, chain-sorted."""
    if r < 1:
        raise ValueError("weight must be at least 1")
    chains = []
    for shape in partitions_of_weight(r):
        chains.extend(_syt_chains(shape))
    return tuple(chain_to_syt(c) for c in sorted(chains))


# ---------------------------------------------------------------------------
# Littlewood-Richardson tableaux


@dataclass(frozen=True)
class LRTableau:
    """A skew tableau stored as its partition chain.

    ``chain[0]`` is the inner shape and ``chain[-1]`` the outer shape; the
    cells added by step e carry entry e.  The chain is stored trimmed at the
    first index where it stabilizes; comparisons pad with the final shape.
    """

    inner: Parts
    chain: tuple[Parts, ...]

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(self.inner))
        chain = tuple(tuple(p) for p in self.chain)
        while len(chain) > 1 and chain[-1] == chain[-2]:
            chain = chain[:-1]
        object.__setattr__(self, "chain", chain)

    @property
    def outer(self) -> Parts:
        return self.chain[-1]

    @property
    def size(self) -> int:
        """Number of filled cells."""
        return weight(self.outer) - weight(self.inner)

    def step(self, e: int) -> Parts:
        """Chain step ``e`` with implicit padding by the outer shape."""
        return self.chain[e] if e < len(self.chain) else self.outer

    def padded_chain(self, length: int) -> tuple[Parts, ...]:
        return tuple(self.step(e) for e in range(length))

    def max_entry(self) -> int:
        return len(self.chain) - 1

    def cells(self) -> dict[Cell, int]:
        """Map from (row, column) to entry for every filled cell."""
        out: dict[Cell, int] = {}
        for e in range(1, len(self.chain)):
            prev, cur = self.chain[e - 1], self.chain[e]
            for j in range(len(cur)):
                lo = prev[j] if j < len(prev) else 0
                for row in range(lo + 1, cur[j] + 1):
                    out[(row, j + 1)] = e
        return out

    def row_string(self) -> str:
        cells = self.cells()
        rows = transpose(self.outer)
        parts = []
        for i in range(1, len(rows) + 1):
            parts.append(",".join(str(cells.get((i, j), ".")) for j in range(1, rows[i - 1] + 1)))
        return "{" + "|".join(parts) + "}"

    def to_json(self) -> str:
        return json.dumps({"inner": list(self.inner), "chain": [list(p) for p in self.chain]})

    @classmethod
    def from_json(cls, text: str) -> "LRTableau":
        data = json.loads(text)
        return lr_from_chain(tuple(data["inner"]), tuple(tuple(p) for p in data["chain"]))


def reading_word(t: LRTableau) -> tuple[int, ...]:
    """Entries read down each column, rightmost column first."""
    cells = t.cells()
    order = sorted(cells, key=lambda rc: (-rc[1], rc[0]))
    return tuple(cells[rc] for rc in order)


def _lattice_violation(word) -> int | None:
    """Index (0-based) of the first prefix where some e+1 outruns e."""
    counts: dict[int, int] = {}
    for i, e in enumerate(word):
        if e < 1:
            return i
        counts[e] = counts.get(e, 0) + 1
        if e > 1 and counts[e] > counts.get(e - 1, 0):
            return i
    return None


def lr_validate(t: LRTableau) -> tuple[bool, str | None]:
    """Check the LR conditions on the stored chain; name the first violation."""
    for k, p in enumerate(t.chain):
        if not is_partition(p):
            return False, f"chain step {k} is not a partition: {p}"
    if t.chain[0] != t.inner:
        return False, "chain does not start at the inner shape"
    for e in range(1, len(t.chain)):
        prev, cur = t.chain[e - 1], t.chain[e]
        if not contains(cur, prev):
            return False, f"chain not increasing at step {e}"
        if not is_horizontal_strip(SkewShape(cur, prev)):
            return False, f"step {e} adds two cells in one column (column entries not strict)"
    word = reading_word(t)
    bad = _lattice_violation(word)
    if bad is not None:
        return False, f"lattice condition fails at reading position {bad + 1}"
    return True, None


def lr_from_chain(inner, chain) -> LRTableau:
    t = LRTableau(tuple(inner), tuple(tuple(p) for p in chain))
    ok, why = lr_validate(t)
    if not ok:
        raise ValueError(f"invalid LR tableau: {why}")
    return t


def lr_to_chain(t: LRTableau, length: int | None = None) -> tuple[Parts, ...]:
    """The chain, padded with the outer shape up to ``length`` steps if given."""
    if length is None:
        return t.chain
    if length < len(t.chain):
        raise ValueError("cannot truncate below the stored chain length")
    return t.padded_chain(length)


def lr_content(t: LRTableau) -> Parts:
    """Content partition: its transpose counts the cells carrying each entry."""
    mult = tuple(
        weight(t.chain[e]) - weight(t.chain[e - 1]) for e in range(1, len(t.chain))
    )
    if not is_partition(mult):
        raise ValueError(f"entry multiplicities {mult} do not form a partition")
    return transpose(mult)


def lr_from_cells(beta: Parts, gamma: Parts, entries: dict[Cell, int]) -> LRTableau:
    """Assemble an LR tableau of shape beta minus gamma from a cell filling."""
    beta, gamma = check_partition(beta), check_partition(gamma)
    heights = list(gamma) + [0] * (len(beta) - len(gamma))
    top = max(entries.values(), default=0)
    chain = [tuple(x for x in heights if x)]
    by_entry: dict[int, list[Cell]] = {}
    for cell, e in entries.items():
        by_entry.setdefault(e, []).append(cell)
    for e in range(1, top + 1):
        for row, col in sorted(by_entry.get(e, [])):
            if heights[col - 1] != row - 1:
                raise ValueError(f"cell ({row},{col}) is not addable at step {e}")
            heights[col - 1] = row
        chain.append(tuple(x for x in heights if x))
    if chain[-1] != beta:
        raise ValueError("filling does not exhaust the skew shape")
    return lr_from_chain(chain[0], chain)


def rook_cells(beta: Parts, gamma: Parts) -> tuple[Cell, ...]:
    """Cells of the rook strip beta minus gamma in reading order."""
    shape = SkewShape(beta, gamma)
    if not is_rook_strip(shape):
        raise ValueError(f"{beta} minus {gamma} is not a rook strip")
    gamma_p = gamma + (0,) * (len(beta) - len(gamma))
    cells = [(beta[j], j + 1) for j in range(len(beta)) if beta[j] == gamma_p[j] + 1]
    return tuple(sorted(cells, key=lambda rc: (-rc[1], rc[0])))


def enumerate_lr_rook(beta, gamma) -> tuple[LRTableau, ...]:
    """All LR tableaux on the rook strip beta minus gamma, chain-sorted."""
    beta, gamma = check_partition(beta), check_partition(gamma)
    cells = rook_cells(beta, gamma)
    r = len(cells)
    found: list[LRTableau] = []

    def backtrack(pos: int, word: list[int], counts: list[int]):
        if pos == r:
            try:
                found.append(lr_from_cells(beta, gamma, dict(zip(cells, word))))
            except ValueError:
                pass
            return
        for e in range(1, r + 1):
            if e > 1 and counts[e] + 1 > counts[e - 1]:
                continue  # lattice prefix would fail
            counts[e] += 1
            word.append(e)
            backtrack(pos + 1, word, counts)
            word.pop()
            counts[e] -= 1

    backtrack(0, [], [0] * (r + 2))
    return tuple(sorted(found, key=lambda t: (t.inner, t.chain)))


def tableau_union(a: LRTableau, b: LRTableau) -> LRTableau:
    """Row-wise union: step k of the result is the part-multiset union of
    step k of each argument, shorter chains padded by their final shape."""
    n = max(len(a.chain), len(b.chain))
    chain = tuple(union_rowwise(a.step(k), b.step(k)) for k in range(n))
    return LRTableau(union_rowwise(a.inner, b.inner), chain)
