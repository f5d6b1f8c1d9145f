"""Integer partitions drawn column-wise.

Throughout this package a partition is a tuple of weakly decreasing positive
integers whose parts are COLUMN heights of the Young diagram.  Diagram rows
are numbered 1, 2, ... from the top, so row lengths are given by the
transposed partition.  The empty tuple is the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Parts = tuple[int, ...]


def check_partition(parts) -> Parts:
    """Normalize ``parts`` to a tuple, rejecting non-partitions."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {x} in {p}")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    return p


def is_partition(parts) -> bool:
    try:
        check_partition(parts)
    except (ValueError, TypeError):
        return False
    return True


def weight(p: Parts) -> int:
    return sum(p)


def transpose(p: Parts) -> Parts:
    """Conjugate partition: entry j counts the parts that are >= j."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Parts, inner: Parts) -> bool:
    """Whether ``inner`` fits inside ``outer`` componentwise (zero padded)."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def nat_leq_general(a: Parts, b: Parts) -> bool:
    """Natural order on all partitions; weights may differ.

    a <= b iff every prefix sum of the conjugate of ``a`` is at most the
    corresponding prefix sum of the conjugate of ``b`` (missing entries
    count as zero).
    """
    ta, tb = transpose(a), transpose(b)
    sa = sb = 0
    for c in range(max(len(ta), len(tb))):
        sa += ta[c] if c < len(ta) else 0
        sb += tb[c] if c < len(tb) else 0
        if sa > sb:
            return False
    return True


def nat_leq_same_weight(a: Parts, b: Parts) -> bool:
    """Natural order on partitions of one weight, by row prefix sums.

    a <= b iff every prefix sum of the parts of ``a`` is at least the
    corresponding prefix sum of ``b``.  Agrees with :func:`nat_leq_general`
    on equal-weight inputs.
    """
    if weight(a) != weight(b):
        raise ValueError(f"weight mismatch: |{a}| = {weight(a)} != |{b}| = {weight(b)}")
    sa = sb = 0
    for c in range(max(len(a), len(b))):
        sa += a[c] if c < len(a) else 0
        sb += b[c] if c < len(b) else 0
        if sa < sb:
            return False
    return True


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions; the region of ``outer`` not in ``inner``."""

    outer: Parts
    inner: Parts

    def __post_init__(self):
        object.__setattr__(self, "outer", check_partition(self.outer))
        object.__setattr__(self, "inner", check_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)


def is_horizontal_strip(s: SkewShape) -> bool:
    """At most one cell per column: outer exceeds inner by <= 1 in each part."""
    inner = s.inner + (0,) * (len(s.outer) - len(s.inner))
    return all(b <= g + 1 for b, g in zip(s.outer, inner))


def is_vertical_strip(s: SkewShape) -> bool:
    """At most one cell per row: the transposed pair is a horizontal strip."""
    return is_horizontal_strip(SkewShape(transpose(s.outer), transpose(s.inner)))


def is_rook_strip(s: SkewShape) -> bool:
    """At most one cell in every row and in every column."""
    return is_horizontal_strip(s) and is_vertical_strip(s)


def union_rowwise(a: Parts, b: Parts) -> Parts:
    """Multiset union of the parts, sorted decreasing."""
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def partitions_of_weight(n: int) -> tuple[Parts, ...]:
    """All partitions of weight ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def gen(remaining: int, cap: int, prefix: Parts):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    return tuple(gen(n, n, ()))


def partitions_up_to_weight(n: int) -> tuple[Parts, ...]:
    out: list[Parts] = []
    for w in range(n + 1):
        out.extend(partitions_of_weight(w))
    return tuple(out)


def rook_strip_inners(beta: Parts) -> tuple[Parts, ...]:
    """All ``gamma`` inside ``beta`` for which the skew shape is a rook strip.

    Each distinct part value of ``beta`` may lose one cell, taken from the
    last column of its run; any other removal breaks either the partition
    condition or the one-cell-per-row condition.
    """
    beta = check_partition(beta)
    last_of_value: dict[int, int] = {}
    for i, v in enumerate(beta):
        last_of_value[v] = i
    positions = sorted(last_of_value.values())
    out = []
    for mask in range(1 << len(positions)):
        parts = list(beta)
        for k, pos in enumerate(positions):
            if mask >> k & 1:
                parts[pos] -= 1
        gamma = tuple(x for x in parts if x > 0)
        if is_partition(gamma):
            out.append(gamma)
    return tuple(sorted(set(out), reverse=True))


def format_partition(p: Parts) -> str:
    """Bracketed text form, e.g. ``[3,2,2,1]``; the empty partition is ``[]``."""
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> Parts:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected bracketed partition like [3,2,1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return check_partition(int(x) for x in body.split(","))
