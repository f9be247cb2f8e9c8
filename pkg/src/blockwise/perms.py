"""Permutations in one-line notation over {1, ..., n}.

Conventions used throughout the package:

- A permutation is a tuple of ints containing each of 1..n exactly once,
  e.g. ``(4, 2, 5, 3, 7, 1, 6)``.  Functions accept any sequence and return
  tuples.
- A *window* addresses a contiguous run of positions, 1-based:
  ``Window(start=5, length=5)`` means positions 5..9.
- An *interval* (or block) is a window whose values are also contiguous
  integers.  Intervals are reported as value ranges ``(a, b)`` meaning the
  set {a, a+1, ..., b}.
- Text form: a space-free digit string for n <= 9 ("4253716"), or
  comma-separated integers ("4,2,5,3,7,1,6").  Both are accepted on input.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

Perm = tuple[int, ...]
ValueRange = tuple[int, int]


class Window(NamedTuple):
    """Positions start, start+1, ..., start+length-1 (1-based)."""

    start: int
    length: int


def perm(values: Iterable[int]) -> Perm:
    """Validate and normalize a sequence to a permutation tuple.

    >>> perm([4, 2, 5, 3, 7, 1, 6])
    (4, 2, 5, 3, 7, 1, 6)
    """
    p = tuple(values)
    if not p:
        raise ValueError("permutation must have length >= 1")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse either digit-string or comma-separated text form.

    >>> parse_perm("4253716") == parse_perm("4,2,5,3,7,1,6")
    True
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    try:
        if "," in text:
            values = [int(tok) for tok in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"malformed permutation string: {text!r}") from None
    return perm(values)


def format_perm(p: Sequence[int]) -> str:
    """Digit string for n <= 9, comma-separated otherwise."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _check_window(p: Sequence[int], w: Window) -> None:
    if w.length < 1 or w.start < 1 or w.start + w.length - 1 > len(p):
        raise ValueError(f"window {w} out of range for length-{len(p)} permutation")


def window_values(p: Sequence[int], w: Window) -> tuple[int, ...]:
    _check_window(p, w)
    return tuple(p[w.start - 1 : w.start + w.length - 1])


def is_interval(p: Sequence[int], w: Window) -> bool:
    """True iff the values in the window form a contiguous range.

    Since the entries are distinct, the window holds exactly length
    values, so it is an interval iff max - min == length - 1.

    >>> is_interval((3, 1, 4, 2, 9, 7, 8, 5, 6), Window(5, 5))
    True
    >>> is_interval((3, 1, 4, 2, 9, 7, 8, 5, 6), Window(1, 2))
    False
    """
    vals = window_values(p, w)
    return max(vals) - min(vals) == w.length - 1


def intervals(p: Sequence[int]) -> set[ValueRange]:
    """All intervals of p as value ranges, trivial ones included."""
    n = len(p)
    found: set[ValueRange] = set()
    for i in range(n):
        lo = hi = p[i]
        for j in range(i, n):
            v = p[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i:
                found.add((lo, hi))
    return found


def proper_intervals(p: Sequence[int]) -> set[ValueRange]:
    """Intervals that are neither singletons nor the whole permutation.

    >>> sorted(proper_intervals((3, 1, 4, 2, 9, 7, 8, 5, 6)))
    [(1, 4), (5, 6), (5, 8), (5, 9), (7, 8), (7, 9)]
    >>> proper_intervals((3, 5, 1, 7, 2, 4, 6))
    set()
    """
    n = len(p)
    return {(a, b) for a, b in intervals(p) if b > a and b - a + 1 < n}


def is_simple(p: Sequence[int]) -> bool:
    """True iff p has no proper interval.

    Lengths 1 and 2 count as simple under this definition; use
    :func:`is_simple_ge4` for the convention that requires length >= 4.
    """
    n = len(p)
    for i in range(n):
        lo = hi = p[i]
        for j in range(i + 1, n):
            v = p[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i and j - i + 1 < n:
                return False
    return True


def is_simple_ge4(p: Sequence[int]) -> bool:
    return len(p) >= 4 and is_simple(p)


def direct_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    """p followed by q shifted above it.

    >>> direct_sum((1, 3, 2), (4, 2, 3, 1))
    (1, 3, 2, 7, 5, 6, 4)
    """
    m = len(p)
    return tuple(p) + tuple(v + m for v in q)


def skew_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    """p shifted above q, followed by q.

    >>> skew_sum((1, 3, 2), (4, 2, 3, 1))
    (5, 7, 6, 4, 2, 3, 1)
    """
    n = len(q)
    return tuple(v + n for v in p) + tuple(q)


def inflate(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]) -> Perm:
    """Replace the i-th entry of the skeleton by a block order-isomorphic
    to blocks[i].

    >>> inflate((2, 4, 1, 3), [(2, 1, 3), (2, 1), (1, 3, 2), (1,)])
    (5, 4, 6, 9, 8, 1, 3, 2, 7)
    """
    k = len(skeleton)
    if len(blocks) != k:
        raise ValueError(f"skeleton of length {k} needs {k} blocks, got {len(blocks)}")
    # offset for entry i = total size of blocks at entries with smaller value
    by_value = sorted(range(k), key=lambda i: skeleton[i])
    offsets = [0] * k
    total = 0
    for i in by_value:
        offsets[i] = total
        total += len(blocks[i])
    out: list[int] = []
    for i in range(k):
        off = offsets[i]
        out.extend(v + off for v in blocks[i])
    return tuple(out)


def pattern_of(p: Sequence[int], w: Window) -> Perm:
    """The permutation order-isomorphic to the entries of p in the window.

    >>> pattern_of((4, 2, 5, 3, 7, 1, 6), Window(1, 4))
    (3, 1, 4, 2)
    """
    vals = window_values(p, w)
    rank = {v: r for r, v in enumerate(sorted(vals), start=1)}
    return tuple(rank[v] for v in vals)


def inverse(p: Sequence[int]) -> Perm:
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v - 1] = i + 1
    return tuple(q)


def reverse(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def des(p: Sequence[int]) -> int:
    """Number of positions i with p[i] > p[i+1].

    >>> des((2, 4, 6, 1, 3, 5))
    1
    """
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


def ides(p: Sequence[int]) -> int:
    """Descent number of the inverse permutation.

    >>> ides((2, 4, 6, 1, 3, 5))
    3
    """
    return des(inverse(p))
