"""Substitution decomposition and block-wise simplicity.

Every permutation of length >= 2 is the inflation of a unique simple
skeleton: either the increasing permutation 1..k (maximal direct-sum
split), the decreasing permutation k..1 (maximal skew-sum split), or a
simple permutation of length >= 4 whose blocks are the maximal proper
intervals.  Recursing on the blocks gives the canonical decomposition
tree.

A permutation is *block-wise simple* when no interval of it, the whole
permutation included, is order-isomorphic to a direct or skew sum of two
permutations; equivalently, every internal node of its decomposition tree
carries a simple skeleton of length >= 4.  Both characterizations are
implemented and cross-checked in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perms import Perm, Window, format_perm, is_simple, pattern_of, proper_intervals


@dataclass(frozen=True)
class DecompTree:
    """Node of a substitution-decomposition tree.

    ``window`` is the span of the original permutation covered by this
    node.  Leaves have ``skeleton is None`` and no children.
    """

    window: Window
    skeleton: Perm | None
    children: tuple["DecompTree", ...]

    @property
    def is_leaf(self) -> bool:
        return self.skeleton is None

    def internal_nodes(self):
        if not self.is_leaf:
            yield self
            for child in self.children:
                yield from child.internal_nodes()


def is_sum_decomposable(p: Sequence[int]) -> bool:
    """True iff some proper prefix of positions holds exactly the values
    1..m."""
    hi = 0
    for i in range(len(p) - 1):
        if p[i] > hi:
            hi = p[i]
        if hi == i + 1:
            return True
    return False


def is_skew_decomposable(p: Sequence[int]) -> bool:
    """True iff some proper prefix holds exactly the top values."""
    n = len(p)
    lo = n + 1
    for i in range(n - 1):
        if p[i] < lo:
            lo = p[i]
        if lo == n - i:
            return True
    return False


def _sum_cuts(p: Sequence[int]) -> list[int]:
    # positions i (1-based) after which prefix values == {1..i}
    hi = 0
    cuts = []
    for i, v in enumerate(p, start=1):
        if v > hi:
            hi = v
        if hi == i:
            cuts.append(i)
    return cuts


def _skew_cuts(p: Sequence[int]) -> list[int]:
    n = len(p)
    lo = n + 1
    cuts = []
    for i, v in enumerate(p, start=1):
        if v < lo:
            lo = v
        if lo == n - i + 1:
            cuts.append(i)
    return cuts


def _decompose_windows(p: Sequence[int]) -> tuple[Perm, list[Window]]:
    """Skeleton plus the windows its blocks occupy, for |p| >= 2."""
    n = len(p)
    if n < 2:
        raise ValueError("length-1 permutations have no decomposition")

    cuts = _sum_cuts(p)
    if len(cuts) > 1:
        skeleton: Perm = tuple(range(1, len(cuts) + 1))
    else:
        cuts = _skew_cuts(p)
        skeleton = tuple(range(len(cuts), 0, -1))
    if len(cuts) > 1:
        starts = [1] + [c + 1 for c in cuts[:-1]]
        return skeleton, [Window(s, e - s + 1) for s, e in zip(starts, cuts)]

    # indecomposable: blocks are the maximal proper intervals, with
    # singletons filling the gaps
    props = proper_intervals(p)
    maximal = [
        (a, b)
        for a, b in props
        if not any((c <= a and b <= d) and (c, d) != (a, b) for c, d in props)
    ]
    pos = {v: i + 1 for i, v in enumerate(p)}
    windows: list[Window] = []
    for a, b in maximal:
        start = min(pos[v] for v in range(a, b + 1))
        windows.append(Window(start, b - a + 1))
    covered = set()
    for w in windows:
        span = set(range(w.start, w.start + w.length))
        if span & covered:
            raise AssertionError(f"maximal intervals of {p!r} overlap")
        covered |= span
    for i in range(1, n + 1):
        if i not in covered:
            windows.append(Window(i, 1))
    windows.sort()
    k = len(windows)
    ranks = [0] * k
    for rank, i in enumerate(
        sorted(range(k), key=lambda i: p[windows[i].start - 1]), start=1
    ):
        ranks[i] = rank
    skeleton = tuple(ranks)
    if not (k >= 4 and is_simple(skeleton)):
        raise AssertionError(f"skeleton of {p!r} not simple of length >= 4")
    return skeleton, windows


def skeleton_decompose(p: Sequence[int]) -> tuple[Perm, list[Perm]]:
    """One level of substitution decomposition.

    Sum-decomposable permutations split into the maximal direct sum
    (skeleton 1..k), skew-decomposable ones into the maximal skew sum
    (skeleton k..1); anything else deflates to its unique simple skeleton
    of length >= 4.

    >>> skeleton_decompose((4, 2, 5, 3, 7, 1, 6))
    ((2, 4, 1, 3), [(3, 1, 4, 2), (1,), (1,), (1,)])
    """
    skeleton, windows = _decompose_windows(p)
    return skeleton, [pattern_of(p, w) for w in windows]


def _tree(p: Sequence[int], w: Window) -> DecompTree:
    if w.length == 1:
        return DecompTree(w, None, ())
    block = pattern_of(p, w)
    skeleton, windows = _decompose_windows(block)
    children = tuple(
        _tree(p, Window(w.start + sub.start - 1, sub.length)) for sub in windows
    )
    return DecompTree(w, skeleton, children)


def decomp_tree(p: Sequence[int]) -> DecompTree:
    """Full recursive substitution-decomposition tree of p."""
    return _tree(p, Window(1, len(p)))


def format_tree(t: DecompTree, p: Sequence[int]) -> str:
    """Compact text form, e.g. ``2413[3142,1,1,1]``.

    A node whose children are all leaves prints as its skeleton alone.
    """
    if t.is_leaf:
        return "1"
    assert t.skeleton is not None
    if all(c.is_leaf for c in t.children):
        return format_perm(t.skeleton)
    inner = ",".join(format_tree(c, p) for c in t.children)
    return f"{format_perm(t.skeleton)}[{inner}]"


def _has_decomposable_split(p: Sequence[int], i: int, j: int, lo: int, hi: int) -> bool:
    # does the interval at 0-based positions i..j split into a direct or
    # skew sum?  prefix i..m is the bottom part iff its max is lo+(m-i),
    # the top part iff its min is hi-(m-i)
    pmn = pmx = p[i]
    for m in range(i, j):
        v = p[m]
        if v < pmn:
            pmn = v
        elif v > pmx:
            pmx = v
        if pmx - lo == m - i or hi - pmn == m - i:
            return True
    return False


def is_blockwise_simple_by_intervals(p: Sequence[int]) -> bool:
    """Direct check: no interval of p, the whole permutation included,
    is order-isomorphic to a direct or skew sum."""
    n = len(p)
    for i in range(n):
        lo = hi = p[i]
        for j in range(i + 1, n):
            v = p[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i and _has_decomposable_split(p, i, j, lo, hi):
                return False
    return True


def is_blockwise_simple_recursive(p: Sequence[int]) -> bool:
    """Recursive check: the decomposition tree has no node whose skeleton
    is 1..k or k..1, so every internal skeleton is simple of length >= 4."""
    if len(p) == 1:
        return True
    if is_sum_decomposable(p) or is_skew_decomposable(p):
        return False
    _, blocks = skeleton_decompose(p)
    return all(len(b) == 1 or is_blockwise_simple_recursive(b) for b in blocks)


is_blockwise_simple = is_blockwise_simple_recursive
