"""Exhaustive enumerators, the counting recursion, and the ratio table.

The brute-force enumerators walk prefixes of one-line notation in
lexicographic order and abandon a prefix as soon as it completes a
forbidden interval, which keeps n = 10 (and with patience n = 11) within
reach.  Counts are cross-checked against the recursion

    w_n = sum_{l=4}^{n} s_l * sum_{parts of n into l} w_p1 * ... * w_pl

with seeds w_1 = 1, w_2 = w_3 = 0, and against the generating-function
route in the series module.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .perms import Perm


class CapExceededError(RuntimeError):
    """Enumeration size exceeds the configured cap."""


Composition = tuple[int, ...]


def compositions(n: int, length: int) -> Iterator[Composition]:
    """All compositions of n into the given number of positive parts, in
    lexicographic order.

    >>> list(compositions(5, 2))
    [(1, 4), (2, 3), (3, 2), (4, 1)]
    """
    if not 1 <= length <= n:
        raise ValueError(f"need 1 <= length <= n, got length={length}, n={n}")

    def rec(remaining: int, parts: int, prefix: tuple[int, ...]) -> Iterator[Composition]:
        if parts == 1:
            yield prefix + (remaining,)
            return
        for first in range(1, remaining - parts + 2):
            yield from rec(remaining - first, parts - 1, prefix + (first,))

    return rec(n, length, ())


def composition_count(n: int, length: int) -> int:
    return comb(n - 1, length - 1)


# ---------------------------------------------------------------------------
# prefix-pruned enumeration
# ---------------------------------------------------------------------------
#
# Simple permutations: prune as soon as any completed window of length >= 2
# is an interval (the full window at depth n is the one exception).
#
# Block-wise simple permutations: a decomposable interval is exactly the
# union of two position-adjacent intervals whose value ranges are adjacent,
# so it suffices to remember, for every earlier position m, the set of
# minima and maxima of the intervals ending at m.  When a new window
# (j..k) turns out to be an interval [lo, hi], the prefix dies iff some
# interval ending at j-1 has maximum lo-1 or minimum hi+1.  The sets are
# kept as bitmasks (bit v = value v).


def _simple_engine(n: int, first: int | None = None, collect: list[Perm] | None = None) -> int:
    if n == 1:
        if first in (None, 1):
            if collect is not None:
                collect.append((1,))
            return 1
        return 0
    vals = [0] * (n + 1)
    count = 0

    def rec(k: int, used: int) -> None:
        nonlocal count
        last = k == n
        candidates = range(1, n + 1) if (k > 1 or first is None) else (first,)
        for v in candidates:
            bit = 1 << v
            if used & bit:
                continue
            lo = hi = v
            ok = True
            for j in range(k - 1, 0, -1):
                u = vals[j]
                if u < lo:
                    lo = u
                elif u > hi:
                    hi = u
                if hi - lo == k - j and (not last or j > 1):
                    ok = False
                    break
            if not ok:
                continue
            vals[k] = v
            if last:
                count += 1
                if collect is not None:
                    collect.append(tuple(vals[1:]))
            else:
                rec(k + 1, used | bit)

    rec(1, 0)
    return count


def _blockwise_engine(n: int, first: int | None = None, collect: list[Perm] | None = None) -> int:
    if n == 1:
        if first in (None, 1):
            if collect is not None:
                collect.append((1,))
            return 1
        return 0
    vals = [0] * (n + 1)
    minmask = [0] * (n + 1)
    maxmask = [0] * (n + 1)
    count = 0

    def rec(k: int, used: int) -> None:
        nonlocal count
        last = k == n
        candidates = range(1, n + 1) if (k > 1 or first is None) else (first,)
        for v in candidates:
            bit = 1 << v
            if used & bit:
                continue
            if k > 1 and ((maxmask[k - 1] >> (v - 1)) & 1 or (minmask[k - 1] >> (v + 1)) & 1):
                continue
            lo = hi = v
            mmin = 1 << v
            mmax = 1 << v
            ok = True
            for j in range(k - 1, 0, -1):
                u = vals[j]
                if u < lo:
                    lo = u
                elif u > hi:
                    hi = u
                if hi - lo == k - j:
                    if j > 1 and (
                        (maxmask[j - 1] >> (lo - 1)) & 1 or (minmask[j - 1] >> (hi + 1)) & 1
                    ):
                        ok = False
                        break
                    mmin |= 1 << lo
                    mmax |= 1 << hi
            if not ok:
                continue
            vals[k] = v
            if last:
                count += 1
                if collect is not None:
                    collect.append(tuple(vals[1:]))
            else:
                minmask[k] = mmin
                maxmask[k] = mmax
                rec(k + 1, used | bit)

    rec(1, 0)
    return count


_ENGINES = {"simple": _simple_engine, "blockwise": _blockwise_engine}


def _count_task(args: tuple[str, int, int]) -> int:
    kind, n, first = args
    return _ENGINES[kind](n, first)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(f"n={n} exceeds enumeration cap {cap}")


def simple_perms(n: int, cap: int = 10) -> list[Perm]:
    """All simple permutations of length n, lexicographically sorted.

    Lengths 1 and 2 count as simple, matching :func:`blockwise.perms.is_simple`.
    """
    _check_cap(n, cap)
    out: list[Perm] = []
    _simple_engine(n, collect=out)
    return out


def blockwise_simple_perms(n: int, cap: int = 10) -> list[Perm]:
    """All block-wise simple permutations of length n, lexicographically
    sorted."""
    _check_cap(n, cap)
    out: list[Perm] = []
    _blockwise_engine(n, collect=out)
    return out


def _count(kind: str, n: int, cap: int, workers: int) -> int:
    _check_cap(n, cap)
    if workers <= 1 or n < 4:
        return _ENGINES[kind](n)
    tasks = [(kind, n, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_task, tasks))


def count_simple_bruteforce(n: int, cap: int = 10, workers: int = 1) -> int:
    """|{p in S_n : p is simple}| by pruned exhaustive enumeration."""
    return _count("simple", n, cap, workers)


def count_blockwise_bruteforce(n: int, cap: int = 10, workers: int = 1) -> int:
    """|{p in S_n : p is block-wise simple}| by pruned exhaustive
    enumeration."""
    return _count("blockwise", n, cap, workers)


# ---------------------------------------------------------------------------
# counting recursion
# ---------------------------------------------------------------------------


def _composition_product_sum(n: int, length: int, w: Mapping[int, int], memo: dict) -> int:
    """sum over compositions of n into `length` parts of the product of
    w at the parts; zero-weight parts prune whole branches."""
    if length == 1:
        return w[n]
    key = (n, length)
    if key in memo:
        return memo[key]
    total = 0
    for first in range(1, n - length + 2):
        wf = w[first]
        if wf:
            total += wf * _composition_product_sum(n - first, length - 1, w, memo)
    memo[key] = total
    return total


def blockwise_counts_by_recursion(n_max: int, s: Mapping[int, int]) -> dict[int, int]:
    """w_1..w_{n_max} from the counting recursion, seeded w_1=1, w_2=w_3=0.

    ``s`` must supply the simple counts s_l for 4 <= l <= n_max.
    """
    missing = [l for l in range(4, n_max + 1) if l not in s]
    if missing:
        raise ValueError(f"missing simple counts for lengths {missing}")
    w = {1: 1, 2: 0, 3: 0}
    for m in range(4, n_max + 1):
        memo: dict = {}
        w[m] = sum(s[l] * _composition_product_sum(m, l, w, memo) for l in range(4, m + 1))
    return {k: v for k, v in w.items() if k <= n_max}


def count_blockwise_recursion(n: int, s: Mapping[int, int]) -> int:
    """w_n from the counting recursion.

    >>> count_blockwise_recursion(7, {4: 2, 5: 6, 6: 46, 7: 338})
    354
    """
    if n < 4:
        return {1: 1, 2: 0, 3: 0}.get(n, 0)
    return blockwise_counts_by_recursion(n, s)[n]


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def render_significant(x: Fraction, digits: int = 6) -> str:
    """Exact decimal rendering of a non-negative rational to the given
    number of significant digits (round half away from zero).

    >>> render_significant(Fraction(16, 5040))
    '0.00317460'
    """
    if x < 0:
        raise ValueError("negative ratios not expected")
    if x == 0:
        return "0"
    exp = 0  # exponent of the leading digit
    while x < 1:
        x *= 10
        exp -= 1
    while x >= 10:
        x /= 10
        exp += 1
    scaled = x * 10 ** (digits - 1)
    mantissa = scaled.numerator // scaled.denominator
    if 2 * (scaled - mantissa) >= 1:
        mantissa += 1
    if mantissa >= 10**digits:  # rounding bumped into an extra digit
        mantissa //= 10
        exp += 1
    s = str(mantissa)
    point = exp + 1  # digits before the decimal point
    if point <= 0:
        return "0." + "0" * (-point) + s
    if point >= len(s):
        return s + "0" * (point - len(s))
    return s[:point] + "." + s[point:]


def ratio_table(
    n_max: int, s: Mapping[int, int], w: Mapping[int, int], digits: int = 6
) -> list[tuple[int, Fraction, str]]:
    """Rows (n, (w_n - s_n)/n! as an exact fraction, decimal string)."""
    rows = []
    for n in range(1, n_max + 1):
        r = Fraction(w[n] - s[n], factorial(n))
        rows.append((n, r, render_significant(r, digits)))
    return rows


@dataclass
class CountTable:
    """Counts per length with a tag recording how they were obtained."""

    source: str
    rows: dict[int, tuple[int, int]] = field(default_factory=dict)  # n -> (w_n, s_n)

    def add(self, n: int, w_n: int, s_n: int) -> None:
        self.rows[n] = (w_n, s_n)

    def to_csv(self) -> str:
        lines = ["n,w_n,s_n"]
        for n in sorted(self.rows):
            w_n, s_n = self.rows[n]
            lines.append(f"{n},{w_n},{s_n}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "source": self.source,
            "rows": [
                {"n": n, "w_n": str(self.rows[n][0]), "s_n": str(self.rows[n][1])}
                for n in sorted(self.rows)
            ],
        }
