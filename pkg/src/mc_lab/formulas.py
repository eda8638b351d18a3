"""Closed-form edge thresholds for the monochromatic connection number.

Four piecewise functions of (n, k), each answering one question about
connected n-vertex graphs and the target value k:

* ``min_edges_forcing``    least m such that every graph with >= m edges
                           has mc >= k
* ``max_edges_capping``    greatest m such that every graph with <= m edges
                           has mc <= k
* ``min_edges_reaching``   least edge count among graphs with mc >= k
* ``max_edges_within``     greatest edge count among graphs with mc <= k

The last two are one-step shifts of the first two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class FormulaResult:
    """One evaluated table cell; ``function`` is the CSV code f, g, t or s."""

    function: str
    n: int
    k: int
    value: int
    regime: str


def split_graph_base_edges(n: int, t: int) -> int:
    """Edges of the complete split graph: an (n-t)-clique joined to t isolated vertices."""
    return comb(n - t, 2) + t * (n - t)


def _validate(n: int, k: int) -> int:
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got n={n}")
    top = comb(n, 2)
    if not 1 <= k <= top:
        raise ValueError(f"k={k} outside 1..{top} for n={n}")
    return top


def min_edges_forcing(n: int, k: int) -> FormulaResult:
    top = _validate(n, k)
    if k <= top - 2 * n + 4:
        value = n + k - 2
        regime = "linear"
    else:
        # ceil((k - top)/2) with k - top <= 0 rounds toward zero
        value = top + (k - top + 1) // 2
        regime = "half-step"
    assert n - 1 <= value <= top
    return FormulaResult("f", n, k, value, regime)


def max_edges_capping(n: int, k: int) -> FormulaResult:
    top = _validate(n, k)
    if k == top:
        return FormulaResult("g", n, k, top, "complete")
    # The t-th window covers t-1 interior values and one right-edge value;
    # together the windows tile 1..top-1 exactly (asserted by tests).
    for t in range(n - 1, 1, -1):
        hi = split_graph_base_edges(n, t)
        lo = hi - t + 1
        if lo <= k < hi:
            return FormulaResult("g", n, k, k + t - 1, f"interior(t={t})")
        if k == hi:
            return FormulaResult("g", n, k, k + t - 2, f"edge(t={t})")
    raise AssertionError(f"window tiling failed to place k={k} for n={n}")


def min_edges_reaching(n: int, k: int) -> FormulaResult:
    _validate(n, k)
    if k == 1:
        return FormulaResult("t", n, 1, n - 1, "minimum-connected")
    inner = max_edges_capping(n, k - 1)
    value = inner.value + 1
    assert n - 1 <= value <= comb(n, 2)
    return FormulaResult("t", n, k, value, f"cap-shift({inner.regime})")


def max_edges_within(n: int, k: int) -> FormulaResult:
    top = _validate(n, k)
    if k == top:
        return FormulaResult("s", n, k, top, "complete")
    inner = min_edges_forcing(n, k + 1)
    value = inner.value - 1
    assert 0 <= value <= top
    return FormulaResult("s", n, k, value, f"force-shift({inner.regime})")


_FUNCTIONS = {
    "f": min_edges_forcing,
    "g": max_edges_capping,
    "t": min_edges_reaching,
    "s": max_edges_within,
}


def table_rows(code: str, n: int) -> list[FormulaResult]:
    """All cells of one table for fixed n, k = 1..C(n,2)."""
    if code not in _FUNCTIONS:
        raise ValueError(f"unknown table {code!r}; choose one of f, g, t, s")
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got n={n}")
    fn = _FUNCTIONS[code]
    return [fn(n, k) for k in range(1, comb(n, 2) + 1)]
